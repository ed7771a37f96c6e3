// Exact arithmetic in Q(zeta_b) with zeta_b = exp(2*pi*i/b), plus certified
// sign determination of elements fixed by complex conjugation.

#pragma once

#include <memory>
#include <vector>

#include "concordia/poly.hpp"
#include "concordia/rational.hpp"

namespace concordia {

// Shared context for a fixed conductor b: the cyclotomic polynomial and the
// reduction of powers zeta^k for k up to 2*phi(b).
class CycloField {
public:
    explicit CycloField(int b);

    int conductor() const { return b_; }
    int degree() const { return phi_; }
    const IntPoly& modulus() const { return phi_poly_; }
    // zeta^k as a coefficient vector in the power basis 1, zeta, ..., zeta^(phi-1).
    const std::vector<Rational>& power(int k) const;

private:
    int b_;
    int phi_;
    IntPoly phi_poly_;
    std::vector<std::vector<Rational>> powers_;  // k = 0 .. 2*phi
};

class Cyclo {
public:
    Cyclo() = default;
    Cyclo(std::shared_ptr<const CycloField> f, std::vector<Rational> coeffs)
        : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static Cyclo zero(std::shared_ptr<const CycloField> f) { return Cyclo(std::move(f), {}); }
    static Cyclo from_rational(std::shared_ptr<const CycloField> f, Rational r);
    // zeta^k (k taken mod b, negatives allowed)
    static Cyclo zeta_power(std::shared_ptr<const CycloField> f, int k);

    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    std::shared_ptr<const CycloField> field() const { return field_; }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    Cyclo operator-() const;
    Cyclo conj() const;          // zeta -> zeta^{-1}
    Cyclo inverse() const;       // extended Euclid mod Phi_b
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    bool is_rational(Rational* out = nullptr) const;

    // Sign of a real element (must satisfy conj(x) == x) at the standard
    // embedding zeta = exp(2*pi*i*/b). Exact: zero test is symbolic, the sign
    // of a nonzero value is certified by interval refinement.
    int real_sign(int embedding_numerator = 1) const;

private:
    std::shared_ptr<const CycloField> field_;
    std::vector<Rational> c_;  // power-basis coefficients, trailing zeros trimmed
    void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
};

// Enclosure of cos(pi * a/b) as an exact rational interval of width <= 4^-prec.
void cos_pi_enclosure(long long a, long long b, int prec, Rational& lo, Rational& hi);

}  // namespace concordia
