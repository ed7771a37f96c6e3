// Integer and rational polynomials: Laurent-normalized Alexander polynomials,
// cyclotomic polynomials, and Sturm-sequence root isolation on an interval.

#pragma once

#include <vector>
#include <string>

#include "concordia/rational.hpp"

namespace concordia {

// Dense integer polynomial, lowest degree first. No trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }
    static IntPoly constant(BigInt v) { return IntPoly(std::vector<BigInt>{std::move(v)}); }
    static IntPoly monomial(BigInt v, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigInt(0); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    // Exact division; throws if remainder nonzero.
    static IntPoly div_exact(const IntPoly& a, const IntPoly& b);

    BigInt eval(const BigInt& x) const;
    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<BigInt> c_;
    void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
};

// n-th cyclotomic polynomial, computed by the product-quotient recursion.
IntPoly cyclotomic_poly(int n);

// Dense rational polynomial, lowest degree first.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static RatPoly from_int(const IntPoly& p);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);

    RatPoly derivative() const;
    Rational eval(const Rational& x) const;

private:
    std::vector<Rational> c_;
    void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
};

// Isolating intervals (lo, hi] for the distinct real roots of p in (lo, hi],
// by Sturm's theorem with exact rational endpoints.
struct RootInterval {
    Rational lo, hi;   // root lies in (lo, hi]
};
std::vector<RootInterval> isolate_roots(const RatPoly& p, const Rational& lo, const Rational& hi);

}  // namespace concordia
