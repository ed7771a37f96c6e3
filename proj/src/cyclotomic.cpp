#include "concordia/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace concordia {

namespace {
int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}
}  // namespace

CycloField::CycloField(int b) : b_(b), phi_(euler_phi(b)), phi_poly_(cyclotomic_poly(b)) {
    if (b < 2) throw std::invalid_argument("CycloField: conductor must be >= 2");
    // Reduce x^k mod Phi_b for k = 0 .. 2*phi.
    powers_.resize(2 * phi_ + 1);
    std::vector<Rational> cur(phi_, Rational());
    cur[0] = Rational(1);
    powers_[0] = cur;
    // Phi monic of degree phi: x^phi = -(lower part)
    std::vector<Rational> xphi(phi_);
    for (int i = 0; i < phi_; ++i) xphi[i] = Rational(BigInt(0) - phi_poly_.coeff(i));
    for (int k = 1; k <= 2 * phi_; ++k) {
        std::vector<Rational> nxt(phi_, Rational());
        // multiply cur by x
        Rational top = cur[phi_ - 1];
        for (int i = phi_ - 1; i > 0; --i) nxt[i] = cur[i - 1];
        nxt[0] = Rational();
        if (!top.is_zero())
            for (int i = 0; i < phi_; ++i) nxt[i] += top * xphi[i];
        powers_[k] = nxt;
        cur = std::move(nxt);
    }
}

const std::vector<Rational>& CycloField::power(int k) const {
    return powers_.at(static_cast<size_t>(k));
}

Cyclo Cyclo::from_rational(std::shared_ptr<const CycloField> f, Rational r) {
    std::vector<Rational> c(1, std::move(r));
    return Cyclo(std::move(f), std::move(c));
}

Cyclo Cyclo::zeta_power(std::shared_ptr<const CycloField> f, int k) {
    int b = f->conductor();
    k %= b;
    if (k < 0) k += b;
    int phi = f->degree();
    std::vector<Rational> c(phi, Rational());
    if (k < phi) {
        c[k] = Rational(1);
    } else {
        // expand via repeated reduction: x^k = x^(phi-1) * x^(k-phi+1) ... simpler:
        // walk up with the precomputed table when k <= 2*phi, else fold by powers.
        std::vector<Rational> cur = f->power(std::min(k, 2 * phi));
        int rem = k - std::min(k, 2 * phi);
        Cyclo acc(f, cur);
        while (rem > 0) {
            int step = std::min(rem, phi);
            acc = acc * Cyclo(f, f->power(step));
            rem -= step;
        }
        return acc;
    }
    return Cyclo(std::move(f), std::move(c));
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    auto f = a.field_ ? a.field_ : b.field_;
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Cyclo(f, std::move(c));
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    auto f = a.field_ ? a.field_ : b.field_;
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] -= b.c_[i];
    }
    return Cyclo(f, std::move(c));
}

Cyclo Cyclo::operator-() const {
    std::vector<Rational> c = c_;
    for (auto& v : c) v = -v;
    return Cyclo(field_, std::move(c));
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    auto f = a.field_ ? a.field_ : b.field_;
    if (!f || a.is_zero() || b.is_zero()) return Cyclo::zero(f);
    int phi = f->degree();
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            prod[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<Rational> out(phi);
    for (size_t k = 0; k < prod.size(); ++k) {
        if (prod[k].is_zero()) continue;
        const auto& pk = f->power(static_cast<int>(k));
        for (int i = 0; i < phi; ++i)
            if (!pk[i].is_zero()) out[i] += prod[k] * pk[i];
    }
    return Cyclo(f, std::move(out));
}

Cyclo Cyclo::conj() const {
    if (!field_ || is_zero()) return *this;
    int b = field_->conductor();
    Cyclo acc = Cyclo::zero(field_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Cyclo term = zeta_power(field_, static_cast<int>((b - i) % b));
        std::vector<Rational> tc = term.c_;
        for (auto& v : tc) v = v * c_[i];
        acc = acc + Cyclo(field_, std::move(tc));
    }
    return acc;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: inverse of zero");
    // Extended Euclid in Q[x]: u * self + v * Phi = gcd = const.
    RatPoly a(std::vector<Rational>(c_.begin(), c_.end()));
    RatPoly b = RatPoly::from_int(field_->modulus());
    RatPoly r0 = b, r1 = a;
    RatPoly s0, s1(std::vector<Rational>{Rational(1)});  // coefficients of `a`
    while (true) {
        RatPoly q, r;
        RatPoly::divmod(r0, r1, q, r);
        if (r.is_zero()) break;
        RatPoly s2 = s0 - q * s1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
    }
    if (r1.degree() != 0) throw std::domain_error("Cyclo: not invertible (modulus not coprime)");
    Rational lead = r1.coeffs()[0];
    std::vector<Rational> inv_c = s1.coeffs();
    for (auto& v : inv_c) v /= lead;
    // Reduce mod Phi (degree should already be < phi, but normalize defensively).
    Cyclo result = Cyclo::zero(field_);
    for (size_t k = 0; k < inv_c.size(); ++k) {
        if (inv_c[k].is_zero()) continue;
        Cyclo term = zeta_power(field_, static_cast<int>(k));
        std::vector<Rational> tc = term.c_;
        for (auto& v : tc) v = v * inv_c[k];
        result = result + Cyclo(field_, std::move(tc));
    }
    return result;
}

bool Cyclo::is_rational(Rational* out) const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    if (out) *out = c_.empty() ? Rational() : c_[0];
    return true;
}

void cos_pi_enclosure(long long a, long long b, int prec, Rational& lo, Rational& hi) {
    if (b <= 0) throw std::invalid_argument("cos_pi_enclosure: bad denominator");
    // Reduce a/b mod 2 into [0,2), then fold into [0, 1/2] with sign bookkeeping.
    long long m = ((a % (2 * b)) + 2 * b) % (2 * b);
    bool negate = false;
    if (2 * m > 2 * b) m = 2 * b - m;             // cos(pi x) = cos(pi(2-x))
    if (2 * m > b) { m = b - m; negate = true; }  // cos(pi x) = -cos(pi(1-x))

    // pi to 100 decimal digits; enough for any precision we escalate to.
    static const BigInt kPi = BigInt::from_string(
        "31415926535897932384626433832795028841971693993751"
        "058209749445923078164062862089986280348253421170679");
    static const BigInt kPiScale = [] {
        BigInt t(1);
        for (int i = 0; i < 100; ++i) t = t * BigInt(10);
        return t;
    }();

    int digits = std::min(std::max(prec, 12), 90);
    BigInt S(1);
    for (int i = 0; i < digits; ++i) S = S * BigInt(10);

    // fixed-point interval for y = pi*m/b in [0, pi/2], scaled by S
    BigInt ylo = (kPi * BigInt(m) * S) / (kPiScale * BigInt(b));
    BigInt yhi = ylo + BigInt(2);

    auto floor_div = [](const BigInt& x, const BigInt& d) { return x / d; };
    auto ceil_div = [](const BigInt& x, const BigInt& d) { return (x + d - BigInt(1)) / d; };

    BigInt y2lo = floor_div(ylo * ylo, S);
    BigInt y2hi = ceil_div(yhi * yhi, S);

    // cos(y) = sum (-1)^k y^(2k) / (2k)! as an alternating interval series
    BigInt tlo = S, thi = S;  // term_0 = 1
    BigInt slo = S, shi = S;
    int k = 0;
    while (true) {
        ++k;
        BigInt d(static_cast<long long>(2 * k - 1) * (2 * k));
        tlo = floor_div(floor_div(tlo * y2lo, S), d);
        thi = ceil_div(ceil_div(thi * y2hi, S), d);
        if (k % 2 == 1) { slo = slo - thi; shi = shi - tlo; }
        else            { slo = slo + tlo; shi = shi + thi; }
        // remainder of the alternating series is bounded by the next term
        BigInt next_hi = ceil_div(ceil_div(thi * y2hi, S), BigInt(static_cast<long long>(2 * k + 1) * (2 * k + 2)));
        if ((k >= 2 && next_hi < BigInt(4)) || k > 80) {
            slo = slo - next_hi - BigInt(2);
            shi = shi + next_hi + BigInt(2);
            break;
        }
    }
    lo = Rational(slo, S);
    hi = Rational(shi, S);
    if (negate) {
        Rational nlo = -hi, nhi = -lo;
        lo = nlo;
        hi = nhi;
    }
}

namespace {

// Directed-rounding double interval, padded after every operation.
struct DIv {
    double lo = 0, hi = 0;
    static double down(double x) { return std::nextafter(std::nextafter(x, -1e308), -1e308); }
    static double up(double x) { return std::nextafter(std::nextafter(x, 1e308), 1e308); }
};

DIv rational_enclosure(const Rational& r) {
    double n = r.num().to_double(), d = r.den().to_double();
    double v = n / d;
    double pad = std::fabs(v) * 1e-12 + 1e-300;
    return {DIv::down(v - pad), DIv::up(v + pad)};
}

DIv cos_enclosure_double(long long a, long long b) {
    // cos(2*pi*a/b) with generous padding for argument and libm error
    const double pi = 3.14159265358979323846;
    double theta = 2.0 * pi * (static_cast<double>(a) / static_cast<double>(b));
    double v = std::cos(theta);
    double pad = 1e-9;
    return {DIv::down(v - pad), DIv::up(v + pad)};
}

}  // namespace

int Cyclo::real_sign(int embedding_numerator) const {
    if (is_zero()) return 0;
    if (!field_) return c_.empty() ? 0 : c_[0].sign();
    Rational r;
    if (is_rational(&r)) return r.sign();
    int b = field_->conductor();

    // fast certified path in double intervals
    {
        double lo = 0, hi = 0;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            DIv coef = rational_enclosure(c_[i]);
            DIv cosv = cos_enclosure_double(embedding_numerator * static_cast<long long>(i), b);
            double cands[4] = {coef.lo * cosv.lo, coef.lo * cosv.hi, coef.hi * cosv.lo,
                               coef.hi * cosv.hi};
            double tlo = cands[0], thi = cands[0];
            for (double c : cands) { tlo = std::min(tlo, c); thi = std::max(thi, c); }
            lo = DIv::down(lo + tlo);
            hi = DIv::up(hi + thi);
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }

    // exact fixed-point escalation
    for (int digits : {24, 48, 90}) {
        Rational lo, hi;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            Rational clo, chi;
            cos_pi_enclosure(2LL * embedding_numerator * static_cast<long long>(i), b, digits, clo, chi);
            Rational tlo, thi;
            if (c_[i].sign() > 0) { tlo = c_[i] * clo; thi = c_[i] * chi; }
            else                  { tlo = c_[i] * chi; thi = c_[i] * clo; }
            if (first) { lo = tlo; hi = thi; first = false; }
            else { lo += tlo; hi += thi; }
        }
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
    }
    throw std::runtime_error("Cyclo::real_sign: could not certify sign (element may be imaginary)");
}

}  // namespace concordia
