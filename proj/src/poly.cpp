#include "concordia/poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace concordia {

IntPoly IntPoly::monomial(BigInt v, int deg) {
    std::vector<BigInt> c(deg + 1, BigInt(0));
    c[deg] = std::move(v);
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] -= b.c_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("IntPoly: division by zero");
    std::vector<BigInt> rem = a.c_;
    int db = b.degree();
    if (a.degree() < db) {
        if (a.is_zero()) return IntPoly();
        throw std::domain_error("IntPoly: inexact division");
    }
    std::vector<BigInt> q(a.degree() - db + 1, BigInt(0));
    for (int i = a.degree(); i >= db; --i) {
        BigInt cur = rem[i];
        if (cur.is_zero()) continue;
        BigInt qi, r;
        BigInt::divmod(cur, b.c_[db], qi, r);
        if (!r.is_zero()) throw std::domain_error("IntPoly: inexact leading division");
        q[i - db] = qi;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= qi * b.c_[j];
    }
    for (const auto& v : rem)
        if (!v.is_zero()) throw std::domain_error("IntPoly: nonzero remainder");
    return IntPoly(std::move(q));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += c_[i].is_negative() ? " - " : " + ";
        else if (c_[i].is_negative()) s += "-";
        BigInt mag = c_[i].abs();
        bool unit = mag == BigInt(1) && i > 0;
        if (!unit) s += mag.to_string();
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

IntPoly cyclotomic_poly(int n) {
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1
    std::vector<BigInt> xn(n + 1, BigInt(0));
    xn[0] = BigInt(-1);
    xn[n] = BigInt(1);
    IntPoly p(std::move(xn));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = IntPoly::div_exact(p, cyclotomic_poly(d));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, p);
    return p;
}

RatPoly RatPoly::from_int(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] -= b.c_[i];
    }
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw std::domain_error("RatPoly: division by zero");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    std::vector<Rational> qc(a.degree() >= db ? a.degree() - db + 1 : 0);
    for (int i = a.degree(); i >= db; --i) {
        Rational cur = rem[i];
        if (cur.is_zero()) continue;
        Rational qi = cur / b.c_[db];
        qc[i - db] = qi;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= qi * b.c_[j];
    }
    q = RatPoly(std::move(qc));
    r = RatPoly(std::move(rem));
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long long>(i));
    return RatPoly(std::move(c));
}

Rational RatPoly::eval(const Rational& x) const {
    Rational r;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

namespace {

// Sturm chain of p (square-free part taken by the caller if needed).
std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        RatPoly q, r;
        RatPoly::divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.is_zero()) break;
        chain.push_back(RatPoly() - r);
    }
    return chain;
}

int sign_changes(const std::vector<RatPoly>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& q : chain) {
        int s = q.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

void isolate_rec(const std::vector<RatPoly>& chain, const Rational& lo, const Rational& hi,
                 int nlo, int nhi, std::vector<RootInterval>& out) {
    int count = nlo - nhi;  // roots in (lo, hi]
    if (count <= 0) return;
    if (count == 1) { out.push_back({lo, hi}); return; }
    Rational mid = (lo + hi) * Rational(BigInt(1), BigInt(2));
    int nmid = sign_changes(chain, mid);
    isolate_rec(chain, lo, mid, nlo, nmid, out);
    isolate_rec(chain, mid, hi, nmid, nhi, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const RatPoly& p, const Rational& lo, const Rational& hi) {
    std::vector<RootInterval> out;
    if (p.is_zero() || p.degree() == 0) return out;
    // Remove repeated roots: divide by gcd(p, p').
    RatPoly a = p, b = p.derivative();
    while (!b.is_zero()) {
        RatPoly q, r;
        RatPoly::divmod(a, b, q, r);
        a = b;
        b = r;
    }
    RatPoly sf = p;
    if (a.degree() > 0) {
        RatPoly q, r;
        RatPoly::divmod(p, a, q, r);
        sf = q;
    }
    auto chain = sturm_chain(sf);
    isolate_rec(chain, lo, hi, sign_changes(chain, lo), sign_changes(chain, hi), out);
    return out;
}

}  // namespace concordia
