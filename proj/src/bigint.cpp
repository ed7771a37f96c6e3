#include "concordia/bigint.hpp"

namespace concordia {

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (neg && !r.is_zero()) r.neg_ = true;
    return r;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.neg_ != b.neg_) return a.neg_ ? -1 : 1;
    int c = cmp_mag(a, b);
    return a.neg_ ? -c : c;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t s = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) { s += (1LL << 32); borrow = 1; } else borrow = 0;
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.neg_ == b.neg_) {
        r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        r.neg_ = a.neg_;
    } else {
        int c = BigInt::cmp_mag(a, b);
        if (c == 0) return BigInt();
        if (c > 0) { r.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_); r.neg_ = a.neg_; }
        else       { r.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_); r.neg_ = b.neg_; }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.neg_ = a.neg_ != b.neg_;
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    q = BigInt(); r = BigInt();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.limbs_.size() == 1) {
        // single-limb fast path
        uint64_t d = b.limbs_[0];
        q.limbs_.assign(a.limbs_.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a.limbs_[i];
            q.limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        if (rem) r.limbs_.push_back(static_cast<uint32_t>(rem));
    } else {
        // Knuth algorithm D on 32-bit limbs
        int shift = 0;
        {
            uint32_t top = b.limbs_.back();
            while (!(top & 0x80000000u)) { top <<= 1; ++shift; }
        }
        auto shl = [&](const std::vector<uint32_t>& src) {
            std::vector<uint32_t> out(src.size() + 1, 0);
            for (size_t i = 0; i < src.size(); ++i) {
                out[i] |= src[i] << shift;
                if (shift) out[i + 1] = src[i] >> (32 - shift);
            }
            while (!out.empty() && out.back() == 0) out.pop_back();
            return out;
        };
        std::vector<uint32_t> u = shl(a.limbs_), v = shl(b.limbs_);
        size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        q.limbs_.assign(m + 1, 0);
        const uint64_t B = 1ULL << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= B ||
                   (n >= 2 && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= B) break;
            }
            // multiply and subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
                if (t < 0) { t += static_cast<int64_t>(B); borrow = 1; } else borrow = 0;
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large: add back
                t += static_cast<int64_t>(B);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
                    c2 = s >> 32;
                }
                t += static_cast<int64_t>(c2);
                t &= static_cast<int64_t>(B) - 1;
            }
            u[j + n] = static_cast<uint32_t>(t);
            q.limbs_[j] = static_cast<uint32_t>(qhat);
        }
        // remainder: shift u back down
        u.resize(n);
        if (shift) {
            for (size_t i = 0; i < n; ++i) {
                u[i] >>= shift;
                if (i + 1 < n) u[i] |= u[i + 1] << (32 - shift);
            }
        }
        r.limbs_ = std::move(u);
    }
    q.trim(); r.trim();
    q.neg_ = !q.is_zero() && (a.neg_ != b.neg_);
    r.neg_ = !r.is_zero() && a.neg_;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false; b.neg_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

bool BigInt::fits_ll() const {
    if (limbs_.size() < 2) return true;
    if (limbs_.size() > 2) return false;
    uint64_t mag = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return neg_ ? mag <= (1ULL << 63) : mag < (1ULL << 63);
}

long long BigInt::to_ll() const {
    if (!fits_ll()) throw std::overflow_error("BigInt: out of long long range");
    uint64_t mag = 0;
    if (limbs_.size() > 0) mag |= limbs_[0];
    if (limbs_.size() > 1) mag |= static_cast<uint64_t>(limbs_[1]) << 32;
    return neg_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

double BigInt::to_double() const {
    double v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return neg_ ? -v : v;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt t = *this;
    t.neg_ = false;
    std::string digits;
    BigInt ten(10);
    while (!t.is_zero()) {
        BigInt q, r;
        divmod(t, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
        t = q;
    }
    if (neg_) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

}  // namespace concordia
