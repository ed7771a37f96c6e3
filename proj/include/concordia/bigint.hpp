// Arbitrary-precision signed integers, sized for exact small-matrix algebra.
// Magnitude is a little-endian vector of 32-bit limbs.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <compare>
#include <string>
#include <vector>
#include <stdexcept>

namespace concordia {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { neg_ = true; }
        unsigned long long u = neg_ ? 0ULL - static_cast<unsigned long long>(v)
                                    : static_cast<unsigned long long>(v);
        while (u) { limbs_.push_back(static_cast<uint32_t>(u & 0xffffffffu)); u >>= 32; }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    // Comparison of magnitudes, then full comparison.
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static int cmp(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    BigInt operator-() const { BigInt r = *this; if (!r.is_zero()) r.neg_ = !r.neg_; return r; }
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // Truncated division (C semantics: quotient rounds toward zero).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b) { BigInt q, r; divmod(a, b, q, r); return q; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { BigInt q, r; divmod(a, b, q, r); return r; }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    BigInt abs() const { BigInt r = *this; r.neg_ = false; return r; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    static BigInt gcd(BigInt a, BigInt b);

    // Fits in long long? (used by callers that want machine ints back)
    bool fits_ll() const;
    long long to_ll() const;
    double to_double() const;
    std::string to_string() const;

private:
    bool neg_ = false;
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros

    void trim() { while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back(); if (limbs_.empty()) neg_ = false; }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b); // requires a >= b
};

}  // namespace concordia
