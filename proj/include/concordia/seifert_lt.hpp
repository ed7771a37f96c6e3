// Seifert matrices of braid closures, Alexander polynomials, and exact
// Levine-Tristram signatures and nullities at roots of unity.

#pragma once

#include <optional>
#include <vector>

#include "concordia/cyclotomic.hpp"
#include "concordia/matrix.hpp"
#include "concordia/poly.hpp"

namespace concordia {

struct SeifertMatrix {
    IntMat m;        // Seifert pairing in a band basis
    int components = 1;
    int strands = 0;  // braid strands, when built from a braid

    int rank() const { return static_cast<int>(m.size()); }
};

// omega = exp(2*pi*i*a/b), 0 < a/b < 1.
struct RootOfUnity {
    long long a = 1, b = 2;

    RootOfUnity() = default;
    RootOfUnity(long long num, long long den);
    bool is_prime_power_order() const;  // reduced denominator a prime power
    double angle_fraction() const { return static_cast<double>(a) / static_cast<double>(b); }
    bool operator<(const RootOfUnity& o) const { return a * o.b < o.a * b; }
    bool operator==(const RootOfUnity& o) const { return a == o.a && b == o.b; }
};

// Seifert matrix of the closure of a braid word (nonzero integers, letter i
// meaning the i-th positive generator). Throws unavailable_error when the
// canonical Seifert surface is disconnected (some generator never occurs).
SeifertMatrix seifert_from_braid(const std::vector<int>& word);

// One-variable Alexander polynomial det(M - t M^T), normalized so the lowest
// degree is zero and the leading coefficient is positive.
IntPoly alexander(const SeifertMatrix& m);

struct LTValue {
    long long sigma = 0;
    long long nullity = 0;
};

// Signature and nullity of (1-conj(omega)) M + (1-omega) M^T, computed
// exactly over Q(zeta_b).
LTValue lt_signature_nullity(const SeifertMatrix& m, const RootOfUnity& omega);

// Non-certified floating-point cross-check of the same quantity.
LTValue lt_signature_nullity_numeric(const SeifertMatrix& m, const RootOfUnity& omega);

struct ProfileSample {
    RootOfUnity omega;
    long long sigma = 0;
    long long nullity = 0;
};

struct ProfileJump {
    // the jump sits strictly between these consecutive sampled angles
    RootOfUnity before, after;
    long long sigma_before = 0, sigma_after = 0;
};

struct SignatureProfile {
    std::vector<ProfileSample> samples;  // increasing angle in (0, 1/2], plus refinements
    std::vector<ProfileJump> jumps;
    IntPoly alexander;  // the polynomial whose unit-circle roots carry the jumps
};

// Sample sigma_omega over the open upper semicircle at angles j/(2*res) of a
// full turn, refined so consecutive samples bracket at most one root of the
// Alexander polynomial. By conjugation symmetry this determines the profile.
SignatureProfile signature_profile(const SeifertMatrix& m, int resolution);

// Unit-circle roots of the Alexander polynomial in the open upper semicircle,
// as isolating intervals for z = 2 cos(angle). Used by profile refinement.
std::vector<RootInterval> alexander_circle_roots(const IntPoly& alex);

}  // namespace concordia
