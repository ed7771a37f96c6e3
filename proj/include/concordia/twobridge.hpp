// Two-bridge links S(p,q): continued fractions, 4-plat diagrams via rational
// tangles, the determinant square-class obstruction, and the torsion witness
// search (a prime p = 1 mod 4 with an odd q < p, p | q^2+1, p^2 not dividing).

#pragma once

#include <vector>

#include "concordia/link_core.hpp"

namespace concordia {

struct TwoBridge {
    long long p = 0, q = 0;

    TwoBridge(long long p_, long long q_);
    int component_count() const { return p % 2 == 0 ? 2 : 1; }
};

// Positive continued fraction of p/q (all entries >= 1); reconstructing the
// fraction round-trips.
std::vector<long long> cont_frac(long long p, long long q);

// Alternating 4-plat diagram of S(p,q); determinant p, component count by the
// parity of p. Marked component is the one through the smallest arc.
LinkDiagram twobridge_diagram(long long p, long long q);
LinkDiagram twobridge_diagram(const TwoBridge& b);

// Square-free part of n >= 1 as the sorted list of primes with odd exponent.
// Inputs above 2^32 are rejected (trial-division scale).
std::vector<long long> square_class(long long n);

struct WitnessCertificate {
    long long p = 0;             // prime, 1 mod 4
    long long q = 0;             // odd, 0 < q < p
    std::vector<long long> inputs;

    bool verify() const;  // all four divisibility conditions by direct arithmetic
};

// Smallest prime p = 1 mod 4 not dividing any q_i^2 + 1, with the smallest
// odd q < p such that p | q^2 + 1 but p^2 does not divide it.
WitnessCertificate torsion_witness(const std::vector<long long>& qs);

// number theory utilities
bool is_prime(long long n);
// square root of a modulo odd prime p (a must be a quadratic residue)
long long tonelli_shanks(long long a, long long p);

}  // namespace concordia
