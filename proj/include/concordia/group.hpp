// Formal Z-linear combinations of marked links, their obstruction vectors,
// nontriviality certificates, and independence-rank lower bounds.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concordia/bigint.hpp"
#include "concordia/describe.hpp"
#include "concordia/seifert_lt.hpp"

namespace concordia {

struct FormalSummand {
    LinkInput link;
    long long mult = 1;
};

struct FormalClass {
    std::vector<FormalSummand> summands;  // canonical: merged by diagram, nonzero mult
    OrientationMode mode = OrientationMode::MarkedOriented;

    bool is_empty() const { return summands.empty(); }
};

FormalClass make_class(std::vector<FormalSummand> summands);
FormalClass class_sum(const FormalClass& a, const FormalClass& b);
FormalClass class_neg(const FormalClass& a);

struct OmegaEntry {
    RootOfUnity omega{1, 2};
    long long sigma = 0;
    long long nullity = 0;     // summed nullity; sigma row is a homomorphism only when 0
    bool prime_power = false;  // advisory flag otherwise
};

struct ObstructionVector {
    OrientationMode mode = OrientationMode::MarkedOriented;
    long long linking = 0;  // l-tilde, or l mod 2 in partly mode
    int mu = 0;
    bool det_defined = false;
    BigInt det;                                  // product over summands
    std::vector<long long> square_class;         // primes with odd exponent
    bool sigma_defined = false;
    long long sigma = 0;
    bool delta_defined = false;
    long long delta = 0;
    std::string delta_reason;                    // set when delta is unavailable
    bool lt_defined = false;                     // all summands braid-backed
    std::vector<OmegaEntry> lt;
};

// Default sample set: omega_j = exp(i pi (2j-1) / (2B)), j = 1..B.
std::vector<RootOfUnity> default_omega_samples(int B = 12);

ObstructionVector obstruction_vector(const FormalClass& a, const std::vector<RootOfUnity>& omegas);

struct Certificate {
    bool found = false;
    std::string witness;  // human-readable first nonzero entry, by fixed priority
};
Certificate nontriviality_certificate(const FormalClass& a, const std::vector<RootOfUnity>& omegas);

struct RankCertificates {
    std::vector<std::string> free_rows;   // names of the witnessing homomorphism rows
    std::vector<int> free_cols;           // indices of the witnessing classes
    std::string free_minor;               // the nonzero minor
    std::vector<long long> torsion_primes;  // pivot primes of the F2 matrix
    std::vector<int> torsion_cols;
};

struct RankResult {
    int free_rank = 0;
    int two_torsion_rank = 0;
    RankCertificates cert;
};

RankResult independence_rank(const std::vector<FormalClass>& classes,
                             const std::vector<RootOfUnity>& omegas);

// [L] -> ([marked component], [-K # L]); the two parts sum to the class of L.
std::pair<FormalClass, FormalClass> split_class(const LinkInput& link);

}  // namespace concordia
