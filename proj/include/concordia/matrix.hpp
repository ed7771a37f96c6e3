// Small dense integer matrices with exact determinant/rank, Hermite reduction
// for lattice quotients, and integral congruence testing of definite forms.

#pragma once

#include <vector>

#include "concordia/bigint.hpp"
#include "concordia/rational.hpp"

namespace concordia {

using IntMat = std::vector<std::vector<long long>>;
using IntVec = std::vector<long long>;

inline int mat_rows(const IntMat& m) { return static_cast<int>(m.size()); }
inline int mat_cols(const IntMat& m) { return m.empty() ? 0 : static_cast<int>(m[0].size()); }
IntMat mat_identity(int n);
IntMat mat_transpose(const IntMat& m);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_apply(const IntMat& a, const IntVec& v);
bool mat_is_symmetric(const IntMat& m);

BigInt mat_det(const IntMat& m);
int mat_rank(const IntMat& m);

// Signature data of a symmetric integer matrix, by exact rational LDL with
// symmetric pivoting (hyperbolic 2x2 blocks when all remaining diagonals vanish).
struct SymSig {
    int pos = 0, neg = 0, nul = 0;
};
SymSig symmetric_signature(const IntMat& m);

// Column-style Hermite form: returns upper-triangular H with positive diagonal
// whose columns generate the same lattice as the columns of m (m square, nonsingular).
std::vector<std::vector<BigInt>> hermite_form(const IntMat& m);

// Reduce v modulo the lattice spanned by the columns of H (upper triangular,
// positive diagonal): canonical residue with 0 <= r_i < H_ii contribution order.
std::vector<BigInt> hermite_reduce(const std::vector<std::vector<BigInt>>& H, std::vector<BigInt> v);

// Decide integral congruence U^T A U = B for definite symmetric matrices of
// equal rank and determinant, by backtracking over norm-matching images.
bool integrally_congruent(const IntMat& a, const IntMat& b);

}  // namespace concordia
