#include "concordia/matrix.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace concordia {

IntMat mat_identity(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_transpose(const IntMat& m) {
    IntMat t(mat_cols(m), IntVec(mat_rows(m)));
    for (int i = 0; i < mat_rows(m); ++i)
        for (int j = 0; j < mat_cols(m); ++j) t[j][i] = m[i][j];
    return t;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (mat_cols(a) != mat_rows(b)) throw std::invalid_argument("mat_mul: shape mismatch");
    IntMat c(mat_rows(a), IntVec(mat_cols(b), 0));
    for (int i = 0; i < mat_rows(a); ++i)
        for (int k = 0; k < mat_cols(a); ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < mat_cols(b); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

IntVec mat_apply(const IntMat& a, const IntVec& v) {
    IntVec r(mat_rows(a), 0);
    for (int i = 0; i < mat_rows(a); ++i)
        for (int j = 0; j < mat_cols(a); ++j) r[i] += a[i][j] * v[j];
    return r;
}

bool mat_is_symmetric(const IntMat& m) {
    if (mat_rows(m) != mat_cols(m)) return false;
    for (int i = 0; i < mat_rows(m); ++i)
        for (int j = i + 1; j < mat_cols(m); ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

namespace {
std::vector<std::vector<BigInt>> to_big(const IntMat& m) {
    std::vector<std::vector<BigInt>> b(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (auto v : m[i]) b[i].emplace_back(v);
    return b;
}
}  // namespace

BigInt mat_det(const IntMat& m) {
    int n = mat_rows(m);
    if (n != mat_cols(m)) throw std::invalid_argument("mat_det: not square");
    if (n == 0) return BigInt(1);
    auto a = to_big(m);
    // Bareiss fraction-free elimination with row pivoting.
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!a[i][k].is_zero()) { piv = i; break; }
        if (piv < 0) return BigInt(0);
        if (piv != k) { std::swap(a[piv], a[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                BigInt q, r;
                BigInt::divmod(num, prev, q, r);
                a[i][j] = q;  // Bareiss division is exact
            }
            a[i][k] = BigInt(0);
        }
        prev = a[k][k];
    }
    BigInt d = a[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

int mat_rank(const IntMat& m) {
    auto a = to_big(m);
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (!a[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int i = rank + 1; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            BigInt f1 = a[rank][col], f2 = a[i][col];
            for (int j = col; j < cols; ++j) a[i][j] = a[i][j] * f1 - a[rank][j] * f2;
        }
        ++rank;
    }
    return rank;
}

SymSig symmetric_signature(const IntMat& m) {
    int n = mat_rows(m);
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(BigInt(m[i][j]));
    std::vector<bool> done(n, false);
    SymSig sig;
    int remaining = n;
    while (remaining > 0) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && !a[i][i].is_zero()) { p = i; break; }
        if (p >= 0) {
            int s = a[p][p].sign();
            (s > 0 ? sig.pos : sig.neg)++;
            done[p] = true;
            --remaining;
            for (int i = 0; i < n; ++i) {
                if (done[i] || a[i][p].is_zero()) continue;
                Rational f = a[i][p] / a[p][p];
                for (int j = 0; j < n; ++j) {
                    if (done[j]) continue;
                    a[i][j] -= f * a[p][j];
                }
            }
            for (int i = 0; i < n; ++i)
                if (!done[i]) { a[i][p] = Rational(); a[p][i] = Rational(); }
            continue;
        }
        // All remaining diagonals vanish; find an off-diagonal entry.
        int bi = -1, bj = -1;
        for (int i = 0; i < n && bi < 0; ++i) {
            if (done[i]) continue;
            for (int j = i + 1; j < n; ++j)
                if (!done[j] && !a[i][j].is_zero()) { bi = i; bj = j; break; }
        }
        if (bi < 0) { sig.nul += remaining; break; }
        // Hyperbolic pair [0 h; h 0]: contributes one +1 and one -1.
        sig.pos++; sig.neg++;
        Rational h = a[bi][bj];
        done[bi] = done[bj] = true;
        remaining -= 2;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            Rational ci = a[i][bi], cj = a[i][bj];
            if (ci.is_zero() && cj.is_zero()) continue;
            // Row i minus combinations clearing columns bi, bj against the block.
            for (int j = 0; j < n; ++j) {
                if (done[j]) continue;
                a[i][j] -= (ci * a[bj][j] + cj * a[bi][j]) / h;
            }
        }
        for (int i = 0; i < n; ++i)
            if (!done[i]) { a[i][bi] = a[i][bj] = a[bi][i] = a[bj][i] = Rational(); }
    }
    return sig;
}

std::vector<std::vector<BigInt>> hermite_form(const IntMat& m) {
    int n = mat_rows(m);
    if (n != mat_cols(m)) throw std::invalid_argument("hermite_form: not square");
    auto a = to_big(m);  // we column-reduce a working copy
    // Work on columns: bring to upper triangular via integer column ops,
    // eliminating below-diagonal entries from the bottom row up.
    for (int row = n - 1; row >= 0; --row) {
        int lead = row;  // target column index equals row for upper-triangular result
        // gcd-out entries a[row][0..row] into column `row`
        for (int col = 0; col < lead; ++col) {
            while (!a[row][col].is_zero()) {
                if (a[row][lead].is_zero()) {
                    for (int i = 0; i < n; ++i) std::swap(a[i][col], a[i][lead]);
                    continue;
                }
                BigInt q = a[row][col] / a[row][lead];
                for (int i = 0; i < n; ++i) a[i][col] -= q * a[i][lead];
                if (!a[row][col].is_zero()) {
                    for (int i = 0; i < n; ++i) std::swap(a[i][col], a[i][lead]);
                }
            }
        }
        if (a[row][lead].is_negative())
            for (int i = 0; i < n; ++i) a[i][lead] = -a[i][lead];
        if (a[row][lead].is_zero()) throw std::invalid_argument("hermite_form: singular matrix");
        // Reduce columns to the right of `lead` on this row.
        for (int col = lead + 1; col < n; ++col) {
            BigInt q, r;
            BigInt::divmod(a[row][col], a[row][lead], q, r);
            if (r.is_negative()) q -= BigInt(1);
            for (int i = 0; i < n; ++i) a[i][col] -= q * a[i][lead];
        }
    }
    return a;
}

std::vector<BigInt> hermite_reduce(const std::vector<std::vector<BigInt>>& H, std::vector<BigInt> v) {
    int n = static_cast<int>(H.size());
    for (int row = n - 1; row >= 0; --row) {
        BigInt q, r;
        BigInt::divmod(v[row], H[row][row], q, r);
        if (r.is_negative()) q -= BigInt(1);
        if (!q.is_zero())
            for (int i = 0; i <= row; ++i) v[i] -= q * H[i][row];
    }
    return v;
}

namespace {

// All x with x^T A x == target for positive definite A, |entries| bounded by
// the Cholesky box. Small ranks only.
void enum_norm_rec(const std::vector<std::vector<Rational>>& L, const std::vector<Rational>& D,
                   int k, IntVec& x, Rational remaining,
                   const IntMat& a, long long target, std::vector<IntVec>& out) {
    int n = static_cast<int>(D.size());
    if (k < 0) {
        long long q = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q += x[i] * a[i][j] * x[j];
        if (q == target) out.push_back(x);
        return;
    }
    // Bound |x_k + sum_{j>k} L[j][k] x_j| <= sqrt(remaining / D[k])
    Rational center;
    for (int j = k + 1; j < n; ++j) center += L[j][k] * Rational(BigInt(x[j]));
    // enumerate integer x_k with D[k]*(x_k+center)^2 <= remaining
    for (long long v = -64; v <= 64; ++v) {  // generous hard cap; pruned below
        Rational t = Rational(BigInt(v)) + center;
        Rational used = D[k] * t * t;
        if (used > remaining) continue;
        x[k] = v;
        enum_norm_rec(L, D, k - 1, x, remaining - used, a, target, out);
    }
    x[k] = 0;
}

// Rational LDL^T of a positive definite matrix.
bool ldl(const IntMat& a, std::vector<std::vector<Rational>>& L, std::vector<Rational>& D) {
    int n = mat_rows(a);
    L.assign(n, std::vector<Rational>(n));
    D.assign(n, Rational());
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = Rational(BigInt(a[i][j]));
    for (int k = 0; k < n; ++k) {
        D[k] = w[k][k];
        if (D[k].sign() <= 0) return false;
        L[k][k] = Rational(1);
        for (int i = k + 1; i < n; ++i) L[i][k] = w[i][k] / D[k];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) w[i][j] -= L[i][k] * L[j][k] * D[k];
    }
    return true;
}

std::vector<IntVec> vectors_of_norm(const IntMat& a, long long target) {
    int n = mat_rows(a);
    std::vector<std::vector<Rational>> L;
    std::vector<Rational> D;
    if (!ldl(a, L, D)) throw std::invalid_argument("vectors_of_norm: not positive definite");
    std::vector<IntVec> out;
    IntVec x(n, 0);
    enum_norm_rec(L, D, n - 1, x, Rational(BigInt(target)), a, target, out);
    return out;
}

}  // namespace

bool integrally_congruent(const IntMat& a_in, const IntMat& b_in) {
    int n = mat_rows(a_in);
    if (mat_rows(b_in) != n) return false;
    if (n == 0) return true;
    IntMat a = a_in, b = b_in;
    // Normalize to positive definite: both must share definiteness sign.
    SymSig sa = symmetric_signature(a), sb = symmetric_signature(b);
    if (sa.nul || sb.nul) throw std::invalid_argument("integrally_congruent: degenerate form");
    if (sa.pos != sb.pos || sa.neg != sb.neg) return false;
    if (sa.pos != n && sa.neg != n) throw std::invalid_argument("integrally_congruent: indefinite form");
    if (sa.neg == n) {
        for (auto& row : a) for (auto& v : row) v = -v;
        for (auto& row : b) for (auto& v : row) v = -v;
    }
    if (mat_det(a) != mat_det(b)) return false;
    // Backtrack: choose image u_j of basis vector j with u_j^T A u_j = B_jj
    // and u_i^T A u_j = B_ij for i < j.
    std::vector<std::vector<IntVec>> candidates(n);
    for (int j = 0; j < n; ++j) candidates[j] = vectors_of_norm(a, b[j][j]);
    std::vector<IntVec> chosen;
    std::vector<IntVec> a_chosen;  // A * u_i cached
    std::function<bool(int)> rec = [&](int j) -> bool {
        if (j == n) {
            IntMat u(n, IntVec(n));
            for (int c = 0; c < n; ++c)
                for (int r = 0; r < n; ++r) u[r][c] = chosen[c][r];
            return mat_det(u).abs() == BigInt(1);
        }
        for (const auto& cand : candidates[j]) {
            bool ok = true;
            for (int i = 0; i < j && ok; ++i) {
                long long ip = 0;
                for (int r = 0; r < n; ++r) ip += a_chosen[i][r] * cand[r];
                if (ip != b[i][j]) ok = false;
            }
            if (!ok) continue;
            chosen.push_back(cand);
            a_chosen.push_back(mat_apply(a, cand));
            if (rec(j + 1)) return true;
            chosen.pop_back();
            a_chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

}  // namespace concordia
