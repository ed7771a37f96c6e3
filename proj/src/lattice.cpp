#include "concordia/lattice.hpp"

#include <algorithm>
#include <map>

namespace concordia {

DefiniteLattice make_definite(const IntMat& q) {
    if (!mat_is_symmetric(q)) throw precondition_error("lattice: matrix not symmetric");
    DefiniteLattice lat;
    lat.q = q;
    if (q.empty()) {
        lat.definite_sign = -1;
        lat.det_abs = BigInt(1);
        return lat;
    }
    SymSig sig = symmetric_signature(q);
    int n = static_cast<int>(q.size());
    if (sig.nul > 0 || (sig.pos != n && sig.neg != n))
        throw precondition_error("lattice: form is not definite");
    lat.definite_sign = sig.pos == n ? +1 : -1;
    lat.det_abs = mat_det(q).abs();
    return lat;
}

namespace {

std::vector<std::vector<BigInt>> double_lattice_hermite(const IntMat& q) {
    IntMat twoq = q;
    for (auto& row : twoq)
        for (auto& v : row) v *= 2;
    return hermite_form(twoq);
}

bool is_characteristic(const IntMat& q, const IntVec& xi) {
    for (size_t i = 0; i < q.size(); ++i) {
        long long diff = xi[i] - q[i][i];
        if (diff % 2 != 0) return false;
    }
    return true;
}

// xi^T Q^{-1} xi by exact Gaussian elimination.
Rational quad_inv_value(const IntMat& q, const IntVec& xi) {
    int n = static_cast<int>(q.size());
    std::vector<std::vector<Rational>> aug(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n) + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rational(q[i][j]);
        aug[i][n] = Rational(xi[i]);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!aug[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) throw precondition_error("quad_inv_value: singular matrix");
        std::swap(aug[piv], aug[col]);
        Rational p = aug[col][col];
        for (int j = col; j <= n; ++j) aug[col][j] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == col || aug[i][col].is_zero()) continue;
            Rational f = aug[i][col];
            for (int j = col; j <= n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    Rational val;
    for (int i = 0; i < n; ++i) val += aug[i][n] * Rational(xi[i]);
    return val;
}

}  // namespace

CharClass canonical_char(const DefiniteLattice& lat, const IntVec& xi) {
    if (static_cast<int>(xi.size()) != lat.rank())
        throw precondition_error("canonical_char: dimension mismatch");
    if (!is_characteristic(lat.q, xi))
        throw precondition_error("canonical_char: vector is not characteristic");
    if (lat.rank() == 0) return CharClass{};
    auto H = double_lattice_hermite(lat.q);
    std::vector<BigInt> v;
    v.reserve(xi.size());
    for (long long x : xi) v.emplace_back(x);
    auto r = hermite_reduce(H, std::move(v));
    CharClass c;
    for (auto& x : r) c.rep.push_back(x.to_ll());
    return c;
}

std::vector<CharClass> char_cosets(const DefiniteLattice& lat) {
    int n = lat.rank();
    if (n == 0) return {CharClass{}};
    auto Hq = hermite_form(lat.q);
    std::vector<long long> radix(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) radix[i] = Hq[i][i].to_ll();
    std::vector<CharClass> out;
    std::vector<long long> u(static_cast<size_t>(n), 0);
    while (true) {
        IntVec xi(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) xi[i] = ((lat.q[i][i] % 2) + 2) % 2 + 2 * u[i];
        out.push_back(canonical_char(lat, xi));
        int k = 0;
        while (k < n) {
            if (++u[k] < radix[k]) break;
            u[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (BigInt(static_cast<long long>(out.size())) != lat.det_abs)
        throw std::logic_error("char_cosets: coset count mismatch");
    return out;
}

namespace {

// Exact CVP: minimize (z - w)^T A (z - w) over integer z, A positive definite,
// by Fincke-Pohst enumeration over a rational LDL factorization.
struct CvpContext {
    int n = 0;
    std::vector<std::vector<Rational>> L;
    std::vector<Rational> D;
    std::vector<Rational> w;
    std::vector<Rational> z;
    Rational best;
    bool have_best = false;
};

void cvp_rec(CvpContext& ctx, int i, const Rational& used) {
    if (i < 0) {
        if (!ctx.have_best || used < ctx.best) {
            ctx.best = used;
            ctx.have_best = true;
        }
        return;
    }
    Rational shift;
    for (int j = i + 1; j < ctx.n; ++j)
        shift += ctx.L[j][i] * (ctx.z[j] - ctx.w[j]);
    Rational center = ctx.w[i] - shift;
    BigInt q, r;
    BigInt::divmod(center.num(), center.den(), q, r);
    long long base = q.to_ll();
    if (center.sign() < 0 && !r.is_zero()) --base;  // floor
    for (int dir = 0; dir < 2; ++dir) {
        long long zi = dir == 0 ? base : base + 1;
        long long step = dir == 0 ? -1 : +1;
        while (true) {
            Rational dz = Rational(zi) - center;
            Rational cost = used + ctx.D[i] * dz * dz;
            if (ctx.have_best && cost > ctx.best) break;
            ctx.z[i] = Rational(zi);
            cvp_rec(ctx, i - 1, cost);
            zi += step;
        }
    }
}

Rational cvp_min(const IntMat& a, const std::vector<Rational>& w) {
    int n = static_cast<int>(a.size());
    CvpContext ctx;
    ctx.n = n;
    ctx.w = w;
    ctx.z.assign(static_cast<size_t>(n), Rational());
    ctx.L.assign(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    ctx.D.assign(static_cast<size_t>(n), Rational());
    std::vector<std::vector<Rational>> work(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) work[i][j] = Rational(a[i][j]);
    for (int k = 0; k < n; ++k) {
        ctx.D[k] = work[k][k];
        if (ctx.D[k].sign() <= 0) throw precondition_error("cvp: matrix not positive definite");
        ctx.L[k][k] = Rational(1);
        for (int i = k + 1; i < n; ++i) ctx.L[i][k] = work[i][k] / ctx.D[k];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) work[i][j] -= ctx.L[i][k] * ctx.L[j][k] * ctx.D[k];
    }
    cvp_rec(ctx, n - 1, Rational());
    return ctx.best;
}

}  // namespace

Rational d_invariant(const DefiniteLattice& lat, const CharClass& c) {
    if (lat.definite_sign != -1)
        throw precondition_error("d_invariant: negative definite input required (negate and flip the sign)");
    int n = lat.rank();
    if (n == 0) return Rational();
    IntMat A = lat.q;
    for (auto& row : A)
        for (auto& v : row) v = -v;
    // (xi0 - 2Az)^T A^{-1} (xi0 - 2Az) = xi0^T A^{-1} xi0 + 4[(z-w)^T A (z-w) - w^T A w],
    // where w = A^{-1} xi0 / 2; xi^T Q^{-1} xi = -(that), maximized at the CVP minimum.
    Rational xiAinv = quad_inv_value(A, c.rep);
    std::vector<Rational> w(static_cast<size_t>(n));
    {
        // w = A^{-1} xi0 / 2 via one more exact solve
        std::vector<std::vector<Rational>> aug(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n) + 1));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) aug[i][j] = Rational(A[i][j]);
            aug[i][n] = Rational(c.rep[i]);
        }
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int i = col; i < n; ++i)
                if (!aug[i][col].is_zero()) { piv = i; break; }
            std::swap(aug[piv], aug[col]);
            Rational p = aug[col][col];
            for (int j = col; j <= n; ++j) aug[col][j] /= p;
            for (int i = 0; i < n; ++i) {
                if (i == col || aug[i][col].is_zero()) continue;
                Rational f = aug[i][col];
                for (int j = col; j <= n; ++j) aug[i][j] -= f * aug[col][j];
            }
        }
        for (int i = 0; i < n; ++i) w[i] = aug[i][n] * Rational(BigInt(1), BigInt(2));
    }
    Rational wAw;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) wAw += w[i] * Rational(A[i][j]) * w[j];
    Rational min_norm = xiAinv + (cvp_min(A, w) - wAw) * Rational(4);
    return (Rational(n) - min_norm) * Rational(BigInt(1), BigInt(4));
}

namespace {

void box_enum_rec(const DefiniteLattice& lat, const CharClass& target, int i, IntVec& xi,
                  const IntVec& bound, bool& found, Rational& best) {
    int n = lat.rank();
    if (i == n) {
        if (!(canonical_char(lat, xi) == target)) return;
        Rational val = quad_inv_value(lat.q, xi);
        if (!found || val > best) {
            best = val;
            found = true;
        }
        return;
    }
    long long parity = ((lat.q[i][i] % 2) + 2) % 2;
    for (long long v = -bound[i]; v <= bound[i]; ++v) {
        if (((v % 2) + 2) % 2 != parity) continue;
        xi[i] = v;
        box_enum_rec(lat, target, i + 1, xi, bound, found, best);
    }
}

}  // namespace

Rational d_invariant_box_oracle(const DefiniteLattice& lat, const CharClass& c) {
    if (lat.definite_sign != -1)
        throw precondition_error("d_invariant_box_oracle: negative definite input required");
    int n = lat.rank();
    if (n == 0) return Rational();
    IntVec bound(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += std::abs(lat.q[i][j]);
        bound[i] = s;
    }
    bool found = false;
    Rational best;
    IntVec xi(static_cast<size_t>(n), 0);
    box_enum_rec(lat, c, 0, xi, bound, found, best);
    while (true) {
        IntVec wider = bound;
        for (auto& b : wider) b += 1;
        bool found2 = false;
        Rational best2;
        box_enum_rec(lat, c, 0, xi, wider, found2, best2);
        if (found && found2 && best2 == best) break;
        bound = wider;
        best = best2;
        found = found2;
    }
    return (best + Rational(n)) * Rational(BigInt(1), BigInt(4));
}

CharClass spin_char_class(const LinkDiagram& d, const Checkerboard& cb, const GoeritzData& g) {
    if (d.mode != OrientationMode::MarkedOriented)
        throw precondition_error("spin_char_class: requires marked oriented input");
    int r0 = g.region_at_infinity;
    std::map<int, int> parity;
    parity[r0] = 0;
    bool use_white = g.white_is_color_white;
    bool changed = true;
    size_t total = g.white_faces.size() + 1;
    while (changed) {
        changed = false;
        for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
            int f0c = cb.corner_face[c][0];
            bool corner0_in = cb.is_white[f0c] == use_white;
            int k1 = corner0_in ? 0 : 1, k2 = corner0_in ? 2 : 3;
            int f1 = cb.corner_face[c][k1];
            int f2 = cb.corner_face[c][k2];
            // parity flip between the two regions at this crossing: negative
            // crossings flip on the {1,3} diagonal, positive ones on {0,2}
            // (the lifted-meridian class rotates with the white channel)
            int wbit = (d.crossings[c].sign() < 0 ? 1 : 0) ^ (corner0_in ? 1 : 0);
            if (f1 == f2) {
                if (wbit)
                    throw unavailable_error(
                        "spin_char_class: nugatory crossing makes the sublink ill-defined");
                continue;
            }
            auto it1 = parity.find(f1), it2 = parity.find(f2);
            if (it1 != parity.end() && it2 != parity.end()) {
                if ((it1->second ^ it2->second) != wbit)
                    throw unavailable_error("spin_char_class: inconsistent crossing-sign parities");
            } else if (it1 != parity.end()) {
                parity[f2] = it1->second ^ wbit;
                changed = true;
            } else if (it2 != parity.end()) {
                parity[f1] = it2->second ^ wbit;
                changed = true;
            }
        }
    }
    if (parity.size() != total)
        throw unavailable_error("spin_char_class: white region graph is disconnected");

    int n = static_cast<int>(g.white_faces.size());
    IntVec xi(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        long long acc = 0;
        for (int j = 0; j < n; ++j)
            if (parity[g.white_faces[j]] == 1) acc += g.matrix[i][j];
        xi[i] = acc;
    }
    DefiniteLattice lat = make_definite(g.matrix);
    return canonical_char(lat, xi);
}

DefinitePresentation definite_presentation(const LinkDiagram& d) {
    struct Candidate {
        bool mirrored;
        bool use_white;
    };
    std::vector<std::pair<int, Candidate>> options;
    for (bool mirrored : {false, true}) {
        LinkDiagram dd = mirrored ? negate(d) : d;
        Checkerboard cb = checkerboard(dd);
        for (bool use_white : {true, false}) {
            GoeritzData g = goeritz_matrix(dd, cb, use_white);
            int n = static_cast<int>(g.matrix.size());
            SymSig sig = n ? symmetric_signature(g.matrix) : SymSig{0, 0, 0};
            bool neg_def = sig.nul == 0 && sig.pos == 0;
            if (!neg_def) continue;
            options.push_back({n, {mirrored, use_white}});
        }
    }
    if (options.empty())
        throw unavailable_error(
            "delta: no definite chessboard form on either side of the diagram or its mirror");
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Candidate pick = options.front().second;
    DefinitePresentation pres;
    pres.mirrored = pick.mirrored;
    pres.diagram = pick.mirrored ? negate(d) : d;
    pres.cb = checkerboard(pres.diagram);
    pres.g = goeritz_matrix(pres.diagram, pres.cb, pick.use_white);
    pres.lat = make_definite(pres.g.matrix);
    return pres;
}

long long delta_invariant(const LinkDiagram& d) {
    if (d.mode != OrientationMode::MarkedOriented)
        throw precondition_error("delta: requires marked oriented input");
    if (determinant(d).is_zero()) throw precondition_error("delta: zero determinant");
    DefinitePresentation pres = definite_presentation(d);
    CharClass c = spin_char_class(pres.diagram, pres.cb, pres.g);
    Rational dval = d_invariant(pres.lat, c);
    Rational delta = dval * Rational(4);
    if (!delta.is_integer())
        throw std::logic_error("delta: 4d is not an integer on a branched double cover lattice");
    long long v = delta.num().to_ll();
    return pres.mirrored ? -v : v;
}

}  // namespace concordia
