#include "concordia/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "concordia/goeritz.hpp"
#include "concordia/lattice.hpp"
#include "concordia/rational.hpp"
#include "concordia/twobridge.hpp"

namespace concordia {

FormalClass make_class(std::vector<FormalSummand> summands) {
    FormalClass c;
    if (!summands.empty()) c.mode = summands[0].link.diagram.mode;
    std::map<std::string, size_t> index;
    for (auto& s : summands) {
        if (s.link.diagram.mode != c.mode)
            throw precondition_error("formal class: orientation mode mismatch among summands");
        if (s.mult == 0) continue;
        std::string key = canonical_form(s.link.diagram);
        auto it = index.find(key);
        if (it == index.end()) {
            index[key] = c.summands.size();
            c.summands.push_back(s);
        } else {
            c.summands[it->second].mult += s.mult;
        }
    }
    std::vector<FormalSummand> reduced;
    for (auto& s : c.summands)
        if (s.mult != 0) reduced.push_back(s);
    c.summands = std::move(reduced);
    std::sort(c.summands.begin(), c.summands.end(), [](const FormalSummand& x, const FormalSummand& y) {
        return canonical_form(x.link.diagram) < canonical_form(y.link.diagram);
    });
    return c;
}

FormalClass class_sum(const FormalClass& a, const FormalClass& b) {
    if (!a.is_empty() && !b.is_empty() && a.mode != b.mode)
        throw precondition_error("class_sum: orientation mode mismatch");
    std::vector<FormalSummand> all = a.summands;
    all.insert(all.end(), b.summands.begin(), b.summands.end());
    FormalClass c = make_class(std::move(all));
    c.mode = a.is_empty() ? b.mode : a.mode;
    return c;
}

FormalClass class_neg(const FormalClass& a) {
    std::vector<FormalSummand> flipped = a.summands;
    for (auto& s : flipped) s.mult = -s.mult;
    FormalClass c = make_class(std::move(flipped));
    c.mode = a.mode;
    return c;
}

std::vector<RootOfUnity> default_omega_samples(int B) {
    std::vector<RootOfUnity> out;
    for (int j = 1; j <= B; ++j) out.emplace_back(2 * j - 1, 4LL * B);
    return out;
}

ObstructionVector obstruction_vector(const FormalClass& a, const std::vector<RootOfUnity>& omegas) {
    ObstructionVector v;
    v.mode = a.mode;
    v.det_defined = true;
    v.det = BigInt(1);
    v.sigma_defined = a.mode == OrientationMode::MarkedOriented;
    v.delta_defined = a.mode == OrientationMode::MarkedOriented;
    v.lt_defined = a.mode == OrientationMode::MarkedOriented;
    std::map<long long, int> class_exponents;  // prime -> exponent mod 2

    for (const auto& s : a.summands) {
        const LinkDiagram& d = s.link.diagram;
        v.linking += s.mult * total_linking(d);
        v.mu += static_cast<int>(((s.mult % 2) + 2) % 2) * mu_invariant(d);
        BigInt det = determinant(d);
        if (det.is_zero()) {
            v.det_defined = false;
            if (v.delta_defined) {
                v.delta_defined = false;
                v.delta_reason = "a summand has zero determinant";
            }
        } else if (v.det_defined) {
            for (long long k = 0; k < std::llabs(s.mult); ++k) v.det = v.det * det;
            if (det.fits_ll() && (s.mult % 2) != 0)
                for (long long pr : square_class(det.to_ll())) class_exponents[pr] ^= 1;
        }
        if (v.sigma_defined) v.sigma += s.mult * signature(d);
        if (v.delta_defined) {
            try {
                v.delta += s.mult * delta_invariant(d);
            } catch (const unavailable_error& e) {
                v.delta_defined = false;
                v.delta_reason = e.what();
            } catch (const precondition_error& e) {
                v.delta_defined = false;
                v.delta_reason = e.what();
            }
        }
        if (!s.link.braid) v.lt_defined = false;
    }
    v.mu %= 2;
    if (a.mode == OrientationMode::PartlyOriented) v.linking = ((v.linking % 2) + 2) % 2;
    for (auto& [p, e] : class_exponents)
        if (e) v.square_class.push_back(p);
    std::sort(v.square_class.begin(), v.square_class.end());

    if (v.lt_defined) {
        for (const auto& w : omegas) {
            OmegaEntry e;
            e.omega = w;
            e.prime_power = w.is_prime_power_order();
            for (const auto& s : a.summands) {
                SeifertMatrix m = seifert_from_braid(*s.link.braid);
                LTValue val = lt_signature_nullity(m, w);
                e.sigma += s.mult * val.sigma;
                e.nullity += std::llabs(s.mult) * val.nullity;
            }
            v.lt.push_back(e);
        }
    }
    return v;
}

Certificate nontriviality_certificate(const FormalClass& a, const std::vector<RootOfUnity>& omegas) {
    ObstructionVector v = obstruction_vector(a, omegas);
    Certificate c;
    std::ostringstream os;
    if (v.linking != 0) {
        c.found = true;
        os << (v.mode == OrientationMode::MarkedOriented ? "l-tilde = " : "l = ") << v.linking;
    } else if (v.mu != 0) {
        c.found = true;
        os << "mu = 1";
    } else if (v.det_defined && !v.square_class.empty()) {
        c.found = true;
        os << "determinant " << v.det.to_string() << " is not a square (class";
        for (long long p : v.square_class) os << " " << p;
        os << ")";
    } else if (v.sigma_defined && v.sigma != 0) {
        c.found = true;
        os << "sigma = " << v.sigma;
    } else if (v.delta_defined && v.delta != 0) {
        c.found = true;
        os << "delta = " << v.delta;
    } else if (v.lt_defined) {
        for (const auto& e : v.lt) {
            if (e.prime_power && e.nullity == 0 && e.sigma != 0) {
                c.found = true;
                os << "sigma_omega = " << e.sigma << " at omega = exp(2 pi i " << e.omega.a << "/"
                   << e.omega.b << ")";
                break;
            }
        }
    }
    c.witness = c.found ? os.str() : "no obstruction found";
    return c;
}

namespace {

// rank over Q of an integer matrix, returning pivot rows/columns and the
// value of the witnessing minor
int rank_with_certificate(const std::vector<std::vector<BigInt>>& m, std::vector<int>& rows,
                          std::vector<int>& cols, BigInt& minor) {
    size_t nr = m.size(), nc = nr ? m[0].size() : 0;
    std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc));
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) a[i][j] = Rational(m[i][j]);
    std::vector<bool> row_used(nr, false);
    rows.clear();
    cols.clear();
    for (size_t col = 0; col < nc; ++col) {
        int piv = -1;
        for (size_t i = 0; i < nr; ++i)
            if (!row_used[i] && !a[i][col].is_zero()) { piv = static_cast<int>(i); break; }
        if (piv < 0) continue;
        row_used[static_cast<size_t>(piv)] = true;
        rows.push_back(piv);
        cols.push_back(static_cast<int>(col));
        for (size_t i = 0; i < nr; ++i) {
            if (static_cast<int>(i) == piv || a[i][col].is_zero()) continue;
            Rational f = a[i][col] / a[static_cast<size_t>(piv)][col];
            for (size_t j = 0; j < nc; ++j) a[i][j] -= f * a[static_cast<size_t>(piv)][j];
        }
    }
    // minor: determinant of the pivot submatrix of the original
    size_t r = rows.size();
    std::vector<std::vector<BigInt>> sub(r, std::vector<BigInt>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) sub[i][j] = m[static_cast<size_t>(rows[i])][static_cast<size_t>(cols[j])];
    // Bareiss on BigInt submatrix
    minor = BigInt(1);
    if (r > 0) {
        BigInt prev(1);
        int sign = 1;
        auto aa = sub;
        size_t n = r;
        for (size_t k = 0; k + 1 < n; ++k) {
            size_t piv = k;
            while (piv < n && aa[piv][k].is_zero()) ++piv;
            if (piv == n) { minor = BigInt(0); break; }
            if (piv != k) { std::swap(aa[piv], aa[k]); sign = -sign; }
            for (size_t i = k + 1; i < n; ++i) {
                for (size_t j = k + 1; j < n; ++j) {
                    BigInt num = aa[i][j] * aa[k][k] - aa[i][k] * aa[k][j];
                    BigInt q, rr;
                    BigInt::divmod(num, prev, q, rr);
                    aa[i][j] = q;
                }
                aa[i][k] = BigInt(0);
            }
            prev = aa[k][k];
        }
        if (!minor.is_zero()) {
            minor = aa[n - 1][n - 1];
            if (sign < 0) minor = -minor;
        }
    }
    return static_cast<int>(r);
}

}  // namespace

RankResult independence_rank(const std::vector<FormalClass>& classes,
                             const std::vector<RootOfUnity>& omegas) {
    RankResult res;
    if (classes.empty()) return res;
    std::vector<ObstructionVector> vecs;
    for (const auto& c : classes) vecs.push_back(obstruction_vector(c, omegas));

    // integer rows: l-tilde, sigma, delta, then gated sigma_omega
    std::vector<std::string> row_names;
    std::vector<std::vector<BigInt>> rows;
    bool oriented = true;
    for (const auto& v : vecs)
        if (v.mode != OrientationMode::MarkedOriented) oriented = false;
    if (oriented) {
        {
            std::vector<BigInt> r;
            for (const auto& v : vecs) r.emplace_back(v.linking);
            rows.push_back(r);
            row_names.push_back("l-tilde");
        }
        {
            std::vector<BigInt> r;
            bool ok = true;
            for (const auto& v : vecs) {
                if (!v.sigma_defined) ok = false;
                r.emplace_back(v.sigma);
            }
            if (ok) {
                rows.push_back(r);
                row_names.push_back("sigma");
            }
        }
        {
            std::vector<BigInt> r;
            bool ok = true;
            for (const auto& v : vecs) {
                if (!v.delta_defined) ok = false;
                r.emplace_back(v.delta_defined ? v.delta : 0);
            }
            if (ok) {
                rows.push_back(r);
                row_names.push_back("delta");
            }
        }
        bool all_lt = true;
        for (const auto& v : vecs)
            if (!v.lt_defined) all_lt = false;
        if (all_lt && !vecs.empty()) {
            for (size_t k = 0; k < vecs[0].lt.size(); ++k) {
                bool usable = vecs[0].lt[k].prime_power;
                std::vector<BigInt> r;
                for (const auto& v : vecs) {
                    if (v.lt[k].nullity != 0) usable = false;
                    r.emplace_back(v.lt[k].sigma);
                }
                if (usable) {
                    rows.push_back(r);
                    std::ostringstream nm;
                    nm << "sigma_omega(" << vecs[0].lt[k].omega.a << "/" << vecs[0].lt[k].omega.b << ")";
                    row_names.push_back(nm.str());
                }
            }
        }
    }
    if (!rows.empty()) {
        std::vector<int> prows, pcols;
        BigInt minor;
        res.free_rank = rank_with_certificate(rows, prows, pcols, minor);
        for (int r : prows) res.cert.free_rows.push_back(row_names[static_cast<size_t>(r)]);
        res.cert.free_cols = pcols;
        res.cert.free_minor = minor.to_string();
    }

    // 2-torsion: square-class exponent vectors over F2
    std::set<long long> primes;
    bool det_ok = true;
    for (const auto& v : vecs) {
        if (!v.det_defined) det_ok = false;
        for (long long p : v.square_class) primes.insert(p);
    }
    if (det_ok && !primes.empty()) {
        std::vector<long long> plist(primes.begin(), primes.end());
        size_t nr = plist.size(), nc = vecs.size();
        std::vector<std::vector<int>> f2(nr, std::vector<int>(nc, 0));
        for (size_t j = 0; j < nc; ++j)
            for (long long p : vecs[j].square_class) {
                size_t i = static_cast<size_t>(std::lower_bound(plist.begin(), plist.end(), p) - plist.begin());
                f2[i][j] = 1;
            }
        std::vector<bool> used(nr, false);
        for (size_t col = 0; col < nc; ++col) {
            int piv = -1;
            for (size_t i = 0; i < nr; ++i)
                if (!used[i] && f2[i][col]) { piv = static_cast<int>(i); break; }
            if (piv < 0) continue;
            used[static_cast<size_t>(piv)] = true;
            res.two_torsion_rank++;
            res.cert.torsion_primes.push_back(plist[static_cast<size_t>(piv)]);
            res.cert.torsion_cols.push_back(static_cast<int>(col));
            for (size_t i = 0; i < nr; ++i) {
                if (static_cast<int>(i) == piv || !f2[i][col]) continue;
                for (size_t j = 0; j < nc; ++j) f2[i][j] ^= f2[static_cast<size_t>(piv)][j];
            }
        }
    }
    return res;
}

std::pair<FormalClass, FormalClass> split_class(const LinkInput& link) {
    LinkDiagram knot = marked_component_diagram(link.diagram);
    LinkInput knot_in;
    knot_in.text = link.text + " [marked component]";
    knot_in.diagram = knot;
    FormalClass kpart = make_class({{knot_in, 1}});

    LinkDiagram comp = connected_sum(negate(knot), link.diagram);
    LinkInput comp_in;
    comp_in.text = link.text + " [complement]";
    comp_in.diagram = comp;
    FormalClass cpart = make_class({{comp_in, 1}});
    if (knot.crossings.empty()) {
        // marked component is an unknot: the complement part is the whole class
        cpart = make_class({{link, 1}});
        cpart.mode = link.diagram.mode;
    }
    return {kpart, cpart};
}

}  // namespace concordia
