#include "concordia/seifert_lt.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>

#include "concordia/link_core.hpp"

namespace concordia {

RootOfUnity::RootOfUnity(long long num, long long den) {
    if (den <= 0 || num <= 0 || num >= den)
        throw precondition_error("RootOfUnity: need 0 < a/b < 1");
    long long g = std::gcd(num, den);
    a = num / g;
    b = den / g;
}

bool RootOfUnity::is_prime_power_order() const {
    long long n = b;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1;
        }
    }
    return true;
}

SeifertMatrix seifert_from_braid(const std::vector<int>& word) {
    if (word.empty()) throw precondition_error("seifert_from_braid: empty braid word");
    int n = 1;
    for (int g : word) {
        if (g == 0) throw precondition_error("braid letters are nonzero integers");
        n = std::max(n, std::abs(g) + 1);
    }
    std::vector<std::vector<int>> positions(static_cast<size_t>(n - 1));
    for (int k = 0; k < static_cast<int>(word.size()); ++k)
        positions[static_cast<size_t>(std::abs(word[static_cast<size_t>(k)]) - 1)].push_back(k);
    for (int i = 0; i < n - 1; ++i)
        if (positions[static_cast<size_t>(i)].empty())
            throw unavailable_error(
                "seifert_from_braid: canonical surface is disconnected (generator " +
                std::to_string(i + 1) + " unused); split the link first");

    struct Loop {
        int pair;
        int k1, k2;
    };
    std::vector<Loop> loops;
    for (int i = 0; i < n - 1; ++i)
        for (size_t j = 0; j + 1 < positions[static_cast<size_t>(i)].size(); ++j)
            loops.push_back({i, positions[static_cast<size_t>(i)][j],
                             positions[static_cast<size_t>(i)][j + 1]});

    auto sgn = [&](int k) { return word[static_cast<size_t>(k)] > 0 ? 1 : -1; };
    int r = static_cast<int>(loops.size());
    IntMat m(static_cast<size_t>(r), IntVec(static_cast<size_t>(r), 0));
    for (int u = 0; u < r; ++u) {
        const Loop& A = loops[static_cast<size_t>(u)];
        m[static_cast<size_t>(u)][static_cast<size_t>(u)] = -(sgn(A.k1) + sgn(A.k2)) / 2;
        for (int v = 0; v < r; ++v) {
            if (u == v) continue;
            const Loop& B = loops[static_cast<size_t>(v)];
            if (A.pair == B.pair && A.k2 == B.k1) {
                if (sgn(A.k2) > 0) m[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
                else m[static_cast<size_t>(v)][static_cast<size_t>(u)] = -1;
            } else if (B.pair == A.pair + 1) {
                if (A.k1 < B.k1 && B.k1 < A.k2 && A.k2 < B.k2)
                    m[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
                else if (B.k1 < A.k1 && A.k1 < B.k2 && B.k2 < A.k2)
                    m[static_cast<size_t>(v)][static_cast<size_t>(u)] = -1;
            }
        }
    }

    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int g : word) {
        int i = std::abs(g) - 1;
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i + 1)]);
    }
    std::vector<bool> seen(static_cast<size_t>(n), false);
    int comps = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        ++comps;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)]) seen[static_cast<size_t>(j)] = true;
    }

    SeifertMatrix s;
    s.m = std::move(m);
    s.components = comps;
    s.strands = n;
    return s;
}

IntPoly alexander(const SeifertMatrix& s) {
    int n = s.rank();
    if (n == 0) return IntPoly::constant(BigInt(1));
    std::vector<std::vector<IntPoly>> a(static_cast<size_t>(n), std::vector<IntPoly>(static_cast<size_t>(n)));
    IntPoly t = IntPoly::monomial(BigInt(1), 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                IntPoly::constant(BigInt(s.m[static_cast<size_t>(i)][static_cast<size_t>(j)])) -
                t * IntPoly::constant(BigInt(s.m[static_cast<size_t>(j)][static_cast<size_t>(i)]));
    // fraction-free Bareiss over Z[t]
    IntPoly prev = IntPoly::constant(BigInt(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!a[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) { piv = i; break; }
        if (piv < 0) return IntPoly();
        if (piv != k) { std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(k)]); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                IntPoly num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                              a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = IntPoly::div_exact(num, prev);
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = IntPoly();
        }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    IntPoly det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    if (sign < 0) det = IntPoly() - det;
    if (det.is_zero()) return det;
    const auto& c = det.coeffs();
    size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    IntPoly norm{std::vector<BigInt>(c.begin() + static_cast<long>(low), c.end())};
    if (norm.coeffs().back().is_negative()) norm = IntPoly() - norm;
    return norm;
}

namespace {

std::shared_ptr<const CycloField> field_cache(int b) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloField>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(b);
        if (it != cache.end()) return it->second;
    }
    auto f = std::make_shared<CycloField>(b);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(b, f);
    return it->second;
}

}  // namespace

LTValue lt_signature_nullity(const SeifertMatrix& s, const RootOfUnity& w) {
    int n = s.rank();
    LTValue out;
    if (n == 0) return out;
    auto f = field_cache(static_cast<int>(w.b));
    int emb = static_cast<int>(w.a);
    Cyclo one = Cyclo::from_rational(f, Rational(1));
    Cyclo u = one - Cyclo::zeta_power(f, static_cast<int>(w.b) - emb);  // 1 - conj(omega)
    Cyclo v = one - Cyclo::zeta_power(f, emb);                          // 1 - omega

    std::vector<std::vector<Cyclo>> h(static_cast<size_t>(n), std::vector<Cyclo>(static_cast<size_t>(n), Cyclo::zero(f)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                u * Cyclo::from_rational(f, Rational(s.m[static_cast<size_t>(i)][static_cast<size_t>(j)])) +
                v * Cyclo::from_rational(f, Rational(s.m[static_cast<size_t>(j)][static_cast<size_t>(i)]));

    std::vector<bool> done(static_cast<size_t>(n), false);
    int remaining = n;
    while (remaining > 0) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[static_cast<size_t>(i)] && !h[static_cast<size_t>(i)][static_cast<size_t>(i)].is_zero()) { p = i; break; }
        if (p >= 0) {
            const Cyclo piv = h[static_cast<size_t>(p)][static_cast<size_t>(p)];
            // omega was already expressed through the abstract generator, so
            // signs are read at the standard embedding zeta -> exp(2*pi*i/b)
            int sg = piv.real_sign(1);
            if (sg == 0) throw std::logic_error("lt: nonzero pivot with zero sign");
            out.sigma += sg;
            Cyclo inv = piv.inverse();
            done[static_cast<size_t>(p)] = true;
            --remaining;
            for (int i = 0; i < n; ++i) {
                if (done[static_cast<size_t>(i)]) continue;
                Cyclo fi = h[static_cast<size_t>(i)][static_cast<size_t>(p)] * inv;
                if (fi.is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    if (done[static_cast<size_t>(j)]) continue;
                    h[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        h[static_cast<size_t>(i)][static_cast<size_t>(j)] - fi * h[static_cast<size_t>(p)][static_cast<size_t>(j)];
                }
            }
            continue;
        }
        int bi = -1, bj = -1;
        for (int i = 0; i < n && bi < 0; ++i) {
            if (done[static_cast<size_t>(i)]) continue;
            for (int j = i + 1; j < n; ++j)
                if (!done[static_cast<size_t>(j)] && !h[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) { bi = i; bj = j; break; }
        }
        if (bi < 0) {
            out.nullity += remaining;  // remaining block is identically zero
            break;
        }
        // hyperbolic block [[0, h],[conj h, 0]]: contributes +1 and -1
        Cyclo hh = h[static_cast<size_t>(bi)][static_cast<size_t>(bj)];
        Cyclo hbar = h[static_cast<size_t>(bj)][static_cast<size_t>(bi)];
        Cyclo ih = hh.inverse(), ihbar = hbar.inverse();
        done[static_cast<size_t>(bi)] = done[static_cast<size_t>(bj)] = true;
        remaining -= 2;
        for (int i = 0; i < n; ++i) {
            if (done[static_cast<size_t>(i)]) continue;
            Cyclo aip = h[static_cast<size_t>(i)][static_cast<size_t>(bi)];
            Cyclo aiq = h[static_cast<size_t>(i)][static_cast<size_t>(bj)];
            if (aip.is_zero() && aiq.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (done[static_cast<size_t>(j)]) continue;
                Cyclo corr = aiq * ih * h[static_cast<size_t>(bi)][static_cast<size_t>(j)] +
                             aip * ihbar * h[static_cast<size_t>(bj)][static_cast<size_t>(j)];
                h[static_cast<size_t>(i)][static_cast<size_t>(j)] = h[static_cast<size_t>(i)][static_cast<size_t>(j)] - corr;
            }
        }
    }
    return out;
}

LTValue lt_signature_nullity_numeric(const SeifertMatrix& s, const RootOfUnity& w) {
    int n = s.rank();
    LTValue out;
    if (n == 0) return out;
    const double pi = 3.14159265358979323846;
    std::complex<double> omega =
        std::polar(1.0, 2.0 * pi * static_cast<double>(w.a) / static_cast<double>(w.b));
    int N = 2 * n;
    std::vector<std::vector<double>> A(static_cast<size_t>(N), std::vector<double>(static_cast<size_t>(N), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> hij =
                (1.0 - std::conj(omega)) * static_cast<double>(s.m[static_cast<size_t>(i)][static_cast<size_t>(j)]) +
                (1.0 - omega) * static_cast<double>(s.m[static_cast<size_t>(j)][static_cast<size_t>(i)]);
            A[static_cast<size_t>(i)][static_cast<size_t>(j)] = hij.real();
            A[static_cast<size_t>(i)][static_cast<size_t>(j + n)] = -hij.imag();
            A[static_cast<size_t>(i + n)][static_cast<size_t>(j)] = hij.imag();
            A[static_cast<size_t>(i + n)][static_cast<size_t>(j + n)] = hij.real();
        }
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) off += A[static_cast<size_t>(i)][static_cast<size_t>(j)] * A[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (off < 1e-26) break;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) {
                double apq = A[static_cast<size_t>(p)][static_cast<size_t>(q)];
                if (std::fabs(apq) < 1e-16) continue;
                double theta = 0.5 * std::atan2(2 * apq, A[static_cast<size_t>(q)][static_cast<size_t>(q)] - A[static_cast<size_t>(p)][static_cast<size_t>(p)]);
                double c = std::cos(theta), sn = std::sin(theta);
                for (int k = 0; k < N; ++k) {
                    double akp = A[static_cast<size_t>(k)][static_cast<size_t>(p)], akq = A[static_cast<size_t>(k)][static_cast<size_t>(q)];
                    A[static_cast<size_t>(k)][static_cast<size_t>(p)] = c * akp - sn * akq;
                    A[static_cast<size_t>(k)][static_cast<size_t>(q)] = sn * akp + c * akq;
                }
                for (int k = 0; k < N; ++k) {
                    double apk = A[static_cast<size_t>(p)][static_cast<size_t>(k)], aqk = A[static_cast<size_t>(q)][static_cast<size_t>(k)];
                    A[static_cast<size_t>(p)][static_cast<size_t>(k)] = c * apk - sn * aqk;
                    A[static_cast<size_t>(q)][static_cast<size_t>(k)] = sn * apk + c * aqk;
                }
            }
    }
    double scale = 1e-12;
    for (int i = 0; i < N; ++i) scale = std::max(scale, std::fabs(A[static_cast<size_t>(i)][static_cast<size_t>(i)]));
    double tol = scale * 1e-9;
    int pos = 0, neg = 0, nul = 0;
    for (int i = 0; i < N; ++i) {
        double ev = A[static_cast<size_t>(i)][static_cast<size_t>(i)];
        if (ev > tol) ++pos;
        else if (ev < -tol) ++neg;
        else ++nul;
    }
    out.sigma = (pos - neg) / 2;
    out.nullity = nul / 2;
    return out;
}

namespace {

struct CircleRootData {
    std::vector<RootInterval> roots;  // isolating z-intervals, z = t + 1/t
    RatPoly hz;                       // polynomial in z carrying those roots
    bool root_at_minus_one = false;
};

CircleRootData circle_root_data(const IntPoly& alex) {
    CircleRootData out;
    if (alex.is_zero() || alex.degree() <= 0) return out;
    RatPoly fp = RatPoly::from_int(alex);
    std::vector<Rational> rev(fp.coeffs().rbegin(), fp.coeffs().rend());
    RatPoly fr{std::move(rev)};
    RatPoly a = fp, b = fr;
    while (!b.is_zero()) {
        RatPoly q, r;
        RatPoly::divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (a.degree() <= 0) {
        out.root_at_minus_one = fp.eval(Rational(-1)).is_zero();
        if (out.root_at_minus_one) out.roots.push_back({Rational(-2), Rational(-2)});
        return out;
    }
    RatPoly g = a;
    auto strip_root = [&g](const Rational& at) {
        RatPoly lin(std::vector<Rational>{-at, Rational(1)});
        while (g.degree() > 0 && g.eval(at).is_zero()) {
            RatPoly q, r;
            RatPoly::divmod(g, lin, q, r);
            g = q;
        }
    };
    out.root_at_minus_one = fp.eval(Rational(-1)).is_zero();
    strip_root(Rational(1));
    strip_root(Rational(-1));
    int deg = g.degree();
    if (deg > 0) {
        if (deg % 2 != 0) throw std::logic_error("circle_root_data: odd reciprocal factor");
        int m = deg / 2;
        const auto& c = g.coeffs();
        std::vector<RatPoly> p(static_cast<size_t>(m + 1));
        p[0] = RatPoly(std::vector<Rational>{Rational(2)});
        if (m >= 1) p[1] = RatPoly(std::vector<Rational>{Rational(0), Rational(1)});
        for (int k = 2; k <= m; ++k)
            p[static_cast<size_t>(k)] =
                RatPoly(std::vector<Rational>{Rational(0), Rational(1)}) * p[static_cast<size_t>(k - 1)] - p[static_cast<size_t>(k - 2)];
        // g / t^m = c_m + sum_k c_{m+k} (t^k + t^-k) when g is palindromic; an
        // anti-palindromic factor would retain a root at t = 1, already stripped
        RatPoly hz(std::vector<Rational>{c[static_cast<size_t>(m)]});
        for (int k = 1; k <= m; ++k) {
            std::vector<Rational> tc = p[static_cast<size_t>(k)].coeffs();
            for (auto& x : tc) x = x * c[static_cast<size_t>(m + k)];
            hz = hz + RatPoly(std::move(tc));
        }
        out.hz = hz;
        for (auto& I : isolate_roots(hz, Rational(-2), Rational(2))) {
            if (I.hi == Rational(2) && hz.eval(Rational(2)).is_zero()) continue;
            out.roots.push_back(I);
        }
    }
    if (out.root_at_minus_one) {
        bool have = false;
        for (auto& I : out.roots)
            if (I.lo == Rational(-2) && I.hi == Rational(-2)) have = true;
        if (!have) out.roots.push_back({Rational(-2), Rational(-2)});
    }
    return out;
}

void refine_interval(const RatPoly& h, RootInterval& I, int steps) {
    if (h.is_zero()) return;
    for (int s = 0; s < steps; ++s) {
        if (I.lo == I.hi) return;
        Rational mid = (I.lo + I.hi) * Rational(BigInt(1), BigInt(2));
        Rational v = h.eval(mid);
        if (v.is_zero()) { I.lo = mid; I.hi = mid; return; }
        Rational vhi = h.eval(I.hi);
        if (vhi.is_zero()) { I.lo = I.hi; return; }
        if (v.sign() == vhi.sign()) I.hi = mid;
        else I.lo = mid;
    }
}

void sample_z_enclosure(const RootOfUnity& w, int prec, Rational& lo, Rational& hi) {
    Rational clo, chi;
    cos_pi_enclosure(2 * w.a, w.b, prec, clo, chi);
    lo = clo + clo;
    hi = chi + chi;
}

}  // namespace

std::vector<RootInterval> alexander_circle_roots(const IntPoly& alex) {
    return circle_root_data(alex).roots;
}

SignatureProfile signature_profile(const SeifertMatrix& m, int resolution) {
    if (resolution < 2) throw precondition_error("signature_profile: resolution must be >= 2");
    SignatureProfile prof;
    prof.alexander = alexander(m);
    CircleRootData cd = circle_root_data(prof.alexander);
    for (auto& I : cd.roots) refine_interval(cd.hz, I, 32);

    auto eval_at = [&](const RootOfUnity& w) {
        LTValue v = lt_signature_nullity(m, w);
        return ProfileSample{w, v.sigma, v.nullity};
    };

    std::map<std::pair<long long, long long>, ProfileSample> samples;
    for (int j = 1; j <= resolution; ++j) {
        RootOfUnity w(j, 2LL * resolution);
        samples[{w.a, w.b}] = eval_at(w);
    }

    // which roots sit exactly at singular samples
    auto overlaps_sample = [&](const RootInterval& I, const RootOfUnity& w) {
        RootInterval J = I;
        for (int prec = 32; prec <= 512; prec *= 2) {
            refine_interval(cd.hz, J, 8);
            Rational lo, hi;
            sample_z_enclosure(w, prec, lo, hi);
            if (J.hi < lo || J.lo > hi) return false;
            if (prec >= 256) return true;
        }
        return true;
    };
    // -1 = root left of sample in z, +1 right, 0 overlapping
    auto side_of_sample = [&](RootInterval J, const RootOfUnity& w) {
        for (int prec = 32; prec <= 1024; prec *= 2) {
            refine_interval(cd.hz, J, 8);
            Rational lo, hi;
            sample_z_enclosure(w, prec, lo, hi);
            if (J.hi < lo) return -1;
            if (J.lo > hi) return +1;
        }
        return 0;
    };

    auto consumed_by_singular = [&](const RootInterval& I) {
        for (auto& [k, smp] : samples)
            if (smp.nullity > 0 && overlaps_sample(I, smp.omega)) return true;
        return false;
    };

    for (int round = 0; round < 32; ++round) {
        std::vector<ProfileSample> ordered;
        for (auto& [k, v] : samples) ordered.push_back(v);
        std::sort(ordered.begin(), ordered.end(),
                  [](const ProfileSample& x, const ProfileSample& y) { return x.omega < y.omega; });
        bool changed = false;
        for (size_t i = 0; i + 1 < ordered.size() && !changed; ++i) {
            const auto& s1 = ordered[i];
            const auto& s2 = ordered[i + 1];
            int count = 0;
            for (const auto& I : cd.roots) {
                if (consumed_by_singular(I)) continue;
                // angle strictly inside (s1, s2): z strictly inside (z(s2), z(s1))
                if (side_of_sample(I, s1.omega) == -1 && side_of_sample(I, s2.omega) == +1) ++count;
            }
            if (count >= 2) {
                long long na = s1.omega.a * s2.omega.b + s2.omega.a * s1.omega.b;
                long long nb = 2 * s1.omega.b * s2.omega.b;
                RootOfUnity mid(na, nb);
                if (!samples.count({mid.a, mid.b})) {
                    samples[{mid.a, mid.b}] = eval_at(mid);
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }

    for (auto& [k, v] : samples) prof.samples.push_back(v);
    std::sort(prof.samples.begin(), prof.samples.end(),
              [](const ProfileSample& x, const ProfileSample& y) { return x.omega < y.omega; });
    for (size_t i = 0; i + 1 < prof.samples.size(); ++i) {
        const auto& s1 = prof.samples[i];
        const auto& s2 = prof.samples[i + 1];
        if (s1.sigma != s2.sigma) prof.jumps.push_back({s1.omega, s2.omega, s1.sigma, s2.sigma});
    }
    return prof;
}

}  // namespace concordia
