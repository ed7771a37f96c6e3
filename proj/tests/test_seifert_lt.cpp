#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "concordia/goeritz.hpp"
#include "concordia/link_core.hpp"
#include "concordia/seifert_lt.hpp"

using namespace concordia;

TEST_CASE("seifert matrix of the positive Hopf braid") {
    SeifertMatrix s = seifert_from_braid({1, 1});
    REQUIRE(s.rank() == 1);
    CHECK(s.m[0][0] == -1);
    CHECK(s.components == 2);
    CHECK(alexander(s).to_string() == "t - 1");
}

TEST_CASE("trefoil: 2x2 matrix with sig(M + M^T) = -2") {
    SeifertMatrix s = seifert_from_braid({1, 1, 1});
    REQUIRE(s.rank() == 2);
    IntMat sym = s.m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) sym[i][j] += s.m[j][i];
    SymSig sg = symmetric_signature(sym);
    CHECK(sg.pos - sg.neg == -2);
    CHECK(alexander(s).to_string() == "t^2 - t + 1");
    CHECK(s.components == 1);
}

TEST_CASE("figure eight Alexander polynomial") {
    SeifertMatrix s = seifert_from_braid({1, -2, 1, -2});
    CHECK(alexander(s).to_string() == "t^2 - 3*t + 1");
}

TEST_CASE("unknot: empty matrix, Alexander = 1") {
    SeifertMatrix s;  // empty
    CHECK(alexander(s).to_string() == "1");
    LTValue v = lt_signature_nullity(s, RootOfUnity(1, 2));
    CHECK(v.sigma == 0);
    CHECK(v.nullity == 0);
}

TEST_CASE("torus links: |det| from both routes and matrix size") {
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> w(static_cast<size_t>(2 * k), 1);
        SeifertMatrix s = seifert_from_braid(w);
        CHECK(s.rank() == 2 * k - 1);
        CHECK(s.components == 2);
        IntMat sym = s.m;
        for (int i = 0; i < s.rank(); ++i)
            for (int j = 0; j < s.rank(); ++j) sym[i][j] += s.m[j][i];
        CHECK(mat_det(sym).abs().to_ll() == 2 * k);
    }
}

TEST_CASE("disconnected canonical surface is rejected") {
    CHECK_THROWS_AS(seifert_from_braid({1, 1, 3, 3}), unavailable_error);
}

TEST_CASE("sigma at omega = -1 equals the link signature") {
    for (auto word : {std::vector<int>{1, 1}, {1, 1, 1}, {1, -2, 1, -2}, {1, 1, 1, 1},
                      {1, -2, 1, -2, 1}, {1, -2, 1, -2, 1, -2}, {-1, -1, -1}}) {
        SeifertMatrix s = seifert_from_braid(word);
        LTValue v = lt_signature_nullity(s, RootOfUnity(1, 2));
        LinkDiagram d = braid_closure_diagram(word);
        CHECK(v.sigma == signature(d));
        bool detzero = determinant(d).is_zero();
        CHECK((v.nullity == 0) == !detzero);
        CHECK(alexander(s).eval(BigInt(-1)).abs() == determinant(d));
    }
}

TEST_CASE("hopf value at omega = -1 is (-1, 0)") {
    SeifertMatrix s = seifert_from_braid({1, 1});
    LTValue v = lt_signature_nullity(s, RootOfUnity(1, 2));
    CHECK(v.sigma == -1);
    CHECK(v.nullity == 0);
}

TEST_CASE("zero 1x1 matrix: nullity 1 at every omega") {
    SeifertMatrix s;
    s.m = {{0}};
    for (auto w : {RootOfUnity(1, 2), RootOfUnity(1, 3), RootOfUnity(2, 5)}) {
        LTValue v = lt_signature_nullity(s, w);
        CHECK(v.sigma == 0);
        CHECK(v.nullity == 1);
    }
}

TEST_CASE("exact and numeric paths agree on random small matrices") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> sz(1, 6);
    std::vector<RootOfUnity> omegas = {RootOfUnity(1, 2), RootOfUnity(1, 3), RootOfUnity(1, 4),
                                       RootOfUnity(2, 5), RootOfUnity(1, 8), RootOfUnity(3, 7)};
    for (int it = 0; it < 200; ++it) {
        int n = sz(rng);
        SeifertMatrix s;
        s.m.assign(static_cast<size_t>(n), IntVec(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry(rng);
        const RootOfUnity& w = omegas[static_cast<size_t>(it) % omegas.size()];
        LTValue a = lt_signature_nullity(s, w);
        LTValue b = lt_signature_nullity_numeric(s, w);
        CHECK(a.sigma == b.sigma);
        CHECK(a.nullity == b.nullity);
    }
}

TEST_CASE("additivity under block sum") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int it = 0; it < 20; ++it) {
        SeifertMatrix a, b, c;
        int na = 2, nb = 3;
        a.m.assign(static_cast<size_t>(na), IntVec(static_cast<size_t>(na)));
        b.m.assign(static_cast<size_t>(nb), IntVec(static_cast<size_t>(nb)));
        for (auto* s : {&a, &b})
            for (auto& row : s->m)
                for (auto& vv : row) vv = entry(rng);
        c.m.assign(static_cast<size_t>(na + nb), IntVec(static_cast<size_t>(na + nb), 0));
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) c.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j) c.m[static_cast<size_t>(i + na)][static_cast<size_t>(j + na)] = b.m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        RootOfUnity w(2, 7);
        LTValue va = lt_signature_nullity(a, w);
        LTValue vb = lt_signature_nullity(b, w);
        LTValue vc = lt_signature_nullity(c, w);
        CHECK(vc.sigma == va.sigma + vb.sigma);
        CHECK(vc.nullity == va.nullity + vb.nullity);
    }
}

TEST_CASE("sigma_omega flips sign under mirror") {
    for (auto word : {std::vector<int>{1, 1, 1}, {1, 1, 1, 1}, {1, -2, 1, -2, 1}}) {
        std::vector<int> mirrored;
        for (int g : word) mirrored.push_back(-g);
        SeifertMatrix s = seifert_from_braid(word);
        SeifertMatrix sm = seifert_from_braid(mirrored);
        for (auto w : {RootOfUnity(1, 2), RootOfUnity(1, 4), RootOfUnity(2, 9)}) {
            LTValue v = lt_signature_nullity(s, w);
            LTValue vm = lt_signature_nullity(sm, w);
            CHECK(v.sigma == -vm.sigma);
            CHECK(v.nullity == vm.nullity);
        }
    }
}

TEST_CASE("prime power gate") {
    CHECK(RootOfUnity(1, 2).is_prime_power_order());
    CHECK(RootOfUnity(1, 9).is_prime_power_order());
    CHECK(RootOfUnity(3, 8).is_prime_power_order());
    CHECK_FALSE(RootOfUnity(1, 6).is_prime_power_order());
    CHECK_FALSE(RootOfUnity(5, 12).is_prime_power_order());
    CHECK(RootOfUnity(2, 4) == RootOfUnity(1, 2));
}

TEST_CASE("profile of S(6,1): jumps at the nontrivial sixth roots of unity") {
    // Delta(S(2k,1)) with the linking-number +k orientation is
    // (t^{2k} - 1)/(t + 1), so the signature function jumps at angle
    // fractions j/(2k), j = 1..k-1, on the open upper semicircle.
    SeifertMatrix s = seifert_from_braid({1, 1, 1, 1, 1, 1});
    CHECK(alexander(s).to_string() == "t^5 - t^4 + t^3 - t^2 + t - 1");
    auto roots = alexander_circle_roots(alexander(s));
    CHECK(roots.size() == 2);
    SignatureProfile prof = signature_profile(s, 12);
    CHECK(prof.samples.back().omega == RootOfUnity(1, 2));
    CHECK(prof.samples.back().sigma == -5);
    std::vector<RootOfUnity> singular;
    for (auto& smp : prof.samples)
        if (smp.nullity > 0) singular.push_back(smp.omega);
    REQUIRE(singular.size() == 2);
    CHECK(singular[0] == RootOfUnity(1, 6));
    CHECK(singular[1] == RootOfUnity(1, 3));
    // values differ just before and just after the last jump at 1/3
    LTValue before = lt_signature_nullity(s, RootOfUnity(8, 25));
    LTValue after = lt_signature_nullity(s, RootOfUnity(9, 26));
    CHECK(before.sigma != after.sigma);
    CHECK(before.sigma == -3);
    CHECK(after.sigma == -5);
}

TEST_CASE("profile of the unknot is constant zero") {
    SeifertMatrix s;
    SignatureProfile prof = signature_profile(s, 8);
    CHECK(prof.jumps.empty());
    for (auto& smp : prof.samples) {
        CHECK(smp.sigma == 0);
        CHECK(smp.nullity == 0);
    }
}

TEST_CASE("profile block sum is pointwise additive") {
    SeifertMatrix a = seifert_from_braid({1, 1, 1});
    SeifertMatrix b = seifert_from_braid({1, 1, 1, 1});
    SeifertMatrix c;
    int na = a.rank(), nb = b.rank();
    c.m.assign(static_cast<size_t>(na + nb), IntVec(static_cast<size_t>(na + nb), 0));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) c.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) c.m[static_cast<size_t>(i + na)][static_cast<size_t>(j + na)] = b.m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int j = 1; j <= 6; ++j) {
        RootOfUnity w(j, 14);
        CHECK(lt_signature_nullity(c, w).sigma ==
              lt_signature_nullity(a, w).sigma + lt_signature_nullity(b, w).sigma);
    }
}
