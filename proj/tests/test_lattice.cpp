#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "concordia/lattice.hpp"
#include "concordia/seifert_lt.hpp"

using namespace concordia;

namespace {
LinkDiagram hopf() { return braid_closure_diagram({1, 1}); }

IntMat neg_star_1_2_4_6() {
    return {{-1, -1, -1, -1}, {-1, -2, 0, 0}, {-1, 0, -4, 0}, {-1, 0, 0, -6}};
}
IntMat neg_d4() {
    return {{-2, -1, -1, -1}, {-1, -2, 0, 0}, {-1, 0, -2, 0}, {-1, 0, 0, -2}};
}
}  // namespace

TEST_CASE("rank one enumeration: [-2] has cosets {0, 2}") {
    DefiniteLattice lat = make_definite({{-2}});
    auto cosets = char_cosets(lat);
    REQUIRE(cosets.size() == 2);
    std::set<long long> reps = {cosets[0].rep[0], cosets[1].rep[0]};
    CHECK(reps.count(0) == 1);
    CHECK(reps.count(2) == 1);
    std::set<std::string> dvals;
    for (auto& c : cosets) dvals.insert(d_invariant(lat, c).to_string());
    CHECK(dvals.count("1/4") == 1);
    CHECK(dvals.count("-1/4") == 1);
}

TEST_CASE("unimodular lattices have one coset and d = 0") {
    DefiniteLattice a = make_definite({{-1}});
    auto ca = char_cosets(a);
    REQUIRE(ca.size() == 1);
    CHECK(d_invariant(a, ca[0]).is_zero());

    DefiniteLattice b = make_definite({{-1, 0}, {0, -1}});
    auto cb = char_cosets(b);
    REQUIRE(cb.size() == 1);
    CHECK(d_invariant(b, cb[0]).is_zero());

    // -E8: even unimodular, d = 2
    IntMat e8(8, IntVec(8, 0));
    for (int i = 0; i < 8; ++i) e8[i][i] = -2;
    // D8-chain part of E8's Dynkin diagram with the branch at node 4
    int edges[7][2] = {{0,1},{1,2},{2,3},{3,4},{4,5},{5,6},{4,7}};
    for (auto& e : edges) { e8[e[0]][e[1]] = 1; e8[e[1]][e[0]] = 1; }
    DefiniteLattice le8 = make_definite(e8);
    CHECK(le8.det_abs.to_ll() == 1);
    auto ce8 = char_cosets(le8);
    REQUIRE(ce8.size() == 1);
    CHECK(d_invariant(le8, ce8[0]).to_string() == "2");
}

TEST_CASE("negated L4 star lattice: d multiset {0, 1/2, -1/2, 0}") {
    DefiniteLattice lat = make_definite(neg_star_1_2_4_6());
    CHECK(lat.det_abs.to_ll() == 4);
    auto cosets = char_cosets(lat);
    REQUIRE(cosets.size() == 4);
    std::multiset<std::string> dvals;
    for (auto& c : cosets) dvals.insert(d_invariant(lat, c).to_string());
    CHECK(dvals.count("0") == 2);
    CHECK(dvals.count("1/2") == 1);
    CHECK(dvals.count("-1/2") == 1);
}

TEST_CASE("negated D4 lattice: d multiset {1, 0, 0, 0}") {
    DefiniteLattice lat = make_definite(neg_d4());
    CHECK(lat.det_abs.to_ll() == 4);
    auto cosets = char_cosets(lat);
    REQUIRE(cosets.size() == 4);
    std::multiset<std::string> dvals;
    for (auto& c : cosets) dvals.insert(d_invariant(lat, c).to_string());
    CHECK(dvals.count("1") == 1);
    CHECK(dvals.count("0") == 3);
}

TEST_CASE("positive definite input is rejected") {
    DefiniteLattice lat = make_definite({{2}});
    CHECK(lat.definite_sign == 1);
    auto c = canonical_char(lat, {0});
    CHECK_THROWS_AS(d_invariant(lat, c), precondition_error);
    CHECK_THROWS_AS(make_definite({{1, 0}, {0, -1}}), precondition_error);
    CHECK_THROWS_AS(make_definite({{1, 1}, {1, 1}}), precondition_error);
}

TEST_CASE("denominator of d divides 4 det") {
    DefiniteLattice lat = make_definite({{-3, 1}, {1, -5}});
    for (auto& c : char_cosets(lat)) {
        Rational d = d_invariant(lat, c);
        BigInt q, r;
        BigInt::divmod(BigInt(4) * lat.det_abs, d.den(), q, r);
        CHECK(r.is_zero());
    }
}

TEST_CASE("optimized search equals box oracle on random lattices") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> rank_d(1, 4);
    std::uniform_int_distribution<long long> diag_d(1, 6);
    std::uniform_int_distribution<long long> off_d(-2, 2);
    int done = 0;
    while (done < 100) {
        int n = rank_d(rng);
        IntMat q(n, IntVec(n, 0));
        for (int i = 0; i < n; ++i) q[i][i] = -diag_d(rng);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                long long v = off_d(rng);
                q[i][j] = v;
                q[j][i] = v;
            }
        SymSig sig = symmetric_signature(q);
        if (sig.nul != 0 || sig.neg != n) continue;
        DefiniteLattice lat = make_definite(q);
        if (lat.det_abs > BigInt(40)) continue;
        for (auto& c : char_cosets(lat))
            CHECK(d_invariant(lat, c) == d_invariant_box_oracle(lat, c));
        ++done;
    }
}

TEST_CASE("hopf spin selection picks the coset with 4d = 1") {
    LinkDiagram d = hopf();
    Checkerboard cb = checkerboard(d);
    GoeritzData g = goeritz_matrix(d, cb, true);
    REQUIRE(g.matrix.size() == 1);
    REQUIRE(g.matrix[0][0] == -2);
    DefiniteLattice lat = make_definite(g.matrix);
    CharClass c = spin_char_class(d, cb, g);
    CHECK((d_invariant(lat, c) * Rational(4)).to_string() == "1");
    CHECK(delta_invariant(d) == 1);
}

TEST_CASE("delta anchors through the full pipeline") {
    CHECK(delta_invariant(hopf()) == 1);                               // H tilde
    CHECK(delta_invariant(reverse_components(hopf(), {1})) == -1);     // other quasiorientation
    CHECK(delta_invariant(braid_closure_diagram({1, 1, 1})) == 2);     // right trefoil
    CHECK(delta_invariant(braid_closure_diagram({-1, -1, -1})) == -2); // left trefoil
    CHECK(delta_invariant(braid_closure_diagram({1, -2, 1, -2})) == 0);  // figure eight
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> w(static_cast<size_t>(2 * k), 1);
        LinkDiagram d = braid_closure_diagram(w);
        CHECK(delta_invariant(d) == 2 * k - 1);  // sigma + delta = 0, alternating
        CHECK(signature(d) + delta_invariant(d) == 0);
    }
}

TEST_CASE("delta is additive under connected sum") {
    LinkDiagram t = braid_closure_diagram({1, 1, 1});
    LinkDiagram h = hopf();
    CHECK(delta_invariant(connected_sum(t, h)) == 3);
    CHECK(delta_invariant(connected_sum(h, h)) == 2);
}

TEST_CASE("delta negation") {
    for (auto word : {std::vector<int>{1, 1}, {1, 1, 1}, {1, 1, 1, 1}, {1, -2, 1, -2}}) {
        LinkDiagram d = braid_closure_diagram(word);
        CHECK(delta_invariant(negate(d)) == -delta_invariant(d));
    }
}

TEST_CASE("reversing one component of a linked pair changes the selected coset") {
    LinkDiagram d = braid_closure_diagram({1, 1, 1, 1});  // S(4,1)
    Checkerboard cb = checkerboard(d);
    GoeritzData g = goeritz_matrix(d, cb, true);
    CharClass c1 = spin_char_class(d, cb, g);
    LinkDiagram r = reverse_components(d, {1});
    // same unoriented diagram, so the same Goeritz data applies
    Checkerboard cbr = checkerboard(r);
    GoeritzData gr = goeritz_matrix(r, cbr, true);
    CharClass c2 = spin_char_class(r, cbr, gr);
    CHECK_FALSE(c1 == c2);
}

TEST_CASE("number of distinct cosets over quasiorientations is 2^(m-1)") {
    // fixtures: Hopf (m=2), S(4,1) (m=2), trefoil (m=1), borromean braid (m=3)
    std::vector<std::vector<int>> words = {{1, 1}, {1, 1, 1, 1}, {1, 1, 1}, {1, -2, 1, -2, 1, -2}};
    for (const auto& w : words) {
        LinkDiagram d = braid_closure_diagram(w);
        int m = d.num_components();
        Checkerboard cb = checkerboard(d);
        GoeritzData g = goeritz_matrix(d, cb, true);
        SymSig sig = symmetric_signature(g.matrix);
        bool use_white = sig.pos == 0 && sig.nul == 0;
        GoeritzData gg = use_white ? g : goeritz_matrix(d, cb, false);
        SymSig sig2 = symmetric_signature(gg.matrix);
        if (!(sig2.pos == 0 && sig2.nul == 0)) continue;  // need a negative side here
        std::set<CharClass> seen;
        for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
            std::vector<int> rev;
            for (int i = 1; i < m; ++i)
                if (mask & (1 << (i - 1))) rev.push_back(i);
            LinkDiagram dd = reverse_components(d, rev);
            Checkerboard cbd = checkerboard(dd);
            GoeritzData gd = goeritz_matrix(dd, cbd, gg.white_is_color_white);
            seen.insert(spin_char_class(dd, cbd, gd));
        }
        CHECK(static_cast<int>(seen.size()) == (1 << (m - 1)));
    }
}

TEST_CASE("delta requires nonzero determinant and orientation") {
    LinkDiagram u2 = parse_pd("PD[] comps=[[1]] marked=1");
    LinkDiagram split = connected_sum(u2, u2);  // still the unknot
    CHECK(delta_invariant(split) == 0);
    LinkDiagram h = hopf();
    h.mode = OrientationMode::PartlyOriented;
    CHECK_THROWS_AS(delta_invariant(h), precondition_error);
}
