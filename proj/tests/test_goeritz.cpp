#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "concordia/goeritz.hpp"
#include "concordia/link_core.hpp"

using namespace concordia;

namespace {
LinkDiagram hopf() { return parse_pd("PD[X(4,2,3,1), X(2,4,1,3)] marked=1 mode=oriented"); }
}  // namespace

TEST_CASE("hopf regions: two crossings, four faces") {
    LinkDiagram d = hopf();
    Checkerboard cb = checkerboard(d);
    CHECK(cb.num_faces == 4);
    CHECK(cb.alternating);
    int whites = static_cast<int>(cb.faces_of_color(true).size());
    int blacks = cb.num_faces - whites;
    CHECK(whites == 2);
    CHECK(blacks == 2);
}

TEST_CASE("trefoil diagram has five regions") {
    LinkDiagram d = braid_closure_diagram({1, 1, 1});
    Checkerboard cb = checkerboard(d);
    CHECK(cb.num_faces == 5);
    CHECK(cb.alternating);
}

TEST_CASE("hopf goeritz matrix is [-2] on the convention side") {
    LinkDiagram d = hopf();
    Checkerboard cb = checkerboard(d);
    GoeritzData g = goeritz_matrix(d, cb, true);
    REQUIRE(g.matrix.size() == 1);
    CHECK(g.matrix[0][0] == -2);
    // The other class gives the positive form; both determinants are 2.
    GoeritzData g2 = goeritz_matrix(d, cb, false);
    REQUIRE(g2.matrix.size() == 1);
    CHECK(g2.matrix[0][0] == 2);
    CHECK(determinant(d).to_ll() == 2);
}

TEST_CASE("signature anchors: Hopf and trefoils") {
    CHECK(signature(hopf()) == -1);
    CHECK(signature(braid_closure_diagram({1, 1, 1})) == -2);   // right trefoil
    CHECK(signature(braid_closure_diagram({-1, -1, -1})) == 2); // left trefoil
    CHECK(signature(braid_closure_diagram({1, -2, 1, -2})) == 0);  // figure eight
}

TEST_CASE("sigma of torus links T(2,2k) with parallel orientation") {
    for (int k = 1; k <= 4; ++k) {
        std::vector<int> w(static_cast<size_t>(2 * k), 1);
        LinkDiagram d = braid_closure_diagram(w);
        CHECK(signature(d) == -(2 * k - 1));
        CHECK(determinant(d).to_ll() == 2 * k);
    }
}

TEST_CASE("sigma flips under negation across a corpus") {
    for (auto word : {std::vector<int>{1, 1}, {1, 1, 1}, {1, -2, 1, -2}, {1, -2, 1, -2, 1},
                      {1, 1, 1, 1}, {1, -2, 1, -2, 1, -2}}) {
        LinkDiagram d = braid_closure_diagram(word);
        CHECK(signature(negate(d)) == -signature(d));
        CHECK(determinant(negate(d)) == determinant(d));
    }
}

TEST_CASE("signature and determinant do not depend on surface or region choices") {
    for (auto word : {std::vector<int>{1, 1, 1}, {1, -2, 1, -2}, {1, 1, 1, 1}, {1, -2, 1, -2, 1}}) {
        LinkDiagram d = braid_closure_diagram(word);
        Checkerboard cb = checkerboard(d);
        long long s_ref = signature(d);
        BigInt det_ref = determinant(d);
        for (bool white : {true, false}) {
            for (int r0 : cb.faces_of_color(white)) {
                GoeritzData g = goeritz_matrix(d, cb, white, r0);
                SymSig sig = symmetric_signature(g.matrix);
                CHECK(static_cast<long long>(sig.pos - sig.neg) - g.mu_correction == s_ref);
                CHECK(mat_det(g.matrix).abs() == det_ref);
            }
        }
    }
}

TEST_CASE("determinant anchors") {
    CHECK(determinant(braid_closure_diagram({1, 1, 1})).to_ll() == 3);      // trefoil
    CHECK(determinant(braid_closure_diagram({1, -2, 1, -2})).to_ll() == 5); // figure eight
    CHECK(determinant(braid_closure_diagram({1, -2, 1, -2, 1})).to_ll() == 8);  // whitehead
    CHECK(determinant(braid_closure_diagram({1, -2, 1, -2, 1, -2})).to_ll() == 16);  // borromean
    CHECK(determinant(parse_pd("PD[] comps=[[1]] marked=1")).to_ll() == 1);
}

TEST_CASE("determinant is multiplicative under connected sum") {
    LinkDiagram t = braid_closure_diagram({1, 1, 1});
    LinkDiagram h = hopf();
    CHECK(determinant(connected_sum(t, h)).to_ll() == 6);
    CHECK(signature(connected_sum(t, h)) == -3);
}

TEST_CASE("antiparallel Hopf link has sigma +1") {
    LinkDiagram r = reverse_components(hopf(), {1});
    CHECK(signature(r) == 1);
    CHECK(determinant(r).to_ll() == 2);
}

TEST_CASE("kinked unknot still has determinant 1") {
    // one positive curl: X(1,1,2,2)
    LinkDiagram d = parse_pd("PD[X(1,1,2,2)] marked=1");
    CHECK(d.num_components() == 1);
    CHECK(determinant(d).to_ll() == 1);
    CHECK(signature(d) == 0);
}

TEST_CASE("partly oriented input is rejected by signature") {
    LinkDiagram d = hopf();
    d.mode = OrientationMode::PartlyOriented;
    CHECK_THROWS_AS(signature(d), precondition_error);
    CHECK_NOTHROW(determinant(d));
}

TEST_CASE("multi-component unlinks have determinant zero") {
    LinkDiagram u2 = parse_pd("PD[] comps=[[1],[2]] marked=1");
    CHECK(u2.num_components() == 2);
    CHECK(determinant(u2).is_zero());
    CHECK(signature(u2) == 0);
    CHECK(mu_invariant(u2) == 1);
    LinkDiagram u3 = parse_pd("PD[] comps=[[1],[2],[3]] marked=1");
    CHECK(determinant(u3).is_zero());
    CHECK(mu_invariant(u3) == 0);
}
