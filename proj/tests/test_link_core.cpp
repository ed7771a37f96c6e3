#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "concordia/link_core.hpp"

using namespace concordia;

namespace {
const char* kHopfPD = "PD[X(4,2,3,1), X(2,4,1,3)] marked=1 mode=oriented";
const char* kUnknotPD = "PD[] comps=[[1]] marked=1 mode=oriented";
}  // namespace

TEST_CASE("positive Hopf link parses with two components and lk = +1") {
    LinkDiagram d = parse_pd(kHopfPD);
    CHECK(d.num_components() == 2);
    CHECK(d.crossings.size() == 2);
    CHECK(d.crossings[0].sign() == 1);
    CHECK(d.crossings[1].sign() == 1);
    CHECK(linking_number(d, 0, 1) == 1);
    CHECK(total_linking(d) == 1);
    CHECK(mu_invariant(d) == 1);
}

TEST_CASE("unknot with zero crossings") {
    LinkDiagram d = parse_pd(kUnknotPD);
    CHECK(d.num_components() == 1);
    CHECK(d.crossings.empty());
    CHECK(total_linking(d) == 0);
    CHECK(mu_invariant(d) == 0);
}

TEST_CASE("arc multiplicity is rejected") {
    CHECK_THROWS_AS(parse_pd("PD[X(1,1,1,2)] marked=1"), parse_error);
    CHECK_THROWS_AS(parse_pd("PD[X(1,2,3,4)] marked=1"), parse_error);
}

TEST_CASE("unmarked diagram is rejected") {
    CHECK_THROWS_AS(parse_pd("PD[X(4,2,3,1), X(2,4,1,3)] mode=oriented"), parse_error);
}

TEST_CASE("braid closure of s1^2 is the positive Hopf link") {
    LinkDiagram d = braid_closure_diagram({1, 1});
    CHECK(d.num_components() == 2);
    CHECK(linking_number(d, 0, 1) == 1);
    for (const auto& x : d.crossings) CHECK(x.sign() == 1);
}

TEST_CASE("braid closure of s1^4 has linking number +2") {
    LinkDiagram d = braid_closure_diagram({1, 1, 1, 1});
    CHECK(d.num_components() == 2);
    CHECK(linking_number(d, 0, 1) == 2);
}

TEST_CASE("trefoil closure is a knot") {
    LinkDiagram d = braid_closure_diagram({1, 1, 1});
    CHECK(d.num_components() == 1);
    CHECK(mu_invariant(d) == 0);
}

TEST_CASE("whitehead braid closure has vanishing total linking") {
    LinkDiagram d = braid_closure_diagram({1, -2, 1, -2, 1});
    CHECK(d.num_components() == 2);
    CHECK(linking_number(d, 0, 1) == 0);
    LinkDiagram p = d;
    p.mode = OrientationMode::PartlyOriented;
    CHECK(total_linking(p) == 0);
}

TEST_CASE("negation mirrors crossings and flips linking numbers") {
    LinkDiagram d = parse_pd(kHopfPD);
    LinkDiagram n = negate(d);
    CHECK(linking_number(n, 0, 1) == -1);
    for (const auto& x : n.crossings) CHECK(x.sign() == -1);
    LinkDiagram nn = negate(n);
    CHECK(linking_number(nn, 0, 1) == 1);
    CHECK(canonical_form(nn) == canonical_form(d));
}

TEST_CASE("reversing one component of the Hopf link gives lk = -1") {
    LinkDiagram d = parse_pd(kHopfPD);
    LinkDiagram r = reverse_components(d, {1});
    CHECK(linking_number(r, 0, 1) == -1);
    for (const auto& x : r.crossings) CHECK(x.sign() == -1);
}

TEST_CASE("connected sum merges marked components") {
    LinkDiagram h = parse_pd(kHopfPD);
    LinkDiagram s = connected_sum(h, h);
    CHECK(s.num_components() == 3);
    CHECK(total_linking(s) == 2);
    CHECK(mu_invariant(s) == (mu_invariant(h) + mu_invariant(h)) % 2);

    LinkDiagram u = parse_pd(kUnknotPD);
    LinkDiagram hu = connected_sum(u, h);
    CHECK(hu.num_components() == 2);
    CHECK(total_linking(hu) == 1);
    LinkDiagram uh = connected_sum(h, u);
    CHECK(uh.num_components() == 2);
    CHECK(total_linking(uh) == 1);
}

TEST_CASE("canonical form is invariant under crossing reorder") {
    LinkDiagram a = parse_pd("PD[X(4,2,3,1), X(2,4,1,3)] marked=1 mode=oriented");
    LinkDiagram b = parse_pd("PD[X(2,4,1,3), X(4,2,3,1)] marked=1 mode=oriented");
    CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("pd text round trips") {
    for (const char* txt : {kHopfPD, kUnknotPD}) {
        LinkDiagram d = parse_pd(txt);
        LinkDiagram d2 = parse_pd(to_pd_text(d));
        CHECK(canonical_form(d) == canonical_form(d2));
    }
    LinkDiagram w = braid_closure_diagram({1, -2, 1, -2, 1});
    CHECK(canonical_form(parse_pd(to_pd_text(w))) == canonical_form(w));
}

TEST_CASE("orient flags reverse components") {
    LinkDiagram d = parse_pd(
        "PD[X(4,2,3,1), X(2,4,1,3)] comps=[[1,2],[3,4]] orient=[+,-] marked=1 mode=oriented");
    CHECK(linking_number(d, 0, 1) == -1);
}

TEST_CASE("declared signs are validated") {
    CHECK_NOTHROW(parse_pd("PD[X(4,2,3,1;+), X(2,4,1,3;+)] marked=1"));
    CHECK_THROWS_AS(parse_pd("PD[X(4,2,3,1;-), X(2,4,1,3;+)] marked=1"), parse_error);
}

TEST_CASE("partly oriented mode gates linking numbers") {
    LinkDiagram b = braid_closure_diagram({1, 1, 2, 2});  // 3-component chain
    CHECK(b.num_components() == 3);
    LinkDiagram p = b;
    p.mode = OrientationMode::PartlyOriented;
    p.marked = 0;
    CHECK_NOTHROW(linking_number(p, 0, 1));
    CHECK_THROWS_AS(linking_number(p, 1, 2), precondition_error);
    CHECK(linking_number(p, 0, 1) == 1);  // mod 2 value
}

TEST_CASE("marked component extraction") {
    LinkDiagram h = parse_pd(kHopfPD);
    LinkDiagram k = marked_component_diagram(h);
    CHECK(k.num_components() == 1);
    CHECK(k.crossings.empty());

    LinkDiagram t = braid_closure_diagram({1, 1, 1, 2, 2});
    CHECK(t.num_components() == 2);
    LinkDiagram tk = marked_component_diagram(t);
    CHECK(tk.num_components() == 1);
}

TEST_CASE("split pieces") {
    LinkDiagram d = braid_closure_diagram({1, 1});
    CHECK(split_pieces(d).size() == 1);
    LinkDiagram u = parse_pd("PD[] comps=[[1]] marked=1");
    CHECK(split_pieces(u).size() == 1);
}

TEST_CASE("signed crossing count between two components is even") {
    for (auto word : {std::vector<int>{1, 1}, {1, 1, 1, 1}, {1, -2, 1, -2, 1},
                      {1, -2, 1, -2, 1, -2}}) {
        LinkDiagram d = braid_closure_diagram(word);
        for (int i = 0; i < d.num_components(); ++i)
            for (int j = i + 1; j < d.num_components(); ++j)
                CHECK_NOTHROW(linking_number(d, i, j));
    }
}

TEST_CASE("reordering input crossings changes no outputs") {
    const char* a = "PD[X(2,5,4,1), X(5,3,7,6), X(6,9,8,4), X(9,7,11,10), X(10,13,1,8), X(13,11,3,2)] marked=1";
    const char* b = "PD[X(13,11,3,2), X(9,7,11,10), X(2,5,4,1), X(6,9,8,4), X(5,3,7,6), X(10,13,1,8)] marked=1";
    LinkDiagram da = parse_pd(a), db = parse_pd(b);
    CHECK(canonical_form(da) == canonical_form(db));
    CHECK(total_linking(da) == total_linking(db));
    CHECK(mu_invariant(da) == mu_invariant(db));
}

TEST_CASE("total linking under negation in both modes") {
    for (auto word : {std::vector<int>{1, 1}, {1, 1, 1, 1}, {1, 1, 2, 2}}) {
        LinkDiagram d = braid_closure_diagram(word);
        CHECK(total_linking(negate(d)) == -total_linking(d));
        LinkDiagram p = d;
        p.mode = OrientationMode::PartlyOriented;
        LinkDiagram np = negate(p);
        CHECK(total_linking(np) == total_linking(p));  // mod 2 values agree
    }
}

TEST_CASE("repository fixture diagrams parse and validate") {
    int parsed = 0;
    for (const char* name :
         {"/figure1_links.txt", "/figure2_links.txt", "/figure3_links.txt"}) {
        std::ifstream in(std::string(FIXTURES_DIR) + name);
        REQUIRE(in.good());
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("PD[", 0) != 0) continue;
            LinkDiagram d = parse_pd(line);
            CHECK_NOTHROW(total_linking(d));
            ++parsed;
        }
    }
    CHECK(parsed == 10);
}
