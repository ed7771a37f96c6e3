#include "concordia/fixtures.hpp"

#include "concordia/link_core.hpp"

namespace concordia::fixtures {

LinkInput hopf_marked() { return parse_link_description("braid: 1 1"); }

LinkInput ltilde1() {
    // negate(S(4,1) with one component reversed) # (S(2,1) with one reversed):
    // triples (2, -1, 1) + (-1, 1, -1) = (1, 0, 0)
    LinkInput a = parse_link_description("S(4,1)!rev=2!mirror");
    LinkInput b = parse_link_description("S(2,1)!rev=2");
    LinkInput out;
    out.text = "ltilde1";
    out.diagram = connected_sum(a.diagram, b.diagram);
    return out;
}

LinkInput l4() {
    return parse_link_description("tree: vertices: [1,2,4,6]; edges: [(0,1),(0,2),(0,3)]");
}

std::vector<Fixture> braid_corpus() {
    return {
        {"hopf+", "braid: 1 1"},
        {"trefoil-r", "braid: 1 1 1"},
        {"trefoil-l", "braid: -1 -1 -1"},
        {"figure8", "braid: 1 -2 1 -2"},
        {"whitehead", "braid: 1 -2 1 -2 1"},
        {"borromean", "braid: 1 -2 1 -2 1 -2"},
        {"t24", "braid: 1 1 1 1"},
        {"t26", "braid: 1 1 1 1 1 1"},
        {"t28", "braid: 1 1 1 1 1 1 1 1"},
        {"t2_10", "braid: 1 1 1 1 1 1 1 1 1 1"},
        {"t25-knot", "braid: 1 1 1 1 1"},
        {"t27-knot", "braid: 1 1 1 1 1 1 1"},
        {"cinquefoil-l", "braid: -1 -1 -1 -1 -1"},
        {"granny", "braid: 1 1 1 2 2 2"},
        {"square-knot", "braid: 1 1 1 -2 -2 -2"},
        {"t33", "braid: 1 2 1 2 1 2"},
        {"6_2-ish", "braid: 1 1 1 -2 1 -2"},
        {"7_2-ish", "braid: 1 1 1 1 1 -2 1 -2"},
    };
}

std::vector<Fixture> oriented_corpus() {
    std::vector<Fixture> all = braid_corpus();
    // two-bridge links and knots with both quasiorientations where applicable
    for (const char* s : {"S(3,1)", "S(4,1)", "S(5,2)", "S(6,1)", "S(7,2)", "S(8,3)", "S(9,2)",
                          "S(10,3)", "S(11,3)", "S(12,5)", "S(13,5)", "S(15,4)", "S(16,7)",
                          "S(17,4)", "S(20,9)", "S(25,7)", "S(26,5)", "S(30,11)"})
        all.push_back({s, s});
    for (const char* s : {"S(4,1)!rev=2", "S(8,3)!rev=2", "S(10,3)!rev=2", "S(12,5)!rev=2"})
        all.push_back({s, s});
    // plumbings
    all.push_back({"v2", "tree: vertices: [2]; edges: []"});
    all.push_back({"v4", "tree: vertices: [4]; edges: []"});
    all.push_back({"path22", "tree: vertices: [2,2]; edges: [(0,1)]"});
    all.push_back({"path222", "tree: vertices: [2,2,2]; edges: [(0,1),(1,2)]"});
    all.push_back({"d4star", "tree: vertices: [2,2,2,2]; edges: [(0,1),(0,2),(0,3)]"});
    all.push_back({"l4", "tree: vertices: [1,2,4,6]; edges: [(0,1),(0,2),(0,3)]"});
    return all;
}

}  // namespace concordia::fixtures
