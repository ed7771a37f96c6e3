// Star-shaped plumbing trees: intersection matrices, the associated
// Montesinos link diagrams, and quasiorientation sweeps of sigma and delta.

#pragma once

#include <string>
#include <vector>

#include "concordia/link_core.hpp"
#include "concordia/matrix.hpp"

namespace concordia {

struct PlumbingTree {
    std::vector<long long> weights;            // per vertex, nonzero
    std::vector<std::pair<int, int>> edges;    // tree edges, 0-based vertex ids

    int size() const { return static_cast<int>(weights.size()); }
    void validate() const;  // tree shape, nonzero weights
};

// Text form: vertices: [1,2,4,6]; edges: [(0,1),(0,2),(0,3)]
PlumbingTree parse_tree(const std::string& text);
std::string to_tree_text(const PlumbingTree& t);

// Weights on the diagonal, 1 for each edge.
IntMat plumbing_matrix(const PlumbingTree& t);

// Montesinos diagram of a star-shaped tree: numerator closure of the
// center's horizontal twists summed with one rational tangle per leg.
// Throws unavailable_error for non-star trees.
LinkDiagram montesinos_diagram(const PlumbingTree& t);

struct SweepEntry {
    std::vector<int> reversed;  // components reversed relative to the base diagram
    long long sigma = 0;
    long long delta = 0;
};

// sigma and delta over all 2^(m-1) quasiorientations (the marked component
// keeps its direction).
std::vector<SweepEntry> quasiorientation_sweep(const LinkDiagram& d);

}  // namespace concordia
