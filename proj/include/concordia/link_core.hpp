// PD-coded link diagrams with a marked component.
//
// Conventions (see docs/pd_format.md):
//  - A crossing is stored as the counterclockwise 4-tuple of arc labels
//    starting from the incoming under-strand, so arcs[0] enters under and
//    arcs[2] leaves under. The over-strand occupies slots 1 and 3.
//  - Crossing sign is +1 when the over-strand runs left-to-right across the
//    under-strand's direction of travel, which in slot terms means the
//    incoming over-arc sits at slot 3.

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace concordia {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unavailable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OrientationMode { MarkedOriented, PartlyOriented };

struct Crossing {
    std::array<int, 4> arcs{};  // ccw from incoming under-strand
    int over_in_slot = 3;       // 1 or 3; 3 means sign +1

    int sign() const { return over_in_slot == 3 ? +1 : -1; }
    int under_in() const { return arcs[0]; }
    int under_out() const { return arcs[2]; }
    int over_in() const { return arcs[static_cast<size_t>(over_in_slot)]; }
    int over_out() const { return arcs[static_cast<size_t>((over_in_slot + 2) % 4)]; }
    int over_out_slot() const { return (over_in_slot + 2) % 4; }
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> components;  // arcs in traversal order, cyclic
    int marked = 0;                            // 0-based component index
    OrientationMode mode = OrientationMode::MarkedOriented;

    int num_components() const { return static_cast<int>(components.size()); }
    int component_of_arc(int arc) const;
    bool is_free_loop(int comp) const;

    void validate() const;  // throws parse_error on structural defects
};

// Parsing / printing of the PD text format.
LinkDiagram parse_pd(const std::string& text);
std::string to_pd_text(const LinkDiagram& d);

// Deterministic byte string: invariant under reordering of the input crossings.
std::string canonical_form(const LinkDiagram& d);

// Pairwise linking number. In PartlyOriented mode one of i, j must be the
// marked component and the result is reduced mod 2 (returned as 0/1).
long long linking_number(const LinkDiagram& d, int i, int j);

// Sum of linking numbers of the marked component with all others; reduced
// mod 2 in PartlyOriented mode.
long long total_linking(const LinkDiagram& d);

// (1 + number of components) mod 2.
int mu_invariant(const LinkDiagram& d);

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b);
LinkDiagram negate(const LinkDiagram& d);  // mirror + reverse all orientations

// Reverse orientation of the given components (0-based indices).
LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<int>& comps);

// Diagram of a braid closure; strands oriented upward, so positive letters
// give positive crossings. Marked component is the one through strand 1.
LinkDiagram braid_closure_diagram(const std::vector<int>& word);

// Extract the marked component as a knot diagram (other components deleted,
// crossings with them smoothed away).
LinkDiagram marked_component_diagram(const LinkDiagram& d);

// Split the diagram into its connected (diagrammatic) pieces. Each piece is a
// diagram with marked = 0; the second value lists which original components
// ended up in each piece.
std::vector<LinkDiagram> split_pieces(const LinkDiagram& d);

}  // namespace concordia
