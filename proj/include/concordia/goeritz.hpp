// Checkerboard colorings, Goeritz matrices, and the Gordon-Litherland
// signature and determinant of a diagram.
//
// Face corners at a crossing are indexed 0..3, corner k lying between slots
// k and k+1 (mod 4) of the crossing tuple. The two white corners of a
// crossing are always opposite, so each crossing carries one of two
// "white diagonals": {0,2} (corner 0 and corner 2) or {1,3}.
//
// Conventions pinned by the test anchors (positive Hopf, torus links):
//  - eta(c) = +1 when the white corners are {0,2}, -1 when {1,3};
//    G_off(r,r') = -sum eta over crossings joining white regions r, r'.
//  - a crossing is of type II exactly when the corner between the outgoing
//    under-arc and the outgoing over-arc is black; mu = sum of signs over
//    type II crossings; sigma(L) = sig(G) - mu.
// With these choices the alternating all-positive 4-plat diagrams get a
// negative-definite G on the coloring used throughout (see docs/conventions.md).

#pragma once

#include "concordia/link_core.hpp"
#include "concordia/matrix.hpp"

namespace concordia {

struct Checkerboard {
    int num_faces = 0;
    // corner_face[c][k]: face index at corner k of crossing c
    std::vector<std::array<int, 4>> corner_face;
    std::vector<bool> is_white;  // per face, for the deterministic coloring
    bool alternating = false;

    std::vector<int> faces_of_color(bool white) const;
};

struct GoeritzData {
    IntMat matrix;                 // rows/cols indexed by white faces minus r0
    std::vector<int> white_faces;  // face ids, in matrix order
    int region_at_infinity = -1;   // face id of the deleted region
    long long mu_correction = 0;   // Gordon-Litherland correction for this surface
    bool white_is_color_white = true;  // which coloring class was used
};

// Faces of the diagram's rotation system; throws unavailable_error when the
// diagram is disconnected and parse_error when the PD is not planar.
Checkerboard checkerboard(const LinkDiagram& d);

// Goeritz matrix for the given coloring class ("white" = is_white when
// use_white, else the complementary class), deleting region r0 (face id; -1
// picks the smallest face of that class). mu is computed from the diagram's
// orientations; for PartlyOriented input it is left at 0 and unusable.
GoeritzData goeritz_matrix(const LinkDiagram& d, const Checkerboard& cb, bool use_white,
                           int r0 = -1);

// Oriented link signature via Gordon-Litherland. MarkedOriented input only.
long long signature(const LinkDiagram& d);

// |det G|; 0 for split diagrams, 1 for the crossingless unknot.
BigInt determinant(const LinkDiagram& d);

}  // namespace concordia
