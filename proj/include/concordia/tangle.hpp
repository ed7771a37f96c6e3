// Rational tangles with exact fraction bookkeeping, and their numerator
// closures as link diagrams. Used by the two-bridge and Montesinos
// generators; the construction is validated by its own fraction arithmetic
// and by determinant tests downstream.

#pragma once

#include <vector>

#include "concordia/link_core.hpp"

namespace concordia {

// A 4-valent vertex before orientations are chosen. Arc slots are listed
// counterclockwise starting at the NE corner: 0=NE, 1=NW, 2=SW, 3=SE.
// under_diag 0 means the strand through slots {0,2} passes under, 1 means
// the strand through slots {1,3} does.
struct ProtoCrossing {
    std::array<int, 4> arcs{};
    int under_diag = 0;
};

struct Tangle {
    std::vector<ProtoCrossing> crossings;
    int nw = 0, ne = 0, sw = 0, se = 0;  // boundary arc labels
    long long fnum = 0, fden = 1;        // tangle fraction, infinity = 1/0
    int next_arc = 1;

    static Tangle zero();      // two horizontal strands, fraction 0
    static Tangle infinity();  // two vertical strands, fraction 1/0
};

// One crossing added at the right (between NE and SE ends) or bottom
// (between SW and SE ends); sign +1 gives the handedness that makes the
// all-positive construction alternating with negative-definite white Goeritz
// form (see docs/conventions.md).
void twist_right(Tangle& t, int sign);
void twist_bottom(Tangle& t, int sign);

// Side-by-side sum: t gains t2 on its right.
void tangle_sum(Tangle& t, const Tangle& t2);

// The rational tangle with fraction p/q (q may be zero for the infinity
// tangle), built by alternating twists along the continued fraction of p/q.
// The construction asserts its own fraction bookkeeping.
Tangle rational_tangle(long long p, long long q);

// Numerator closure: join NW-NE and SW-SE. The marked component is the one
// through the smallest arc. Orientations are chosen deterministically; use
// reverse_components for other quasiorientations.
LinkDiagram numerator_closure(const Tangle& t);

}  // namespace concordia
