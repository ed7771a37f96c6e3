// Correction terms of boundaries of definite forms: characteristic-vector
// cosets, exact d-invariant maximization, and the spin structure selected by
// a link orientation through its Goeritz presentation.

#pragma once

#include "concordia/goeritz.hpp"
#include "concordia/link_core.hpp"
#include "concordia/matrix.hpp"
#include "concordia/rational.hpp"

namespace concordia {

struct DefiniteLattice {
    IntMat q;
    int definite_sign = 0;  // +1 positive definite, -1 negative definite
    BigInt det_abs;

    int rank() const { return static_cast<int>(q.size()); }
};

// Validates definiteness (rank 0 counts as definite of either sign).
DefiniteLattice make_definite(const IntMat& q);

struct CharClass {
    IntVec rep;  // canonical representative of xi + 2 Q Z^n

    bool operator==(const CharClass& o) const { return rep == o.rep; }
    bool operator<(const CharClass& o) const { return rep < o.rep; }
};

// Canonical representative of the coset of xi (xi must be characteristic).
CharClass canonical_char(const DefiniteLattice& lat, const IntVec& xi);

// All |det Q| characteristic cosets, sorted by canonical representative.
std::vector<CharClass> char_cosets(const DefiniteLattice& lat);

// d(Y, s) = max over the coset of (xi^T Q^{-1} xi + rank)/4 for negative
// definite Q, computed by exact closest-vector enumeration.
Rational d_invariant(const DefiniteLattice& lat, const CharClass& c);

// Coefficient-box search with one-step stability expansion; used
// as the independent oracle for small ranks.
Rational d_invariant_box_oracle(const DefiniteLattice& lat, const CharClass& c);

// Characteristic sublink of the Goeritz presentation selected by the
// diagram's orientation: a white region enters when every path from the
// region at infinity reaches it through an odd number of negative crossings.
// Returns the resulting coset of G * indicator(S).
CharClass spin_char_class(const LinkDiagram& d, const Checkerboard& cb, const GoeritzData& g);

// A definite chessboard presentation of the diagram, mirrored when only the
// positive side exists. Throws unavailable_error when neither coloring of the
// diagram or its mirror is definite.
struct DefinitePresentation {
    LinkDiagram diagram;   // d or negate(d)
    bool mirrored = false;
    Checkerboard cb;
    GoeritzData g;
    DefiniteLattice lat;   // negative definite
};
DefinitePresentation definite_presentation(const LinkDiagram& d);

// delta = 4 d(Sigma_2(S^3, L), s_L). MarkedOriented diagrams with nonzero
// determinant and a definite chessboard side (possibly after mirroring).
long long delta_invariant(const LinkDiagram& d);

}  // namespace concordia
