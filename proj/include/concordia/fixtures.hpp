// Named fixture corpus used by tests, the acceptance suite, and the repo's
// fixtures/ directory.

#pragma once

#include <string>
#include <vector>

#include "concordia/describe.hpp"

namespace concordia::fixtures {

struct Fixture {
    std::string name;
    std::string description;  // link-description mini-language
};

// Marked oriented positive Hopf link (l-tilde, sigma, delta) = (1, -1, 1).
LinkInput hopf_marked();

// A marked oriented link with (l-tilde, sigma, delta) = (1, 0, 0), built as
// the connected sum of a reversed negative (2,4)-torus link with a reversed
// positive Hopf link. Validated by that triple in the acceptance suite.
LinkInput ltilde1();

// Montesinos link of the star plumbing (1; 2, 4, 6).
LinkInput l4();

// Oriented fixtures with computable delta (braids, two-bridge, plumbings).
std::vector<Fixture> oriented_corpus();

// Braid-backed fixtures for the cross-oracle checks.
std::vector<Fixture> braid_corpus();

}  // namespace concordia::fixtures
