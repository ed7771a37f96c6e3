// The link-description mini-language shared by the CLI and group files:
//   S(p,q)                      two-bridge link
//   braid: 1 1 -2               braid closure
//   pd: PD[...] marked=1 ...    explicit PD text
//   tree: vertices: [...]; edges: [...]   Montesinos diagram of a star tree
//   unknot                      crossingless unknot
// Suffix modifiers, each introduced by '!':
//   !mirror        reverse-mirror (negate)
//   !rev=2,3       reverse the listed components (1-based)
//   !mark=2        mark a different component (1-based)
//   !partly        forget orientations of nonmarked components

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concordia/link_core.hpp"

namespace concordia {

struct LinkInput {
    std::string text;                       // original description
    LinkDiagram diagram;
    std::optional<std::vector<int>> braid;  // kept when the input stays a braid closure
};

LinkInput parse_link_description(const std::string& text);

}  // namespace concordia
