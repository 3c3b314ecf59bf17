#pragma once

#include "gmarkov/contfrac.hpp"

#include <utility>
#include <vector>

namespace gmarkov {

// Snake graph of a continued fraction: unit tiles placed right/up so that the
// interior shared-edge signs spell the middle of the alternating sign word
// <(-)^{a1} (+)^{a2} ...> with the two end signs dropped.
struct SnakeGraph {
    // Lower-left corners of the tiles in placement order; empty for [] and [1]
    // (those degenerate to a point resp. a single edge).
    std::vector<std::pair<int, int>> tiles;
    bool single_edge = false; // the [1] case
};

SnakeGraph snake_graph_build(const RegCF& cf);

// Exhaustive perfect-matching count; the independent oracle for the
// continuant route. Rejects graphs with more than 16 tiles.
Int brute_force_matchings(const SnakeGraph& g);

} // namespace gmarkov
