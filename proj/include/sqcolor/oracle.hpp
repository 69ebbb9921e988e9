#pragma once

#include <optional>
#include <vector>

#include "sqcolor/graph.hpp"
#include "sqcolor/mode.hpp"

namespace sqc {

// Exact 2-distance chromatic number (chromatic number of the square), by
// DSATUR-ordered branch and bound. Guard: n <= 14 (throws TooLarge above).
int chi2_exact(const Graph& g);

// Exhaustive search for a coloring from per-vertex lists under the given
// mode. Returns a coloring (color per vertex) or nullopt if none exists.
// lists.size() must equal g.n. Guard: n <= 14 (throws TooLarge above).
std::optional<std::vector<int>> list_color_exact(const Graph& g,
                                                 const std::vector<std::vector<int>>& lists,
                                                 Mode mode);

}  // namespace sqc
