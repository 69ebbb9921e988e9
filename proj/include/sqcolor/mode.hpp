#pragma once

#include "sqcolor/graph.hpp"

namespace sqc {

// Which pairs of vertices must receive distinct colors.
//   TwoDistance: vertices at distance 1 or 2 (proper coloring of the square).
//   Injective:   vertices with at least one common neighbor; adjacency alone
//                imposes nothing.
enum class Mode { TwoDistance, Injective };

// The constraint graph of the chosen mode: square(g) for TwoDistance, the
// common-neighbor graph for Injective.
Graph conflict_graph(const Graph& g, Mode mode);

}  // namespace sqc
