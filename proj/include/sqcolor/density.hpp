#pragma once

#include <vector>

#include "sqcolor/graph.hpp"
#include "sqcolor/rational.hpp"

namespace sqc {

// Result of a maximum-average-degree computation: the exact value and a
// vertex set whose induced subgraph attains it (2 * e(W) / |W| == value).
struct MadCertificate {
    Rational value;
    std::vector<int> witness;  // sorted, nonempty for n >= 1
};

// 2m/n for the whole graph. Throws BadInput on the empty graph.
Rational average_degree(const Graph& g);

// Exact maximum average degree over all nonempty induced subgraphs, computed
// with Goldberg's max-flow reduction and a binary search over exact rationals.
// Throws BadInput on the empty graph.
MadCertificate mad_exact(const Graph& g);

// Same value by enumerating all nonempty vertex subsets. Guard: n <= 28
// (throws TooLarge above). Witness is the optimal subset with the smallest
// bitmask, so it is deterministic.
MadCertificate mad_bruteforce(const Graph& g);

// The planar-graph bound (mad - 2)(girth - 2) < 4, checked exactly.
// For a forest (infinite girth) the bound degenerates to mad <= 2.
bool euler_check(const Graph& g);

}  // namespace sqc
