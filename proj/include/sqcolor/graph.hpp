#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sqcolor/errors.hpp"

namespace sqc {

// Simple undirected graph on vertices 0..n-1. Adjacency lists are sorted
// ascending and duplicate-free; self-loops are rejected at construction.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    long long edge_count() const;

    // All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
};

// Builds a graph from an edge list. Throws LoopEdge on (v, v) and
// VertexOutOfRange on endpoints outside [0, n). Duplicate edges are merged
// silently.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

int max_degree(const Graph& g);

// Subgraph induced by `vertices`; result vertex i corresponds to vertices[i].
// Throws VertexOutOfRange / BadInput (duplicate entry).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// The square of g: same vertices, an edge between every pair at distance 1
// or 2 in g.
Graph square(const Graph& g);

// Length of a shortest cycle; std::nullopt if g is a forest.
std::optional<int> girth(const Graph& g);

// All vertices u != v with dist(u, v) <= 2, sorted ascending.
std::vector<int> dist2_closed_neighborhood(const Graph& g, int v);

// A path x - inner[0] - ... - inner[p-1] - y whose inner vertices all have
// degree 2. The operations below only produce 1-links (single inner vertex).
struct Link {
    int x;
    std::vector<int> inner;
    int y;
};

// Every 1-link with endpoint x: for each neighbor a of x with degree 2, the
// link x - a - y where y is a's other neighbor. Sorted by the middle vertex a.
std::vector<Link> one_links(const Graph& g, int x);

// A biconnected component: its vertices (sorted) and its edges (u < v,
// lexicographic). Every edge of the graph belongs to exactly one block;
// isolated vertices belong to none.
struct Block {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
};

std::vector<Block> blocks(const Graph& g);

}  // namespace sqc
