#pragma once

#include <array>
#include <vector>

#include "sqcolor/graph.hpp"

namespace sqc {

enum class SupportType { None, S1, S2, S3 };
enum class NegativeType { None, N1, N2, N3 };

// The rigid ten-vertex pattern with two locked endpoints. All ten vertices
// are distinct; roles are canonicalized so that u < x, v1 < v2, w1 < w2, and
// middles holds the degree-2 vertices of the links (v1,w1), (v1,w2), (v2,w1),
// (v2,w2) in that order.
struct Lock {
    int u, x;    // locked endpoints
    int v1, v2;  // degree-3 neighbors of u
    int w1, w2;  // degree-3 neighbors of x
    std::array<int, 4> middles;

    std::vector<int> vertex_set() const;                 // sorted, size 10
    std::vector<std::pair<int, int>> edge_set() const;   // canonical, size 12

    bool operator==(const Lock&) const = default;
};

struct VertexClassification {
    std::vector<bool> weak;
    std::vector<SupportType> support;
    std::vector<bool> positive;
    std::vector<NegativeType> negative;
    std::vector<bool> locked;
    std::vector<Lock> locks;

    bool is_support(int v) const { return support[v] != SupportType::None; }
    bool is_negative(int v) const { return negative[v] != NegativeType::None; }
};

// Per-vertex taxonomy:
//  - weak: degree 3 and 1-linked to two vertices of degree <= 14 (two links
//    to the same far vertex through distinct middles count);
//  - support S1: degree 2 adjacent to a degree-2 vertex;
//    support S2: degree 2 adjacent to a degree-3 vertex whose two other
//    neighbors are one of degree 2 and one of degree <= 7 (in either
//    assignment); S1 wins when both apply;
//    support S3: weak and 1-linked to a weak vertex;
//  - positive: degree >= 4 with a support neighbor;
//  - negative N1/N2: exactly the S1/S2 supports; N3: degree-2 vertex whose
//    both neighbors are S3 supports (and that is not itself S1/S2);
//  - locked: endpoint of a lock.
VertexClassification classify_vertices(const Graph& g);

// The subgraph on the same vertex ids keeping exactly the edges incident to
// at least one support vertex.
Graph support_graph(const Graph& g, const VertexClassification& cls);

struct ComponentReport {
    std::vector<int> vertices;  // sorted; only vertices with an incident edge
    bool is_lock = false;
    bool is_cactus = false;
    // One entry per cycle block: the number of support vertices on it.
    std::vector<int> cycle_support_counts;
    int negative_count = 0;
    int positive_count = 0;
};

// Connected components of a support graph, each with lock/cactus recognition
// and its negative/positive counts. Reports are ordered by smallest vertex.
std::vector<ComponentReport> analyze_components(const Graph& h,
                                                const VertexClassification& cls);

}  // namespace sqc
