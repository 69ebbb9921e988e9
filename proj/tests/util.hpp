#pragma once

#include <random>
#include <utility>
#include <vector>

#include "sqcolor/graph.hpp"

namespace sqc::testing {

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return build_graph(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return build_graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return build_graph(n, edges);
}

// Hub 0 with `leaves` pendant neighbors.
inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) {
        edges.emplace_back(0, i);
    }
    return build_graph(leaves + 1, edges);
}

inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);       // outer cycle
        edges.emplace_back(i, i + 5);             // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return build_graph(10, edges);
}

// Erdos-Renyi G(n, p) with a caller-owned generator, so each test pins its
// own seed.
inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return build_graph(n, edges);
}

// Uniformly random tree on n vertices (random attachment).
inline Graph random_tree(std::mt19937& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return build_graph(n, edges);
}

}  // namespace sqc::testing

#include "sqcolor/density.hpp"

namespace sqc::testing {

// Random tree plus as many extra random edges as keep the maximum average
// degree below 3 and the maximum degree at most 17.
inline Graph sparse_random_graph(std::mt19937& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    Graph g = build_graph(n, edges);
    if (n < 3) return g;
    std::uniform_int_distribution<int> pick(0, n - 1);
    int attempts = n / 2 + 2;
    for (int t = 0; t < attempts; ++t) {
        int u = pick(rng), v = pick(rng);
        if (u == v || g.has_edge(u, v)) continue;
        if (g.degree(u) >= 17 || g.degree(v) >= 17) continue;
        auto candidate = edges;
        candidate.emplace_back(u, v);
        Graph h = build_graph(n, candidate);
        if (mad_exact(h).value < Rational(3)) {
            edges = std::move(candidate);
            g = std::move(h);
        }
    }
    return g;
}

}  // namespace sqc::testing
