#include "sqcolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace sqc {

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

long long Graph::edge_count() const {
    long long total = 0;
    for (const auto& nbrs : adj) {
        total += static_cast<long long>(nbrs.size());
    }
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < n; ++u) {
        for (int v : adj[u]) {
            if (u < v) {
                result.emplace_back(u, v);
            }
        }
    }
    return result;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) {
        throw BadInput("negative vertex count");
    }
    Graph g;
    g.n = n;
    g.adj.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw VertexOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                   ") outside [0, " + std::to_string(n) + ")");
        }
        if (u == v) {
            throw LoopEdge("self-loop at vertex " + std::to_string(u));
        }
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.n, -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.n) {
            throw VertexOutOfRange("induced_subgraph vertex " + std::to_string(v));
        }
        if (index[v] != -1) {
            throw BadInput("duplicate vertex " + std::to_string(v) +
                           " in induced_subgraph");
        }
        index[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < vertices.size(); ++i) {
        for (int u : g.adj[vertices[i]]) {
            if (index[u] != -1 && vertices[i] < u) {
                edges.emplace_back(static_cast<int>(i), index[u]);
            }
        }
    }
    return build_graph(static_cast<int>(vertices.size()), edges);
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.n; ++v) {
        best = std::max(best, g.degree(v));
    }
    return best;
}

Graph square(const Graph& g) {
    Graph sq;
    sq.n = g.n;
    sq.adj.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        sq.adj[v] = dist2_closed_neighborhood(g, v);
    }
    return sq;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; any edge joining two visited vertices closes a
    // walk of length dist[u] + dist[v] + 1 that contains a cycle no longer
    // than itself, and the exact girth is attained when the BFS root lies on
    // a shortest cycle.
    int best = -1;
    std::vector<int> dist(g.n);
    std::vector<int> parent(g.n);
    for (int root = 0; root < g.n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> queue;
        dist[root] = 0;
        queue.push(root);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : g.adj[u]) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push(v);
                } else if (v != parent[u] && u < v) {
                    int cycle = dist[u] + dist[v] + 1;
                    if (best == -1 || cycle < best) {
                        best = cycle;
                    }
                }
            }
        }
    }
    if (best == -1) {
        return std::nullopt;
    }
    return best;
}

std::vector<int> dist2_closed_neighborhood(const Graph& g, int v) {
    std::vector<int> result;
    for (int u : g.adj[v]) {
        result.push_back(u);
        for (int w : g.adj[u]) {
            if (w != v) {
                result.push_back(w);
            }
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<Link> one_links(const Graph& g, int x) {
    std::vector<Link> links;
    for (int a : g.adj[x]) {
        if (g.degree(a) != 2) {
            continue;
        }
        int y = g.adj[a][0] == x ? g.adj[a][1] : g.adj[a][0];
        links.push_back(Link{x, {a}, y});
    }
    return links;  // adj[x] is sorted, so links are sorted by middle already
}

namespace {

// Iterative Tarjan biconnected components: a stack of edges, popped when an
// articulation condition closes a block.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent_edge_to;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<Block> out;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), disc(graph.n, -1), low(graph.n, 0), parent_edge_to(graph.n, -1) {}

    void pop_block(const std::pair<int, int>& until) {
        Block b;
        std::vector<int> verts;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            b.edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) {
                break;
            }
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        b.vertices = std::move(verts);
        std::sort(b.edges.begin(), b.edges.end());
        out.push_back(std::move(b));
    }

    void run(int root) {
        // Explicit DFS stack: (vertex, index into adjacency).
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            if (idx < g.adj[u].size()) {
                int v = g.adj[u][idx++];
                if (disc[v] == -1) {
                    edge_stack.emplace_back(u, v);
                    parent_edge_to[v] = u;
                    disc[v] = low[v] = timer++;
                    stack.emplace_back(v, 0);
                } else if (v != parent_edge_to[u] && disc[v] < disc[u]) {
                    edge_stack.emplace_back(u, v);
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p]) {
                        pop_block({p, u});
                    }
                }
            }
        }
    }
};

}  // namespace

std::vector<Block> blocks(const Graph& g) {
    BlockFinder finder(g);
    for (int v = 0; v < g.n; ++v) {
        if (finder.disc[v] == -1 && g.degree(v) > 0) {
            finder.run(v);
        }
    }
    return finder.out;
}

}  // namespace sqc
