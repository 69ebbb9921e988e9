#include "sqcolor/density.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace sqc {

namespace {

// Dinic max-flow on arbitrary-precision integer capacities. Edges are stored
// in xor-pairs (forward at 2i, reverse at 2i+1).
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : head_(n) {}

    void add_edge(int from, int to, BigInt cap) {
        head_[from].push_back(static_cast<int>(caps_.size()));
        targets_.push_back(to);
        caps_.push_back(std::move(cap));
        head_[to].push_back(static_cast<int>(caps_.size()));
        targets_.push_back(from);
        caps_.push_back(0);
    }

    BigInt max_flow(int s, int t) {
        BigInt total = 0;
        while (bfs(s, t)) {
            std::vector<size_t> it(head_.size(), 0);
            while (true) {
                BigInt pushed = dfs(s, t, it, unbounded());
                if (pushed == 0) {
                    break;
                }
                total += pushed;
            }
        }
        return total;
    }

    // Vertices reachable from s in the residual graph of the last max_flow
    // run; with the sink unreachable this is the source side of a minimum cut.
    std::vector<bool> source_side(int s) const {
        std::vector<bool> seen(head_.size(), false);
        std::queue<int> queue;
        seen[s] = true;
        queue.push(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int e : head_[u]) {
                if (caps_[e] > 0 && !seen[targets_[e]]) {
                    seen[targets_[e]] = true;
                    queue.push(targets_[e]);
                }
            }
        }
        return seen;
    }

private:
    static BigInt unbounded() {
        static const BigInt big = BigInt(1) << 256;
        return big;
    }

    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::queue<int> queue;
        level_[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int e : head_[u]) {
                if (caps_[e] > 0 && level_[targets_[e]] == -1) {
                    level_[targets_[e]] = level_[u] + 1;
                    queue.push(targets_[e]);
                }
            }
        }
        return level_[t] != -1;
    }

    BigInt dfs(int u, int t, std::vector<size_t>& it, BigInt limit) {
        if (u == t) {
            return limit;
        }
        for (; it[u] < head_[u].size(); ++it[u]) {
            int e = head_[u][it[u]];
            int v = targets_[e];
            if (caps_[e] > 0 && level_[v] == level_[u] + 1) {
                BigInt pushed = dfs(v, t, it, std::min(limit, caps_[e]));
                if (pushed > 0) {
                    caps_[e] -= pushed;
                    caps_[e ^ 1] += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> head_;
    std::vector<int> targets_;
    std::vector<BigInt> caps_;
    std::vector<int> level_;
};

// Exact density of the induced subgraph on `verts`: e(S) / |S|.
Rational induced_density(const Graph& g, const std::vector<int>& verts) {
    std::vector<bool> in(g.n, false);
    for (int v : verts) {
        in[v] = true;
    }
    long long edges = 0;
    for (int v : verts) {
        for (int u : g.adj[v]) {
            if (in[u] && u > v) {
                ++edges;
            }
        }
    }
    return Rational(edges, static_cast<long long>(verts.size()));
}

// Goldberg's decision network for density guess rho = a/b: is there a
// nonempty S with e(S)/|S| > rho? Capacities are scaled by b to stay
// integral: s->v with m*b, v->t with m*b + 2a - deg(v)*b, both arc directions
// of each graph edge with b. The cut for side S has value
// n*m*b - 2*b*|S|*(density(S) - rho), so min cut < n*m*b iff such S exists,
// and the source side of a minimum cut is then a witness.
bool denser_than(const Graph& g, const Rational& rho, std::vector<int>& witness) {
    const int n = g.n;
    const BigInt m = g.edge_count();
    const BigInt a = rho.num();
    const BigInt b = rho.den();
    const int source = n;
    const int sink = n + 1;
    FlowNetwork net(n + 2);
    for (int v = 0; v < n; ++v) {
        net.add_edge(source, v, m * b);
        // Nonnegative: m >= deg(v) and rho >= 0 throughout the search.
        net.add_edge(v, sink, m * b + 2 * a - g.degree(v) * b);
    }
    for (auto [u, v] : g.edges()) {
        net.add_edge(u, v, b);
        net.add_edge(v, u, b);
    }
    BigInt flow = net.max_flow(source, sink);
    if (flow >= BigInt(n) * m * b) {
        return false;
    }
    auto side = net.source_side(source);
    witness.clear();
    for (int v = 0; v < n; ++v) {
        if (side[v]) {
            witness.push_back(v);
        }
    }
    return !witness.empty();
}

}  // namespace

Rational average_degree(const Graph& g) {
    if (g.n == 0) {
        throw BadInput("average degree of the empty graph");
    }
    return Rational(2 * g.edge_count(), g.n);
}

MadCertificate mad_exact(const Graph& g) {
    if (g.n == 0) {
        throw BadInput("mad of the empty graph");
    }
    if (g.edge_count() == 0) {
        std::vector<int> all(g.n);
        for (int v = 0; v < g.n; ++v) {
            all[v] = v;
        }
        return MadCertificate{Rational(0), all};
    }

    // Invariants: `low` is an achieved density (by `best`), every subgraph
    // density is <= `high`. Distinct achievable densities e/v, e'/v' with
    // v, v' <= n differ by at least 1/(n(n-1)), so once the interval is
    // narrower than that the achieved low is the maximum.
    std::vector<int> best;
    for (int v = 0; v < g.n; ++v) {
        best.push_back(v);
    }
    Rational low = induced_density(g, best);
    Rational high = Rational(g.edge_count()) + Rational(1);
    const Rational gap(1, static_cast<long long>(g.n) * std::max(g.n - 1, 1));

    while (high - low >= gap) {
        Rational mid = (low + high) / Rational(2);
        std::vector<int> witness;
        if (denser_than(g, mid, witness)) {
            best = witness;
            low = induced_density(g, best);
        } else {
            high = mid;
        }
    }
    std::sort(best.begin(), best.end());
    return MadCertificate{Rational(2) * low, best};
}

MadCertificate mad_bruteforce(const Graph& g) {
    if (g.n == 0) {
        throw BadInput("mad of the empty graph");
    }
    if (g.n > 28) {
        throw TooLarge("mad_bruteforce limited to n <= 28, got n = " + std::to_string(g.n));
    }
    std::vector<unsigned> nbr_mask(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        for (int u : g.adj[v]) {
            nbr_mask[v] |= 1u << u;
        }
    }
    // Gray-code walk over all subsets: each step toggles one vertex, so the
    // induced edge count updates with a single popcount.
    long long best_edges = 0;
    int best_size = 1;
    unsigned best_mask = 1;
    unsigned cur = 0;
    long long cur_edges = 0;
    const unsigned long long total = 1ull << g.n;
    for (unsigned long long i = 1; i < total; ++i) {
        const int v = std::countr_zero(i);
        const unsigned bit = 1u << v;
        if (cur & bit) {
            cur ^= bit;
            cur_edges -= std::popcount(nbr_mask[v] & cur);
        } else {
            cur_edges += std::popcount(nbr_mask[v] & cur);
            cur ^= bit;
        }
        const int size = std::popcount(cur);
        // Compare cur_edges/size against the best exactly; ties keep the
        // smallest subset mask so the witness stays the same as a plain
        // ascending-mask scan would produce.
        const long long lhs = cur_edges * best_size;
        const long long rhs = best_edges * size;
        if (lhs > rhs || (lhs == rhs && cur < best_mask)) {
            best_edges = cur_edges;
            best_size = size;
            best_mask = cur;
        }
    }
    MadCertificate cert;
    cert.value = Rational(2 * best_edges, best_size);
    for (int v = 0; v < g.n; ++v) {
        if (best_mask & (1u << v)) {
            cert.witness.push_back(v);
        }
    }
    return cert;
}

bool euler_check(const Graph& g) {
    Rational mad = mad_exact(g).value;
    auto gr = girth(g);
    if (!gr.has_value()) {
        return mad <= Rational(2);
    }
    return (mad - Rational(2)) * (Rational(*gr) - Rational(2)) < Rational(4);
}

}  // namespace sqc
