#include "sqcolor/oracle.hpp"

#include <algorithm>
#include <string>

namespace sqc {

Graph conflict_graph(const Graph& g, Mode mode) {
    if (mode == Mode::TwoDistance) {
        return square(g);
    }
    Graph cg;
    cg.n = g.n;
    cg.adj.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        for (int mid : g.adj[v]) {
            for (int u : g.adj[mid]) {
                if (u != v) {
                    cg.adj[v].push_back(u);
                }
            }
        }
        auto& nbrs = cg.adj[v];
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return cg;
}

namespace {

// Branch and bound for the chromatic number of `cg`: vertices are colored in
// DSATUR order (most distinctly-colored neighbors first, degree as
// tie-break), trying colors up to one past the current palette size.
struct ChromaticSolver {
    const Graph& cg;
    std::vector<int> color;
    int best;

    explicit ChromaticSolver(const Graph& graph)
        : cg(graph), color(graph.n, -1), best(graph.n) {}

    int saturation(int v) const {
        std::vector<bool> seen(best + 1, false);
        int count = 0;
        for (int u : cg.adj[v]) {
            if (color[u] != -1 && !seen[color[u]]) {
                seen[color[u]] = true;
                ++count;
            }
        }
        return count;
    }

    void solve(int colored, int used) {
        if (used >= best) {
            return;
        }
        if (colored == cg.n) {
            best = used;
            return;
        }
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < cg.n; ++v) {
            if (color[v] != -1) {
                continue;
            }
            int sat = saturation(v);
            if (sat > pick_sat ||
                (sat == pick_sat && cg.degree(v) > cg.degree(pick))) {
                pick = v;
                pick_sat = sat;
            }
        }
        std::vector<bool> banned(used + 2, false);
        for (int u : cg.adj[pick]) {
            if (color[u] != -1) {
                banned[color[u]] = true;
            }
        }
        int limit = std::min(used + 1, best - 1);
        for (int c = 0; c < limit; ++c) {
            if (banned[c]) {
                continue;
            }
            color[pick] = c;
            solve(colored + 1, std::max(used, c + 1));
            color[pick] = -1;
        }
    }
};

}  // namespace

int chi2_exact(const Graph& g) {
    if (g.n > 14) {
        throw TooLarge("chi2_exact limited to n <= 14, got n = " + std::to_string(g.n));
    }
    if (g.n == 0) {
        return 0;
    }
    Graph sq = square(g);
    ChromaticSolver solver(sq);
    solver.solve(0, 0);
    return solver.best;
}

namespace {

bool extend_lists(const Graph& cg, const std::vector<std::vector<int>>& lists,
                  std::vector<int>& color, std::vector<bool>& done) {
    // Most-constrained vertex first: fewest currently-available colors.
    int pick = -1;
    size_t pick_avail = 0;
    std::vector<int> avail_pick;
    for (int v = 0; v < cg.n; ++v) {
        if (done[v]) {
            continue;
        }
        std::vector<int> avail;
        for (int c : lists[v]) {
            bool ok = true;
            for (int u : cg.adj[v]) {
                if (done[u] && color[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                avail.push_back(c);
            }
        }
        if (pick == -1 || avail.size() < pick_avail) {
            pick = v;
            pick_avail = avail.size();
            avail_pick = std::move(avail);
        }
    }
    if (pick == -1) {
        return true;
    }
    for (int c : avail_pick) {
        color[pick] = c;
        done[pick] = true;
        if (extend_lists(cg, lists, color, done)) {
            return true;
        }
        done[pick] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> list_color_exact(const Graph& g,
                                                 const std::vector<std::vector<int>>& lists,
                                                 Mode mode) {
    if (g.n > 14) {
        throw TooLarge("list_color_exact limited to n <= 14, got n = " +
                       std::to_string(g.n));
    }
    if (static_cast<int>(lists.size()) != g.n) {
        throw BadInput("lists.size() != n");
    }
    Graph cg = conflict_graph(g, mode);
    std::vector<int> color(g.n, -1);
    std::vector<bool> done(g.n, false);
    if (extend_lists(cg, lists, color, done)) {
        return color;
    }
    return std::nullopt;
}

}  // namespace sqc
