#include "sqcolor/colorer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "sqcolor/errors.hpp"

namespace sqc {

namespace {

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// The graph at one step of the recursion, on the original vertex set: dead
// vertices are simply isolated.
Graph masked_graph(const Graph& g, const std::vector<char>& alive,
                   const std::set<std::pair<int, int>>& removed_edges) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u) {
        if (!alive[u]) continue;
        for (int v : g.adj[u]) {
            if (u < v && alive[v] && !removed_edges.count({u, v})) edges.emplace_back(u, v);
        }
    }
    return build_graph(g.n, edges);
}

// Compacted live subgraph plus the original id of each compact vertex.
std::pair<Graph, std::vector<int>> compact_graph(const Graph& g, const std::vector<char>& alive,
                                                 const std::set<std::pair<int, int>>& removed_edges) {
    std::vector<int> ids;
    std::vector<int> index(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (alive[v]) {
            index[v] = static_cast<int>(ids.size());
            ids.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u) {
        if (!alive[u]) continue;
        for (int v : g.adj[u]) {
            if (u < v && alive[v] && !removed_edges.count({u, v}))
                edges.emplace_back(index[u], index[v]);
        }
    }
    return {build_graph(static_cast<int>(ids.size()), edges), ids};
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Colors of the vertex's list that are not forbidden, ascending.
std::vector<int> available_colors(const ListAssignment& la, const std::set<int>& forbidden,
                                  int v) {
    std::vector<int> av;
    for (int c : sorted_unique(la.lists[v]))
        if (!forbidden.count(c)) av.push_back(c);
    return av;
}

struct Extender {
    const Graph& level;
    const ListAssignment& la;
    Mode mode;
    PartialColoring& pc;
    TraceStep& step;

    void record(int v, int c, int constraint_count) {
        bool hcn = false;
        for (int u : level.adj[v])
            if (pc[u]) hcn = true;
        pc[v] = c;
        step.extensions.push_back({v, c, constraint_count, hcn, level.degree(v)});
    }

    std::vector<int> avail(int v) const {
        return available_colors(la, constraints(level, pc, v, mode), v);
    }

    // Smallest available color, preferring one outside `avoid` when possible.
    bool greedy(int v, const std::vector<int>* avoid = nullptr) {
        if (pc[v]) return true;
        auto cons = constraints(level, pc, v, mode);
        auto av = available_colors(la, cons, v);
        if (av.empty()) return false;
        int chosen = av.front();
        if (avoid) {
            for (int c : av) {
                if (!std::binary_search(avoid->begin(), avoid->end(), c)) {
                    chosen = c;
                    break;
                }
            }
        }
        record(v, chosen, static_cast<int>(cons.size()));
        return true;
    }

    bool greedy_all(const std::vector<int>& order) {
        for (int v : order)
            if (!greedy(v)) return false;
        return true;
    }

    // Exhaustive safety net over the still-uncolored vertices of the step.
    bool backtrack(const std::vector<int>& vertices) {
        std::vector<int> vs;
        for (int v : vertices)
            if (!pc[v]) vs.push_back(v);
        vs = sorted_unique(vs);
        if (vs.size() > 24) return false;
        std::function<bool(size_t)> go = [&](size_t i) -> bool {
            if (i == vs.size()) return true;
            int v = vs[i];
            for (int c : avail(v)) {
                pc[v] = c;
                bool dead = false;
                for (size_t j = i + 1; j < vs.size() && !dead; ++j)
                    if (avail(vs[j]).empty()) dead = true;
                if (!dead && go(i + 1)) return true;
                pc[v] = std::nullopt;
            }
            return false;
        };
        if (!go(0)) return false;
        // Re-derive the assignments one by one so the recorded constraint
        // counts match a sequential replay.
        std::vector<int> chosen(vs.size());
        for (size_t i = 0; i < vs.size(); ++i) {
            chosen[i] = *pc[vs[i]];
            pc[vs[i]] = std::nullopt;
        }
        for (size_t i = 0; i < vs.size(); ++i) {
            auto cons = constraints(level, pc, vs[i], mode);
            record(vs[i], chosen[i], static_cast<int>(cons.size()));
        }
        step.used_fallback = true;
        return true;
    }
};

bool connected_excluding(const Graph& g, const std::vector<int>& skip) {
    std::vector<char> allowed(g.n, 1);
    for (int v : skip) allowed[v] = 0;
    int start = -1, count = 0;
    for (int v = 0; v < g.n; ++v)
        if (allowed[v]) {
            if (start < 0) start = v;
            count++;
        }
    if (count <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u])
            if (allowed[v] && !seen[v]) {
                seen[v] = 1;
                reached++;
                q.push(v);
            }
    }
    return reached == count;
}

std::vector<int> bfs_order_from(const Graph& g, int root, const std::vector<char>& allowed) {
    std::vector<int> order;
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (int v : g.adj[u])
            if (allowed[v] && !seen[v]) {
                seen[v] = 1;
                q.push(v);
            }
    }
    return order;
}

}  // namespace

ListAssignment uniform_lists(int n, int size) {
    ListAssignment la;
    la.lists.assign(n, {});
    for (int v = 0; v < n; ++v) {
        la.lists[v].resize(size);
        std::iota(la.lists[v].begin(), la.lists[v].end(), 0);
    }
    return la;
}

std::set<int> constraints(const Graph& g, const PartialColoring& pc, int v, Mode mode) {
    std::set<int> out;
    if (mode == Mode::TwoDistance) {
        for (int u : g.adj[v])
            if (pc[u]) out.insert(*pc[u]);
    }
    for (int u : g.adj[v])
        for (int w : g.adj[u])
            if (w != v && pc[w]) out.insert(*pc[w]);
    return out;
}

bool color_conflicting(const Graph& g, int u, int v, Mode mode) {
    if (u == v) return true;
    if (mode == Mode::TwoDistance && g.has_edge(u, v)) return true;
    for (int w : g.adj[u])
        if (w != v && g.has_edge(w, v)) return true;
    return false;
}

namespace {

// ---------------------------------------------------------------------------
// Reduction bookkeeping

struct Reduction {
    std::vector<int> deleted_vertices;
    std::vector<std::pair<int, int>> deleted_edges;
    std::vector<int> discolored;
};

Reduction reduction_for(const ConfigurationMatch& m, const Graph& level) {
    Reduction r;
    auto add = [&](std::initializer_list<const char*> names) {
        for (const char* name : names) r.deleted_vertices.push_back(m.role(name));
    };
    switch (m.kind) {
        case ConfigKind::C1: add({"u"}); break;
        case ConfigKind::C2: add({"u", "v"}); break;
        case ConfigKind::C3:
            add({"v"});
            r.discolored = {m.role("u")};
            break;
        case ConfigKind::C4:
            r.deleted_edges = {norm_edge(m.role("u"), m.role("v"))};
            r.discolored = {m.role("u"), m.role("v")};
            break;
        case ConfigKind::C5: add({"u", "v", "w"}); break;
        case ConfigKind::C6:
            add({"v"});
            r.discolored = {m.role("u")};
            break;
        case ConfigKind::C7:
            add({"v", "w"});
            r.discolored = {m.role("u")};
            break;
        case ConfigKind::C8:
        case ConfigKind::C9:
            add({"v"});
            r.discolored = {m.role("u")};
            break;
        case ConfigKind::C10:
            add({"u", "w1", "w2", "w3", "w4", "w5", "w6"});
            break;
        case ConfigKind::C11: {
            add({"v", "w", "x", "y", "z1", "z2", "z3", "z4"});
            if (m.has_role("a")) r.deleted_vertices.push_back(m.role("a"));
            if (m.has_role("c")) r.deleted_vertices.push_back(m.role("c"));
            break;
        }
        case ConfigKind::Structural: {
            std::vector<char> in_s(level.n, 0);
            for (int s : m.support_set) in_s[s] = 1;
            r.deleted_vertices = m.support_set;
            for (int s : m.support_set)
                for (int v : level.adj[s])
                    if (!in_s[v] && level.degree(v) <= 3) r.deleted_vertices.push_back(v);
            break;
        }
    }
    r.deleted_vertices = sorted_unique(r.deleted_vertices);
    r.discolored = sorted_unique(r.discolored);
    return r;
}

ConfigurationMatch remap_match(const ConfigurationMatch& m, const std::vector<int>& ids) {
    ConfigurationMatch out = m;
    for (auto& [name, v] : out.roles) v = ids[v];
    for (int& v : out.block_vertices) v = ids[v];
    for (int& v : out.support_set) v = ids[v];
    return out;
}

// ---------------------------------------------------------------------------
// Per-claim extension orders

bool extend_simple(Extender& ex) {
    const ConfigurationMatch& m = ex.step.match;
    std::vector<int> order;
    auto roles = [&](std::initializer_list<const char*> names) {
        for (const char* name : names) order.push_back(m.role(name));
    };
    switch (m.kind) {
        case ConfigKind::C1: roles({"u"}); break;
        case ConfigKind::C2: roles({"u", "v"}); break;
        case ConfigKind::C3: roles({"v", "u"}); break;
        case ConfigKind::C4: roles({"u", "v"}); break;
        case ConfigKind::C5: roles({"u", "v", "w"}); break;
        case ConfigKind::C6: roles({"v", "u"}); break;
        case ConfigKind::C7: roles({"u", "v", "w"}); break;
        case ConfigKind::C8:
        case ConfigKind::C9: roles({"u", "v"}); break;
        case ConfigKind::C10: roles({"u", "w1", "w2", "w3", "w4", "w5", "w6"}); break;
        default: return false;
    }
    return ex.greedy_all(order);
}

bool extend_c11(Extender& ex) {
    const ConfigurationMatch& m = ex.step.match;
    int v = m.role("v"), w = m.role("w"), x = m.role("x"), y = m.role("y");

    // The first colored vertex depends on the support shape of x.
    if (m.x_type == SupportType::S1) {
        if (!ex.greedy(m.role("a"))) return false;
    } else if (m.x_type == SupportType::S2) {
        if (!ex.greedy(m.role("c"))) return false;
    }

    if (!ex.pc[x] || !ex.pc[y]) {
        std::vector<int> ax = ex.avail(x), ay = ex.avail(y);
        std::vector<int> common;
        std::set_intersection(ax.begin(), ax.end(), ay.begin(), ay.end(),
                              std::back_inserter(common));
        if (!common.empty() && !color_conflicting(ex.level, x, y, ex.mode)) {
            // x and y take the same color; v and w then have spare colors.
            int c = common.front();
            ex.record(x, c, static_cast<int>(constraints(ex.level, ex.pc, x, ex.mode).size()));
            ex.record(y, c, static_cast<int>(constraints(ex.level, ex.pc, y, ex.mode).size()));
            if (!ex.greedy(v) || !ex.greedy(w)) return false;
        } else if (common.empty()) {
            // Disjoint lists: burn a color on v that x cannot see, then y,
            // then w, and x last with its protected colors.
            if (!ex.greedy(v, &ax)) return false;
            if (!ex.greedy(y) || !ex.greedy(w) || !ex.greedy(x)) return false;
        } else {
            // Lists meet but the two vertices are within range of each
            // other: some outer vertices coincide and y is nearly free.
            if (!ex.greedy(x) || !ex.greedy(v) || !ex.greedy(w) || !ex.greedy(y)) return false;
        }
    }

    if (m.x_type == SupportType::S2) {
        if (!ex.greedy(m.role("a"))) return false;
    } else if (m.x_type == SupportType::S3) {
        if (!ex.greedy(m.role("a")) || !ex.greedy(m.role("c"))) return false;
    }
    return ex.greedy_all({m.role("z1"), m.role("z2"), m.role("z3"), m.role("z4")});
}

bool extend_structural(Extender& ex) {
    const ConfigurationMatch& m = ex.step.match;
    const std::vector<int>& supports = m.support_set;
    std::vector<int> low;
    for (int v : ex.step.deleted_vertices)
        if (!std::binary_search(supports.begin(), supports.end(), v)) low.push_back(v);

    if (supports.size() <= 2) {
        if (!ex.greedy_all(supports)) return false;
    } else {
        // Conflict graph between the supports; its proper list coloring is
        // exactly what the mode demands of them.
        int p = static_cast<int>(supports.size());
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (color_conflicting(ex.level, supports[i], supports[j], ex.mode))
                    edges.emplace_back(i, j);
        Graph aux = build_graph(p, edges);
        std::vector<std::vector<int>> lists(p);
        for (int i = 0; i < p; ++i) lists[i] = ex.avail(supports[i]);
        try {
            Coloring br = brooks_list_color(aux, lists);
            for (int i = 0; i < p; ++i) {
                auto cons = constraints(ex.level, ex.pc, supports[i], ex.mode);
                ex.record(supports[i], br.color[i], static_cast<int>(cons.size()));
            }
        } catch (const PreconditionViolated&) {
            return false;
        }
    }
    return ex.greedy_all(low);
}

void extend_step(const Graph& level, const ListAssignment& la, Mode mode,
                 PartialColoring& pc, TraceStep& step) {
    Extender ex{level, la, mode, pc, step};
    bool done = false;
    switch (step.match.kind) {
        case ConfigKind::C11: done = extend_c11(ex); break;
        case ConfigKind::Structural: done = extend_structural(ex); break;
        default: done = extend_simple(ex); break;
    }
    if (!done) {
        // Roll back partial scripted work, then run the exhaustive net over
        // everything this step still owes a color.
        for (const ExtensionEntry& e : step.extensions) pc[e.vertex] = std::nullopt;
        step.extensions.clear();
        std::vector<int> owed = step.deleted_vertices;
        owed.insert(owed.end(), step.discolored.begin(), step.discolored.end());
        if (!ex.backtrack(owed))
            throw ExtensionFailure("no extension for " +
                                   std::string(config_kind_name(step.match.kind)) + " step");
    }
}

}  // namespace

ColorResult color(const Graph& g, const ListAssignment& la, KParameter k, Mode mode) {
    validate_k(g, k);
    if (static_cast<int>(la.lists.size()) != g.n)
        throw BadInput("list assignment covers " + std::to_string(la.lists.size()) +
                       " vertices, graph has " + std::to_string(g.n));
    int need = (mode == Mode::TwoDistance) ? k.k + 2 : k.k + 1;
    for (int v = 0; v < g.n; ++v) {
        if (static_cast<int>(sorted_unique(la.lists[v]).size()) < need)
            throw BadInput("list of vertex " + std::to_string(v) + " has fewer than " +
                           std::to_string(need) + " distinct colors");
    }

    std::vector<char> alive(g.n, 1);
    std::set<std::pair<int, int>> removed_edges;
    std::vector<TraceStep> steps;

    // Phase 1: peel patterns until nothing is left.
    while (true) {
        auto [sub, ids] = compact_graph(g, alive, removed_edges);
        if (sub.n == 0) break;
        std::optional<ConfigurationMatch> m = detect_any(sub, k);
        if (!m) throw NoReducibleConfiguration(ids);

        TraceStep step;
        step.match = remap_match(*m, ids);
        Graph level = masked_graph(g, alive, removed_edges);
        Reduction red = reduction_for(step.match, level);
        step.deleted_vertices = red.deleted_vertices;
        step.deleted_edges = red.deleted_edges;
        step.discolored = red.discolored;
        for (int v : red.deleted_vertices) alive[v] = 0;
        for (auto& e : red.deleted_edges) removed_edges.insert(e);
        steps.push_back(std::move(step));
    }

    // Phase 2: restore in reverse, extending the coloring at each step.
    PartialColoring pc(g.n);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        TraceStep& step = *it;
        for (int v : step.deleted_vertices) alive[v] = 1;
        for (auto& e : step.deleted_edges) removed_edges.erase(e);
        Graph level = masked_graph(g, alive, removed_edges);
        for (int v : step.discolored) pc[v] = std::nullopt;
        extend_step(level, la, mode, pc, step);
    }

    Coloring out;
    out.color.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (!pc[v]) throw ExtensionFailure("vertex " + std::to_string(v) + " left uncolored");
        out.color[v] = *pc[v];
    }
    CheckResult chk = check_coloring(g, out, &la, mode);
    if (!chk.ok) throw ExtensionFailure("final coloring failed validation");

    ReductionTrace trace;
    trace.steps = std::move(steps);
    return {std::move(out), std::move(trace)};
}

ColorResult color(const Graph& g, const ListAssignment& la, Mode mode) {
    return color(g, la, default_k(g), mode);
}

TraceStep apply_extension(const Graph& level, const ListAssignment& la, Mode mode,
                          const ConfigurationMatch& m, PartialColoring& pc) {
    if (static_cast<int>(la.lists.size()) != level.n || static_cast<int>(pc.size()) != level.n)
        throw BadInput("lists and partial coloring must cover the graph");
    TraceStep step;
    step.match = m;
    Reduction red = reduction_for(m, level);
    step.deleted_vertices = red.deleted_vertices;
    step.deleted_edges = red.deleted_edges;
    step.discolored = red.discolored;
    for (int v : step.deleted_vertices) pc[v] = std::nullopt;
    for (int v : step.discolored) pc[v] = std::nullopt;
    extend_step(level, la, mode, pc, step);
    return step;
}

Coloring brooks_list_color(const Graph& s, const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) != s.n)
        throw BadInput("list count does not match vertex count");
    if (s.n < 3) throw PreconditionViolated("fewer than three vertices");
    std::vector<std::vector<int>> ls(s.n);
    for (int v = 0; v < s.n; ++v) {
        ls[v] = sorted_unique(lists[v]);
        if (static_cast<int>(ls[v].size()) < s.degree(v))
            throw PreconditionViolated("list of vertex " + std::to_string(v) +
                                       " shorter than its degree");
    }
    if (!connected_excluding(s, {})) throw PreconditionViolated("not 2-connected");
    if (blocks(s).size() != 1) throw PreconditionViolated("not 2-connected");
    if (2 * s.edge_count() == static_cast<long long>(s.n) * (s.n - 1))
        throw PreconditionViolated("clique");
    bool all_two = true;
    for (int v = 0; v < s.n; ++v)
        if (s.degree(v) != 2) all_two = false;
    if (all_two && s.n % 2 == 1) throw PreconditionViolated("odd cycle");

    std::vector<int> result(s.n, -1);
    auto greedy_reverse = [&](const std::vector<int>& order) -> bool {
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int v = *it;
            if (result[v] != -1) continue;
            std::set<int> used;
            for (int u : s.adj[v])
                if (result[u] != -1) used.insert(result[u]);
            int chosen = -1;
            for (int c : ls[v])
                if (!used.count(c)) {
                    chosen = c;
                    break;
                }
            if (chosen == -1) return false;
            result[v] = chosen;
        }
        return true;
    };

    std::vector<char> all(s.n, 1);
    // A vertex with spare colors lets a reverse search from it finish greedily.
    for (int v = 0; v < s.n; ++v) {
        if (static_cast<int>(ls[v].size()) > s.degree(v)) {
            if (greedy_reverse(bfs_order_from(s, v, all))) return {result};
            std::fill(result.begin(), result.end(), -1);
            break;
        }
    }
    // Tight lists everywhere: give some vertex two same-colored non-adjacent
    // neighbors whose removal keeps the rest connected.
    for (int v = 0; v < s.n && result[0] == -1; ++v) {
        const auto& nb = s.adj[v];
        for (size_t i = 0; i < nb.size(); ++i) {
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int a = nb[i], b = nb[j];
                if (s.has_edge(a, b)) continue;
                std::vector<int> shared;
                std::set_intersection(ls[a].begin(), ls[a].end(), ls[b].begin(), ls[b].end(),
                                      std::back_inserter(shared));
                if (shared.empty()) continue;
                if (!connected_excluding(s, {a, b})) continue;
                std::fill(result.begin(), result.end(), -1);
                result[a] = result[b] = shared.front();
                std::vector<char> allowed(s.n, 1);
                allowed[a] = allowed[b] = 0;
                std::vector<int> order = bfs_order_from(s, v, allowed);
                if (static_cast<int>(order.size()) == s.n - 2 && greedy_reverse(order))
                    return {result};
                std::fill(result.begin(), result.end(), -1);
            }
        }
    }
    // Small-instance fallback: exhaustive search (instances here are tiny).
    std::fill(result.begin(), result.end(), -1);
    std::vector<int> order = bfs_order_from(s, 0, all);
    std::function<bool(size_t)> go = [&](size_t i) -> bool {
        if (i == order.size()) return true;
        int v = order[i];
        for (int c : ls[v]) {
            bool ok = true;
            for (int u : s.adj[v])
                if (result[u] == c) ok = false;
            if (!ok) continue;
            result[v] = c;
            if (go(i + 1)) return true;
            result[v] = -1;
        }
        return false;
    };
    if (!go(0)) throw ExtensionFailure("no proper list coloring found despite guarantees");
    return {result};
}

CheckResult check_coloring(const Graph& g, const Coloring& c, const ListAssignment* la,
                           Mode mode) {
    CheckResult res;
    res.ok = true;
    auto flag = [&](const std::string& kind, int u, int v) {
        res.ok = false;
        res.violations.push_back({kind, u, v});
    };
    if (static_cast<int>(c.color.size()) != g.n) {
        flag("uncolored", static_cast<int>(c.color.size()), -1);
        return res;
    }
    for (int v = 0; v < g.n; ++v) {
        if (c.color[v] < 0) {
            flag("uncolored", v, -1);
            continue;
        }
        if (la) {
            const auto& l = la->lists[v];
            if (std::find(l.begin(), l.end(), c.color[v]) == l.end()) flag("off-list", v, -1);
        }
    }
    std::set<std::pair<int, int>> reported;
    auto conflict = [&](int u, int v) {
        if (c.color[u] < 0 || c.color[v] < 0) return;
        auto key = norm_edge(u, v);
        if (c.color[u] == c.color[v] && !reported.count(key)) {
            reported.insert(key);
            flag("conflict", key.first, key.second);
        }
    };
    if (mode == Mode::TwoDistance) {
        for (int u = 0; u < g.n; ++u)
            for (int v : g.adj[u])
                if (u < v) conflict(u, v);
    }
    for (int mid = 0; mid < g.n; ++mid) {
        const auto& nb = g.adj[mid];
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) conflict(nb[i], nb[j]);
    }
    return res;
}

}  // namespace sqc
