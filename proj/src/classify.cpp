#include "sqcolor/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sqc {

std::vector<int> Lock::vertex_set() const {
    std::vector<int> vs = {u, x, v1, v2, w1, w2,
                           middles[0], middles[1], middles[2], middles[3]};
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::vector<std::pair<int, int>> Lock::edge_set() const {
    auto mk = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    std::vector<std::pair<int, int>> es = {
        mk(u, v1),          mk(u, v2),
        mk(v1, middles[0]), mk(middles[0], w1),
        mk(v1, middles[1]), mk(middles[1], w2),
        mk(v2, middles[2]), mk(middles[2], w1),
        mk(v2, middles[3]), mk(middles[3], w2),
        mk(w1, x),          mk(w2, x),
    };
    std::sort(es.begin(), es.end());
    return es;
}

namespace {

bool other_neighbors_qualify(const Graph& g, int t, int excluded) {
    // t has degree 3; of its two neighbors besides `excluded`, one must have
    // degree 2 and the other degree at most 7, in either assignment.
    std::array<int, 2> others{};
    int count = 0;
    for (int p : g.adj[t]) {
        if (p != excluded) {
            others[count++] = p;
        }
    }
    int d0 = g.degree(others[0]);
    int d1 = g.degree(others[1]);
    return (d0 == 2 && d1 <= 7) || (d1 == 2 && d0 <= 7);
}

void detect_locks(const Graph& g, VertexClassification& cls) {
    std::set<std::array<int, 6>> seen;
    for (int u = 0; u < g.n; ++u) {
        std::vector<int> nbrs3;
        for (int v : g.adj[u]) {
            if (g.degree(v) == 3) {
                nbrs3.push_back(v);
            }
        }
        for (size_t i = 0; i < nbrs3.size(); ++i) {
            for (size_t j = i + 1; j < nbrs3.size(); ++j) {
                int v1 = nbrs3[i], v2 = nbrs3[j];
                // Far ends of 1-links from v1 and v2, middle lists per target.
                auto link_fars = [&](int v) {
                    std::map<int, std::vector<int>> fars;
                    for (const Link& l : one_links(g, v)) {
                        if (g.degree(l.y) == 3 && l.y != u && l.y != v1 && l.y != v2) {
                            fars[l.y].push_back(l.inner[0]);
                        }
                    }
                    return fars;
                };
                auto fars1 = link_fars(v1);
                auto fars2 = link_fars(v2);
                std::vector<int> shared;
                for (const auto& [y, mids] : fars1) {
                    if (fars2.count(y)) {
                        shared.push_back(y);
                    }
                }
                for (size_t a = 0; a < shared.size(); ++a) {
                    for (size_t b = a + 1; b < shared.size(); ++b) {
                        int w1 = shared[a], w2 = shared[b];
                        // Lex-least assignment of four distinct middles, one
                        // per (v, w) pair; candidates exclude the six named
                        // vertices (only u can collide: the rest have the
                        // wrong degree to be a link middle).
                        std::array<std::vector<int>, 4> sets = {
                            fars1[w1], fars1[w2], fars2[w1], fars2[w2]};
                        for (auto& s : sets) {
                            s.erase(std::remove(s.begin(), s.end(), u), s.end());
                        }
                        std::array<int, 4> mids{};
                        auto assign = [&](auto&& self, int pos) -> bool {
                            if (pos == 4) {
                                return true;
                            }
                            for (int m : sets[pos]) {
                                bool fresh = true;
                                for (int q = 0; q < pos; ++q) {
                                    if (mids[q] == m) {
                                        fresh = false;
                                        break;
                                    }
                                }
                                if (fresh) {
                                    mids[pos] = m;
                                    if (self(self, pos + 1)) {
                                        return true;
                                    }
                                }
                            }
                            return false;
                        };
                        if (!assign(assign, 0)) {
                            continue;
                        }
                        // Any common neighbor of w1, w2 outside the pattern
                        // completes a lock. Middles cannot collide with x:
                        // a middle touches exactly one of w1, w2.
                        for (int x : g.adj[w1]) {
                            if (!g.has_edge(w2, x) || x == u || x == v1 ||
                                x == v2 || x == w1 || x == w2) {
                                continue;
                            }
                            std::array<int, 6> key = {std::min(u, x), std::max(u, x),
                                                      0, 0, 0, 0};
                            if (u < x) {
                                key[2] = v1;
                                key[3] = v2;
                                key[4] = w1;
                                key[5] = w2;
                            } else {
                                key[2] = w1;
                                key[3] = w2;
                                key[4] = v1;
                                key[5] = v2;
                            }
                            if (!seen.insert(key).second) {
                                continue;
                            }
                            Lock lock;
                            lock.u = key[0];
                            lock.x = key[1];
                            lock.v1 = key[2];
                            lock.v2 = key[3];
                            lock.w1 = key[4];
                            lock.w2 = key[5];
                            if (u < x) {
                                lock.middles = mids;
                            } else {
                                // Reorient: middles follow (v1,w1), (v1,w2),
                                // (v2,w1), (v2,w2) of the canonical roles.
                                lock.middles = {mids[0], mids[2], mids[1], mids[3]};
                            }
                            cls.locks.push_back(lock);
                            cls.locked[lock.u] = true;
                            cls.locked[lock.x] = true;
                        }
                    }
                }
            }
        }
    }
    std::sort(cls.locks.begin(), cls.locks.end(), [](const Lock& a, const Lock& b) {
        return std::tie(a.u, a.x, a.v1, a.v2, a.w1, a.w2) <
               std::tie(b.u, b.x, b.v1, b.v2, b.w1, b.w2);
    });
}

}  // namespace

VertexClassification classify_vertices(const Graph& g) {
    VertexClassification cls;
    cls.weak.assign(g.n, false);
    cls.support.assign(g.n, SupportType::None);
    cls.positive.assign(g.n, false);
    cls.negative.assign(g.n, NegativeType::None);
    cls.locked.assign(g.n, false);

    // Weak: degree 3, with at least two 1-links to vertices of degree <= 14
    // (a far vertex reached through two distinct middles counts twice).
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 3) {
            continue;
        }
        int good_links = 0;
        for (const Link& l : one_links(g, v)) {
            if (g.degree(l.y) <= 14) {
                ++good_links;
            }
        }
        cls.weak[v] = good_links >= 2;
    }

    // Support types; S1 takes precedence over S2 (S3 needs degree 3, so it
    // cannot clash with either).
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) == 2) {
            bool s1 = false, s2 = false;
            for (int t : g.adj[v]) {
                if (g.degree(t) == 2) {
                    s1 = true;
                }
                if (g.degree(t) == 3 && other_neighbors_qualify(g, t, v)) {
                    s2 = true;
                }
            }
            if (s1) {
                cls.support[v] = SupportType::S1;
            } else if (s2) {
                cls.support[v] = SupportType::S2;
            }
        } else if (cls.weak[v]) {
            for (const Link& l : one_links(g, v)) {
                if (cls.weak[l.y]) {
                    cls.support[v] = SupportType::S3;
                    break;
                }
            }
        }
    }

    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) >= 4) {
            for (int t : g.adj[v]) {
                if (cls.is_support(t)) {
                    cls.positive[v] = true;
                    break;
                }
            }
        }
    }

    for (int v = 0; v < g.n; ++v) {
        if (cls.support[v] == SupportType::S1) {
            cls.negative[v] = NegativeType::N1;
        } else if (cls.support[v] == SupportType::S2) {
            cls.negative[v] = NegativeType::N2;
        } else if (g.degree(v) == 2 &&
                   cls.support[g.adj[v][0]] == SupportType::S3 &&
                   cls.support[g.adj[v][1]] == SupportType::S3) {
            cls.negative[v] = NegativeType::N3;
        }
    }

    detect_locks(g, cls);
    return cls;
}

Graph support_graph(const Graph& g, const VertexClassification& cls) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        if (cls.is_support(u) || cls.is_support(v)) {
            edges.emplace_back(u, v);
        }
    }
    return build_graph(g.n, edges);
}

std::vector<ComponentReport> analyze_components(const Graph& h,
                                                const VertexClassification& cls) {
    std::vector<int> comp_of(h.n, -1);
    std::vector<ComponentReport> reports;
    auto all_blocks = blocks(h);

    for (int root = 0; root < h.n; ++root) {
        if (comp_of[root] != -1 || h.degree(root) == 0) {
            continue;
        }
        int id = static_cast<int>(reports.size());
        ComponentReport r;
        std::vector<int> stack = {root};
        comp_of[root] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            r.vertices.push_back(v);
            if (cls.is_negative(v)) {
                ++r.negative_count;
            }
            if (cls.positive[v]) {
                ++r.positive_count;
            }
            for (int w : h.adj[v]) {
                if (comp_of[w] == -1) {
                    comp_of[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(r.vertices.begin(), r.vertices.end());
        r.is_cactus = true;
        reports.push_back(std::move(r));
    }

    // A cactus has only edge blocks and cycle blocks (a block on k >= 3
    // vertices is a cycle exactly when it has k edges).
    for (const auto& b : all_blocks) {
        ComponentReport& r = reports[comp_of[b.vertices[0]]];
        if (b.vertices.size() >= 3) {
            if (b.edges.size() == b.vertices.size()) {
                int supports = 0;
                for (int v : b.vertices) {
                    if (cls.is_support(v)) {
                        ++supports;
                    }
                }
                r.cycle_support_counts.push_back(supports);
            } else {
                r.is_cactus = false;
            }
        }
    }

    // Lock recognition: the component must be exactly a detected lock's ten
    // vertices with its twelve edges and nothing else.
    for (auto& r : reports) {
        for (const Lock& lock : cls.locks) {
            if (lock.vertex_set() != r.vertices) {
                continue;
            }
            std::vector<std::pair<int, int>> comp_edges;
            for (int v : r.vertices) {
                for (int w : h.adj[v]) {
                    if (v < w) {
                        comp_edges.emplace_back(v, w);
                    }
                }
            }
            std::sort(comp_edges.begin(), comp_edges.end());
            if (comp_edges == lock.edge_set()) {
                r.is_lock = true;
                break;
            }
        }
    }

    return reports;
}

}  // namespace sqc
