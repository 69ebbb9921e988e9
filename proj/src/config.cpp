#include "sqcolor/config.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "sqcolor/errors.hpp"

namespace sqc {

namespace {

// The far end of the 2-path src - middle - far; middle must have degree 2.
int other_end(const Graph& g, int middle, int from) {
    const auto& nb = g.adj[middle];
    return nb[0] == from ? nb[1] : nb[0];
}

// Neighbors of u with the listed vertices removed; stays sorted.
std::vector<int> neighbors_except(const Graph& g, int u, std::initializer_list<int> excl) {
    std::vector<int> r;
    for (int t : g.adj[u]) {
        bool skip = false;
        for (int e : excl)
            if (t == e) skip = true;
        if (!skip) r.push_back(t);
    }
    return r;
}

// (middle, far) for every 1-link out of src, ordered by middle.
std::vector<std::pair<int, int>> links_of(const Graph& g, int src) {
    std::vector<std::pair<int, int>> out;
    for (int m : g.adj[src])
        if (g.degree(m) == 2) out.emplace_back(m, other_end(g, m, src));
    return out;
}

ConfigurationMatch make(ConfigKind kind, std::vector<std::pair<std::string, int>> roles) {
    ConfigurationMatch m;
    m.kind = kind;
    m.roles = std::move(roles);
    return m;
}

bool all_distinct(std::initializer_list<int> vs) {
    std::set<int> s(vs);
    return s.size() == vs.size();
}

void detect_c1(const Graph& g, int /*k*/, std::vector<ConfigurationMatch>& out) {
    for (int u = 0; u < g.n; ++u)
        if (g.degree(u) <= 1) out.push_back(make(ConfigKind::C1, {{"u", u}}));
}

void detect_c2(const Graph& g, int k, std::vector<ConfigurationMatch>& out) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 2) continue;
        for (int i = 0; i < 2; ++i) {
            int v = g.adj[u][i];
            int w = g.adj[u][1 - i];
            if (g.degree(v) != 2) continue;
            int x = other_end(g, v, u);
            if (g.degree(x) <= k - 1)
                out.push_back(make(ConfigKind::C2, {{"u", u}, {"v", v}, {"w", w}, {"x", x}}));
        }
    }
}

void detect_c3(const Graph& g, int k, std::vector<ConfigurationMatch>& out) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 3) continue;
        for (int v : g.adj[u]) {
            if (g.degree(v) != 2) continue;
            int y = other_end(g, v, u);
            if (g.degree(y) > k - 1) continue;
            auto wx = neighbors_except(g, u, {v});
            if (g.degree(wx[0]) + g.degree(wx[1]) > k - 1) continue;
            out.push_back(make(ConfigKind::C3,
                               {{"u", u}, {"v", v}, {"w", wx[0]}, {"x", wx[1]}, {"y", y}}));
        }
    }
}

void detect_c4(const Graph& g, int k, std::vector<ConfigurationMatch>& out) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 3) continue;
        for (int v : g.adj[u]) {
            if (g.degree(v) != 3) continue;
            auto wx = neighbors_except(g, u, {v});
            if (g.degree(wx[0]) + g.degree(wx[1]) > k - 1) continue;
            auto pq = neighbors_except(g, v, {u});
            for (int s = 0; s < 2; ++s) {
                int y = pq[s];
                int z = pq[1 - s];
                if (g.degree(y) == 2 && g.degree(z) <= 7)
                    out.push_back(make(ConfigKind::C4, {{"u", u},
                                                        {"v", v},
                                                        {"w", wx[0]},
                                                        {"x", wx[1]},
                                                        {"y", y},
                                                        {"z", z}}));
            }
        }
    }
}

void detect_c5(const Graph& g, int k, std::vector<ConfigurationMatch>& out) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 3) continue;
        const auto& a = g.adj[u];
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                int v = a[i], w = a[j];
                if (g.degree(v) != 2 || g.degree(w) != 2) continue;
                int y = other_end(g, v, u);
                int z = other_end(g, w, u);
                if (g.degree(y) > 14 || g.degree(z) > 14) continue;
                int x = a[3 - i - j];
                if (g.degree(x) > k - 1) continue;
                out.push_back(make(ConfigKind::C5,
                                   {{"u", u}, {"v", v}, {"w", w}, {"x", x}, {"y", y}, {"z", z}}));
            }
        }
    }
}

void detect_c6(const Graph& g, int /*k*/, std::vector<ConfigurationMatch>& out) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 4) continue;
        for (int v : g.adj[u]) {
            if (g.degree(v) != 2) continue;
            int z = other_end(g, v, u);
            if (g.degree(z) > 14) continue;
            auto rest = neighbors_except(g, u, {v});
            for (int w : rest) {
                if (g.degree(w) > 7) continue;
                auto xy = neighbors_except(g, u, {v, w});
                if (g.degree(xy[0]) > 3 || g.degree(xy[1]) > 3) continue;
                out.push_back(make(ConfigKind::C6,
                                   {{"u", u}, {"v", v}, {"w", w}, {"x", xy[0]}, {"y", xy[1]}, {"z", z}}));
            }
        }
    }
}

void detect_c7(const Graph& g, int k, std::vector<ConfigurationMatch>& out) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 4) continue;
        const auto& a = g.adj[u];
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                int v = a[i], w = a[j];
                if (g.degree(v) != 2 || g.degree(w) != 2) continue;
                int z = other_end(g, v, u);
                int t = other_end(g, w, u);
                if (g.degree(z) > 14 || g.degree(t) > 14) continue;
                auto xy = neighbors_except(g, u, {v, w});
                if (g.degree(xy[0]) + g.degree(xy[1]) > k - 1) continue;
                out.push_back(make(ConfigKind::C7, {{"u", u},
                                                    {"v", v},
                                                    {"w", w},
                                                    {"x", xy[0]},
                                                    {"y", xy[1]},
                                                    {"z", z},
                                                    {"t", t}}));
            }
        }
    }
}

void detect_c8(const Graph& g, int /*k*/, std::vector<ConfigurationMatch>& out) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 5) continue;
        for (int v : g.adj[u]) {
            if (g.degree(v) != 2) continue;
            int t = other_end(g, v, u);
            if (g.degree(t) > 7) continue;
            auto rest = neighbors_except(g, u, {v});
            for (int w : rest) {
                if (g.degree(w) > 7) continue;
                for (int z : rest) {
                    if (z == w || g.degree(z) != 2) continue;
                    auto xy = neighbors_except(g, u, {v, w, z});
                    if (g.degree(xy[0]) > 3 || g.degree(xy[1]) > 3) continue;
                    out.push_back(make(ConfigKind::C8, {{"u", u},
                                                        {"v", v},
                                                        {"w", w},
                                                        {"x", xy[0]},
                                                        {"y", xy[1]},
                                                        {"z", z},
                                                        {"t", t}}));
                }
            }
        }
    }
}

void detect_c9(const Graph& g, int /*k*/, std::vector<ConfigurationMatch>& out) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 6) continue;
        for (int v : g.adj[u]) {
            if (g.degree(v) != 2) continue;
            int s = other_end(g, v, u);
            if (g.degree(s) > 7) continue;
            auto rest = neighbors_except(g, u, {v});
            for (int w : rest) {
                if (g.degree(w) > 7) continue;
                auto r2 = neighbors_except(g, u, {v, w});
                for (int zi = 0; zi < static_cast<int>(r2.size()); ++zi) {
                    for (int ti = zi + 1; ti < static_cast<int>(r2.size()); ++ti) {
                        int z = r2[zi], t = r2[ti];
                        if (g.degree(z) != 2 || g.degree(t) != 2) continue;
                        auto xy = neighbors_except(g, u, {v, w, z, t});
                        if (g.degree(xy[0]) > 3 || g.degree(xy[1]) > 3) continue;
                        out.push_back(make(ConfigKind::C9, {{"u", u},
                                                            {"v", v},
                                                            {"w", w},
                                                            {"x", xy[0]},
                                                            {"y", xy[1]},
                                                            {"z", z},
                                                            {"t", t},
                                                            {"s", s}}));
                    }
                }
            }
        }
    }
}

void detect_c10(const Graph& g, int /*k*/, std::vector<ConfigurationMatch>& out) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 7) continue;
        for (int v : g.adj[u]) {
            if (g.degree(v) > 7) continue;
            auto ws = neighbors_except(g, u, {v});
            bool ok = true;
            std::vector<int> fars;
            for (int wi : ws) {
                if (g.degree(wi) != 2) {
                    ok = false;
                    break;
                }
                int ti = other_end(g, wi, u);
                if (g.degree(ti) > 3) {
                    ok = false;
                    break;
                }
                fars.push_back(ti);
            }
            if (!ok) continue;
            std::vector<std::pair<std::string, int>> roles{{"u", u}, {"v", v}};
            for (int i = 0; i < 6; ++i) roles.emplace_back("w" + std::to_string(i + 1), ws[i]);
            for (int i = 0; i < 6; ++i) roles.emplace_back("t" + std::to_string(i + 1), fars[i]);
            out.push_back(make(ConfigKind::C10, std::move(roles)));
        }
    }
}

// Binds the extra deletion-helper roles next to a support vertex x adjacent
// to u: for an adjacent-pair support its degree-2 partner a; for a triple
// support the degree-3 partner a and its degree-2 witness c; for a weak-pair
// support the link middles c (toward the weak far) and a (the other one).
bool bind_support_witnesses(const Graph& g, const VertexClassification& cls, int x, int u,
                            SupportType type, std::vector<std::pair<std::string, int>>& roles) {
    switch (type) {
        case SupportType::S1: {
            if (g.degree(x) != 2) return false;
            int a = other_end(g, x, u);
            if (g.degree(a) != 2) return false;
            roles.emplace_back("a", a);
            return true;
        }
        case SupportType::S2: {
            if (g.degree(x) != 2) return false;
            int a = other_end(g, x, u);
            if (g.degree(a) != 3) return false;
            auto pq = neighbors_except(g, a, {x});
            int c = -1;
            if (g.degree(pq[0]) == 2 && g.degree(pq[1]) <= 7) c = pq[0];
            if (g.degree(pq[1]) == 2 && g.degree(pq[0]) <= 7 && (c == -1 || pq[1] < c))
                c = pq[1];
            if (c == -1) return false;
            roles.emplace_back("a", a);
            roles.emplace_back("c", c);
            return true;
        }
        case SupportType::S3: {
            if (g.degree(x) != 3) return false;
            auto mids = neighbors_except(g, x, {u});
            if (g.degree(mids[0]) != 2 || g.degree(mids[1]) != 2) return false;
            int c = -1;
            for (int m : mids) {
                int far = other_end(g, m, x);
                if (cls.weak[far]) {
                    c = m;
                    break;  // mids sorted: first hit is the least
                }
            }
            if (c == -1) return false;
            int a = (c == mids[0]) ? mids[1] : mids[0];
            if (g.degree(other_end(g, a, x)) > 14) return false;
            roles.emplace_back("c", c);
            roles.emplace_back("a", a);
            return true;
        }
        case SupportType::None:
            return false;
    }
    return false;
}

void detect_c11(const Graph& g, int k, std::vector<ConfigurationMatch>& out) {
    VertexClassification cls = classify_vertices(g);
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != k) continue;
        for (int x : g.adj[u]) {
            if (!cls.is_support(x)) continue;
            auto rest = neighbors_except(g, u, {x});
            for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
                for (int j = i + 1; j < static_cast<int>(rest.size()); ++j) {
                    int v = rest[i], w = rest[j];
                    if (g.degree(v) != 3 || g.degree(w) != 3) continue;
                    auto lv = links_of(g, v);
                    auto lw = links_of(g, w);
                    for (auto [z2, y] : lv) {
                        if (g.degree(y) != 3) continue;
                        for (auto [z3, yy] : lw) {
                            if (yy != y) continue;
                            for (auto [z1, y1] : lv) {
                                if (z1 == z2 || y1 == y || g.degree(y1) > 14) continue;
                                for (auto [z4, y2] : lw) {
                                    if (z4 == z3 || y2 == y || g.degree(y2) > 14) continue;
                                    if (!all_distinct({u, v, w, y, z1, z2, z3, z4})) continue;
                                    std::vector<std::pair<std::string, int>> roles{
                                        {"u", u},   {"v", v},   {"w", w},   {"x", x},
                                        {"y", y},   {"z1", z1}, {"z2", z2}, {"z3", z3},
                                        {"z4", z4}, {"y1", y1}, {"y2", y2}};
                                    if (!bind_support_witnesses(g, cls, x, u, cls.support[x],
                                                                roles))
                                        continue;
                                    auto m = make(ConfigKind::C11, std::move(roles));
                                    m.x_type = cls.support[x];
                                    out.push_back(std::move(m));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

std::vector<ConfigurationMatch> structural_matches(const VertexClassification& cls,
                                                   const Graph& h) {
    std::vector<ConfigurationMatch> out;
    for (const Block& b : blocks(h)) {
        if (b.vertices.size() < 3) continue;
        std::vector<int> sup;
        for (int v : b.vertices)
            if (cls.is_support(v)) sup.push_back(v);
        bool is_cycle = b.edges.size() == b.vertices.size();
        if (is_cycle && sup.size() % 2 == 1) continue;
        bool inside_lock = false;
        for (const Lock& lk : cls.locks) {
            auto lvs = lk.vertex_set();
            if (!std::includes(lvs.begin(), lvs.end(), b.vertices.begin(), b.vertices.end()))
                continue;
            auto les = lk.edge_set();
            std::set<std::pair<int, int>> lock_edges(les.begin(), les.end());
            bool all_in = true;
            for (auto [p, q] : b.edges)
                if (!lock_edges.count({std::min(p, q), std::max(p, q)})) all_in = false;
            if (all_in) {
                inside_lock = true;
                break;
            }
        }
        if (inside_lock) continue;
        ConfigurationMatch m;
        m.kind = ConfigKind::Structural;
        m.block_vertices = b.vertices;
        m.support_set = sup;
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const ConfigurationMatch& a, const ConfigurationMatch& b) {
        return a.block_vertices < b.block_vertices;
    });
    return out;
}

}  // namespace

std::string config_kind_name(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::C1: return "C1";
        case ConfigKind::C2: return "C2";
        case ConfigKind::C3: return "C3";
        case ConfigKind::C4: return "C4";
        case ConfigKind::C5: return "C5";
        case ConfigKind::C6: return "C6";
        case ConfigKind::C7: return "C7";
        case ConfigKind::C8: return "C8";
        case ConfigKind::C9: return "C9";
        case ConfigKind::C10: return "C10";
        case ConfigKind::C11: return "C11";
        case ConfigKind::Structural: return "Structural";
    }
    return "?";
}

KParameter::KParameter(int value) : k(value) {
    if (value < 17) throw BadK("k must be at least 17, got " + std::to_string(value));
}

KParameter default_k(const Graph& g) { return KParameter(std::max(17, max_degree(g))); }

void validate_k(const Graph& g, KParameter k) {
    int delta = max_degree(g);
    if (k.k < delta)
        throw BadK("k = " + std::to_string(k.k) + " is below the maximum degree " +
                   std::to_string(delta));
}

int ConfigurationMatch::role(const std::string& name) const {
    for (const auto& [n, v] : roles)
        if (n == name) return v;
    throw BadInput("match has no role named '" + name + "'");
}

bool ConfigurationMatch::has_role(const std::string& name) const {
    for (const auto& [n, v] : roles)
        if (n == name) return true;
    return false;
}

std::vector<int> ConfigurationMatch::role_ids() const {
    std::vector<int> ids;
    ids.reserve(roles.size());
    for (const auto& [n, v] : roles) ids.push_back(v);
    return ids;
}

std::vector<ConfigurationMatch> detect(const Graph& g, KParameter k, ConfigKind kind) {
    validate_k(g, k);
    std::vector<ConfigurationMatch> out;
    switch (kind) {
        case ConfigKind::C1: detect_c1(g, k.k, out); break;
        case ConfigKind::C2: detect_c2(g, k.k, out); break;
        case ConfigKind::C3: detect_c3(g, k.k, out); break;
        case ConfigKind::C4: detect_c4(g, k.k, out); break;
        case ConfigKind::C5: detect_c5(g, k.k, out); break;
        case ConfigKind::C6: detect_c6(g, k.k, out); break;
        case ConfigKind::C7: detect_c7(g, k.k, out); break;
        case ConfigKind::C8: detect_c8(g, k.k, out); break;
        case ConfigKind::C9: detect_c9(g, k.k, out); break;
        case ConfigKind::C10: detect_c10(g, k.k, out); break;
        case ConfigKind::C11: detect_c11(g, k.k, out); break;
        case ConfigKind::Structural: {
            VertexClassification cls = classify_vertices(g);
            Graph h = support_graph(g, cls);
            out = structural_matches(cls, h);
            return out;
        }
    }
    std::sort(out.begin(), out.end(), [](const ConfigurationMatch& a, const ConfigurationMatch& b) {
        return a.role_ids() < b.role_ids();
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const ConfigurationMatch& a, const ConfigurationMatch& b) {
                              return a.roles == b.roles;
                          }),
              out.end());
    return out;
}

std::optional<ConfigurationMatch> detect_any(const Graph& g, KParameter k) {
    validate_k(g, k);
    for (ConfigKind kind : {ConfigKind::C1, ConfigKind::C2, ConfigKind::C3, ConfigKind::C4,
                            ConfigKind::C5, ConfigKind::C6, ConfigKind::C7, ConfigKind::C8,
                            ConfigKind::C9, ConfigKind::C10, ConfigKind::C11}) {
        auto found = detect(g, k, kind);
        if (!found.empty()) return found.front();
    }
    VertexClassification cls = classify_vertices(g);
    Graph h = support_graph(g, cls);
    return detect_structural(g, cls, h, k);
}

std::optional<ConfigurationMatch> detect_structural(const Graph& g,
                                                    const VertexClassification& cls,
                                                    const Graph& h, KParameter /*k*/) {
    (void)g;
    auto found = structural_matches(cls, h);
    if (found.empty()) return std::nullopt;
    return found.front();
}

bool revalidate_match(const Graph& g, KParameter k, const ConfigurationMatch& m) {
    auto deg = [&](int v) { return g.degree(v); };
    auto adj = [&](int a, int b) { return g.has_edge(a, b); };
    // src - mid - far is a 1-link: mid has degree exactly 2.
    auto linked = [&](int src, int mid, int far) {
        return src != far && adj(src, mid) && adj(mid, far) && deg(mid) == 2;
    };
    switch (m.kind) {
        case ConfigKind::C1:
            return deg(m.role("u")) <= 1;
        case ConfigKind::C2: {
            int u = m.role("u"), v = m.role("v"), w = m.role("w"), x = m.role("x");
            return deg(u) == 2 && v != w && adj(u, v) && adj(u, w) && linked(u, v, x) &&
                   deg(x) <= k.k - 1;
        }
        case ConfigKind::C3: {
            int u = m.role("u"), v = m.role("v"), w = m.role("w"), x = m.role("x"),
                y = m.role("y");
            return deg(u) == 3 && all_distinct({v, w, x}) && adj(u, v) && adj(u, w) &&
                   adj(u, x) && linked(u, v, y) && deg(y) <= k.k - 1 &&
                   deg(w) + deg(x) <= k.k - 1;
        }
        case ConfigKind::C4: {
            int u = m.role("u"), v = m.role("v"), w = m.role("w"), x = m.role("x"),
                y = m.role("y"), z = m.role("z");
            return deg(u) == 3 && all_distinct({v, w, x}) && adj(u, v) && adj(u, w) &&
                   adj(u, x) && deg(v) == 3 && all_distinct({u, y, z}) && adj(v, y) &&
                   adj(v, z) && deg(y) == 2 && deg(z) <= 7 && deg(w) + deg(x) <= k.k - 1;
        }
        case ConfigKind::C5: {
            int u = m.role("u"), v = m.role("v"), w = m.role("w"), x = m.role("x"),
                y = m.role("y"), z = m.role("z");
            return deg(u) == 3 && all_distinct({v, w, x}) && adj(u, x) && linked(u, v, y) &&
                   linked(u, w, z) && deg(y) <= 14 && deg(z) <= 14 && deg(x) <= k.k - 1;
        }
        case ConfigKind::C6: {
            int u = m.role("u"), v = m.role("v"), w = m.role("w"), x = m.role("x"),
                y = m.role("y"), z = m.role("z");
            return deg(u) == 4 && all_distinct({v, w, x, y}) && adj(u, w) && adj(u, x) &&
                   adj(u, y) && linked(u, v, z) && deg(z) <= 14 && deg(w) <= 7 &&
                   deg(x) <= 3 && deg(y) <= 3;
        }
        case ConfigKind::C7: {
            int u = m.role("u"), v = m.role("v"), w = m.role("w"), x = m.role("x"),
                y = m.role("y"), z = m.role("z"), t = m.role("t");
            return deg(u) == 4 && all_distinct({v, w, x, y}) && adj(u, x) && adj(u, y) &&
                   linked(u, v, z) && linked(u, w, t) && deg(z) <= 14 && deg(t) <= 14 &&
                   deg(x) + deg(y) <= k.k - 1;
        }
        case ConfigKind::C8: {
            int u = m.role("u"), v = m.role("v"), w = m.role("w"), x = m.role("x"),
                y = m.role("y"), z = m.role("z"), t = m.role("t");
            return deg(u) == 5 && all_distinct({v, w, x, y, z}) && adj(u, w) && adj(u, x) &&
                   adj(u, y) && adj(u, z) && linked(u, v, t) && deg(t) <= 7 && deg(w) <= 7 &&
                   deg(x) <= 3 && deg(y) <= 3 && deg(z) == 2;
        }
        case ConfigKind::C9: {
            int u = m.role("u"), v = m.role("v"), w = m.role("w"), x = m.role("x"),
                y = m.role("y"), z = m.role("z"), t = m.role("t"), s = m.role("s");
            return deg(u) == 6 && all_distinct({v, w, x, y, z, t}) && adj(u, w) && adj(u, x) &&
                   adj(u, y) && adj(u, z) && adj(u, t) && linked(u, v, s) && deg(s) <= 7 &&
                   deg(w) <= 7 && deg(x) <= 3 && deg(y) <= 3 && deg(z) == 2 && deg(t) == 2;
        }
        case ConfigKind::C10: {
            int u = m.role("u"), v = m.role("v");
            if (deg(u) != 7 || !adj(u, v) || deg(v) > 7) return false;
            std::set<int> seen{v};
            for (int i = 1; i <= 6; ++i) {
                int wi = m.role("w" + std::to_string(i));
                int ti = m.role("t" + std::to_string(i));
                if (seen.count(wi)) return false;
                seen.insert(wi);
                if (!linked(u, wi, ti) || deg(ti) > 3) return false;
            }
            return true;
        }
        case ConfigKind::C11: {
            int u = m.role("u"), v = m.role("v"), w = m.role("w"), x = m.role("x"),
                y = m.role("y");
            int z1 = m.role("z1"), z2 = m.role("z2"), z3 = m.role("z3"), z4 = m.role("z4");
            int y1 = m.role("y1"), y2 = m.role("y2");
            if (deg(u) != k.k || !all_distinct({v, w, x}) || !adj(u, v) || !adj(u, w) ||
                !adj(u, x))
                return false;
            if (deg(v) != 3 || deg(w) != 3 || deg(y) != 3) return false;
            if (!linked(v, z2, y) || !linked(w, z3, y)) return false;
            if (!linked(v, z1, y1) || y1 == y || deg(y1) > 14) return false;
            if (!linked(w, z4, y2) || y2 == y || deg(y2) > 14) return false;
            if (!all_distinct({u, v, w, y, z1, z2, z3, z4})) return false;
            VertexClassification cls = classify_vertices(g);
            if (cls.support[x] != m.x_type || m.x_type == SupportType::None) return false;
            std::vector<std::pair<std::string, int>> expect;
            if (!bind_support_witnesses(g, cls, x, u, m.x_type, expect)) return false;
            for (const auto& [name, vtx] : expect)
                if (!m.has_role(name) || m.role(name) != vtx) return false;
            return true;
        }
        case ConfigKind::Structural: {
            VertexClassification cls = classify_vertices(g);
            Graph h = support_graph(g, cls);
            for (const auto& cand : structural_matches(cls, h))
                if (cand.block_vertices == m.block_vertices && cand.support_set == m.support_set)
                    return true;
            return false;
        }
    }
    return false;
}

}  // namespace sqc
