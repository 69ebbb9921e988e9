#include "sqcolor/gen.hpp"

#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sqcolor/density.hpp"
#include "sqcolor/errors.hpp"

namespace sqc {

namespace {

struct Builder {
    int n = 0;
    std::vector<std::pair<int, int>> es;
    std::map<std::string, int> roles;

    int vertex(const std::string& role = "") {
        int v = n++;
        if (!role.empty()) roles[role] = v;
        return v;
    }
    void edge(int a, int b) { es.emplace_back(a, b); }
    int degree_of(int v) const {
        int d = 0;
        for (auto [a, b] : es) d += (a == v) + (b == v);
        return d;
    }
    // Raises v to degree `target` by attaching pendant leaves.
    void pad(int v, int target) {
        for (int d = degree_of(v); d < target; ++d) edge(v, vertex());
    }
    Gadget finish() { return Gadget{build_graph(n, es), std::move(roles)}; }
};

constexpr int kUnbounded = std::numeric_limits<int>::max();

// Resolves the degree of a padded role: the override when present, else the
// default; rejects values outside [lo, hi] and records the role as known.
class DegreePlan {
  public:
    explicit DegreePlan(const GadgetParams& p) : p_(p) {}

    int get(const std::string& role, int fallback, int lo, int hi = kUnbounded) {
        known_.insert(role);
        int v = fallback;
        if (auto it = p_.degrees.find(role); it != p_.degrees.end()) v = it->second;
        if (v < lo || v > hi) {
            std::string upper = hi == kUnbounded ? "inf" : std::to_string(hi);
            throw BadParams("degree for role " + role + " must lie in [" +
                            std::to_string(lo) + ", " + upper + "], got " +
                            std::to_string(v));
        }
        return v;
    }

    void done() const {
        for (const auto& [name, value] : p_.degrees) {
            (void)value;
            if (!known_.count(name)) throw BadParams("unknown degree override: " + name);
        }
    }

  private:
    const GadgetParams& p_;
    std::set<std::string> known_;
};

Gadget make_c1(const GadgetParams& p) {
    DegreePlan plan(p);
    int dv = plan.get("v", p.k, 1);
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int v = b.vertex("v");
    b.edge(u, v);
    b.pad(v, dv);
    return b.finish();
}

Gadget make_c2(const GadgetParams& p) {
    DegreePlan plan(p);
    int dw = plan.get("w", p.k, 1);
    int dx = plan.get("x", p.k - 1, 1, p.k - 1);
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int v = b.vertex("v");
    int w = b.vertex("w");
    int x = b.vertex("x");
    b.edge(u, v);
    b.edge(u, w);
    b.edge(v, x);
    b.pad(w, dw);
    b.pad(x, dx);
    return b.finish();
}

Gadget make_c3(const GadgetParams& p) {
    DegreePlan plan(p);
    int dw = plan.get("w", 7, 1, p.k - 2);
    int dx = plan.get("x", 9, 1, p.k - 2);
    int dy = plan.get("y", p.k - 1, 1, p.k - 1);
    plan.done();
    if (dw + dx > p.k - 1)
        throw BadParams("degrees of w and x must sum to at most k - 1");
    Builder b;
    int u = b.vertex("u");
    int v = b.vertex("v");
    int w = b.vertex("w");
    int x = b.vertex("x");
    int y = b.vertex("y");
    b.edge(u, v);
    b.edge(u, w);
    b.edge(u, x);
    b.edge(v, y);
    b.pad(w, dw);
    b.pad(x, dx);
    b.pad(y, dy);
    return b.finish();
}

Gadget make_c4(const GadgetParams& p) {
    DegreePlan plan(p);
    int dw = plan.get("w", 7, 1, p.k - 2);
    int dx = plan.get("x", 9, 1, p.k - 2);
    int dz = plan.get("z", 7, 1, 7);
    int df = plan.get("f", 1, 1);
    plan.done();
    if (dw + dx > p.k - 1)
        throw BadParams("degrees of w and x must sum to at most k - 1");
    Builder b;
    int u = b.vertex("u");
    int v = b.vertex("v");
    int w = b.vertex("w");
    int x = b.vertex("x");
    int y = b.vertex("y");
    int z = b.vertex("z");
    int f = b.vertex("f");
    b.edge(u, v);
    b.edge(u, w);
    b.edge(u, x);
    b.edge(v, y);
    b.edge(v, z);
    b.edge(y, f);
    b.pad(w, dw);
    b.pad(x, dx);
    b.pad(z, dz);
    b.pad(f, df);
    return b.finish();
}

Gadget make_c5(const GadgetParams& p) {
    DegreePlan plan(p);
    int dx = plan.get("x", p.k - 1, 1, p.k - 1);
    int dy = plan.get("y", 14, 1, 14);
    int dz = plan.get("z", 14, 1, 14);
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int v = b.vertex("v");
    int w = b.vertex("w");
    int x = b.vertex("x");
    int y = b.vertex("y");
    int z = b.vertex("z");
    b.edge(u, v);
    b.edge(u, w);
    b.edge(u, x);
    b.edge(v, y);
    b.edge(w, z);
    b.pad(x, dx);
    b.pad(y, dy);
    b.pad(z, dz);
    return b.finish();
}

Gadget make_c6(const GadgetParams& p) {
    DegreePlan plan(p);
    int dw = plan.get("w", 7, 1, 7);
    int dx = plan.get("x", 3, 1, 3);
    int dy = plan.get("y", 3, 1, 3);
    int dz = plan.get("z", 14, 1, 14);
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int v = b.vertex("v");
    int w = b.vertex("w");
    int x = b.vertex("x");
    int y = b.vertex("y");
    int z = b.vertex("z");
    b.edge(u, v);
    b.edge(u, w);
    b.edge(u, x);
    b.edge(u, y);
    b.edge(v, z);
    b.pad(w, dw);
    b.pad(x, dx);
    b.pad(y, dy);
    b.pad(z, dz);
    return b.finish();
}

Gadget make_c7(const GadgetParams& p) {
    DegreePlan plan(p);
    int dx = plan.get("x", 7, 1, p.k - 2);
    int dy = plan.get("y", 9, 1, p.k - 2);
    int dz = plan.get("z", 14, 1, 14);
    int dt = plan.get("t", 14, 1, 14);
    plan.done();
    if (dx + dy > p.k - 1)
        throw BadParams("degrees of x and y must sum to at most k - 1");
    Builder b;
    int u = b.vertex("u");
    int v = b.vertex("v");
    int w = b.vertex("w");
    int x = b.vertex("x");
    int y = b.vertex("y");
    int z = b.vertex("z");
    int t = b.vertex("t");
    b.edge(u, v);
    b.edge(u, w);
    b.edge(u, x);
    b.edge(u, y);
    b.edge(v, z);
    b.edge(w, t);
    b.pad(x, dx);
    b.pad(y, dy);
    b.pad(z, dz);
    b.pad(t, dt);
    return b.finish();
}

Gadget make_c8(const GadgetParams& p) {
    DegreePlan plan(p);
    int dw = plan.get("w", 7, 1, 7);
    int dx = plan.get("x", 3, 1, 3);
    int dy = plan.get("y", 3, 1, 3);
    int dt = plan.get("t", 7, 1, 7);
    int ds = plan.get("s", 8, 1);
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int v = b.vertex("v");
    int w = b.vertex("w");
    int z = b.vertex("z");
    int x = b.vertex("x");
    int y = b.vertex("y");
    int t = b.vertex("t");
    int s = b.vertex("s");
    b.edge(u, v);
    b.edge(u, w);
    b.edge(u, z);
    b.edge(u, x);
    b.edge(u, y);
    b.edge(v, t);
    b.edge(z, s);
    b.pad(w, dw);
    b.pad(x, dx);
    b.pad(y, dy);
    b.pad(t, dt);
    b.pad(s, ds);
    return b.finish();
}

Gadget make_c9(const GadgetParams& p) {
    DegreePlan plan(p);
    int dw = plan.get("w", 7, 1, 7);
    int dx = plan.get("x", 3, 1, 3);
    int dy = plan.get("y", 3, 1, 3);
    int ds = plan.get("s", 7, 1, 7);
    int dfz = plan.get("fz", 8, 1);
    int dft = plan.get("ft", 8, 1);
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int v = b.vertex("v");
    int w = b.vertex("w");
    int z = b.vertex("z");
    int t = b.vertex("t");
    int x = b.vertex("x");
    int y = b.vertex("y");
    int s = b.vertex("s");
    int fz = b.vertex("fz");
    int ft = b.vertex("ft");
    b.edge(u, v);
    b.edge(u, w);
    b.edge(u, z);
    b.edge(u, t);
    b.edge(u, x);
    b.edge(u, y);
    b.edge(v, s);
    b.edge(z, fz);
    b.edge(t, ft);
    b.pad(w, dw);
    b.pad(x, dx);
    b.pad(y, dy);
    b.pad(s, ds);
    b.pad(fz, dfz);
    b.pad(ft, dft);
    return b.finish();
}

Gadget make_c10(const GadgetParams& p) {
    DegreePlan plan(p);
    int dv = plan.get("v", 7, 1, 7);
    std::vector<int> dts;
    for (int i = 1; i <= 6; ++i) dts.push_back(plan.get("t" + std::to_string(i), 3, 1, 3));
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int v = b.vertex("v");
    b.edge(u, v);
    std::vector<int> ws, ts;
    for (int i = 1; i <= 6; ++i) ws.push_back(b.vertex("w" + std::to_string(i)));
    for (int i = 1; i <= 6; ++i) ts.push_back(b.vertex("t" + std::to_string(i)));
    for (int i = 0; i < 6; ++i) {
        b.edge(u, ws[i]);
        b.edge(ws[i], ts[i]);
    }
    b.pad(v, dv);
    for (int i = 0; i < 6; ++i) b.pad(ts[i], dts[i]);
    return b.finish();
}

Gadget make_c11(const GadgetParams& p) {
    DegreePlan plan(p);
    int dy1 = plan.get("y1", 14, 1, 14);
    int dy2 = plan.get("y2", 14, 1, 14);
    int dt = plan.get("t", 1, 1);
    int db = plan.get("b", 1, 1);
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int v = b.vertex("v");
    int w = b.vertex("w");
    int x = b.vertex("x");
    int y = b.vertex("y");
    int z1 = b.vertex("z1");
    int z2 = b.vertex("z2");
    int z3 = b.vertex("z3");
    int z4 = b.vertex("z4");
    int y1 = b.vertex("y1");
    int y2 = b.vertex("y2");
    int a = b.vertex("a");
    int far_b = b.vertex("b");
    int t = b.vertex("t");
    b.edge(u, v);
    b.edge(u, w);
    b.edge(u, x);
    b.edge(v, z1);
    b.edge(v, z2);
    b.edge(w, z3);
    b.edge(w, z4);
    b.edge(z2, y);
    b.edge(z3, y);
    b.edge(z1, y1);
    b.edge(z4, y2);
    b.edge(y, t);
    b.edge(x, a);
    b.edge(a, far_b);
    b.pad(u, p.k);
    b.pad(y1, dy1);
    b.pad(y2, dy2);
    b.pad(far_b, db);
    b.pad(t, dt);
    return b.finish();
}

Gadget make_weak_vertex(const GadgetParams& p) {
    DegreePlan plan(p);
    int du = plan.get("u", p.k, 1);
    int df1 = plan.get("f1", 14, 1, 14);
    int df2 = plan.get("f2", 14, 1, 14);
    plan.done();
    Builder b;
    int x = b.vertex("x");
    int u = b.vertex("u");
    int m1 = b.vertex("m1");
    int m2 = b.vertex("m2");
    int f1 = b.vertex("f1");
    int f2 = b.vertex("f2");
    b.edge(x, u);
    b.edge(x, m1);
    b.edge(x, m2);
    b.edge(m1, f1);
    b.edge(m2, f2);
    b.pad(u, du);
    b.pad(f1, df1);
    b.pad(f2, df2);
    return b.finish();
}

Gadget make_s1(const GadgetParams& p) {
    DegreePlan plan(p);
    int du = plan.get("u", p.k, 1);
    int db = plan.get("b", p.k, 1);
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int x = b.vertex("x");
    int a = b.vertex("a");
    int far_b = b.vertex("b");
    b.edge(u, x);
    b.edge(x, a);
    b.edge(a, far_b);
    b.pad(u, du);
    b.pad(far_b, db);
    return b.finish();
}

Gadget make_s2(const GadgetParams& p) {
    DegreePlan plan(p);
    int du = plan.get("u", p.k, 4);
    int db = plan.get("b", 7, 1, 7);
    int dd = plan.get("d", 8, 1);
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int x = b.vertex("x");
    int a = b.vertex("a");
    int far_b = b.vertex("b");
    int c = b.vertex("c");
    int d = b.vertex("d");
    b.edge(u, x);
    b.edge(x, a);
    b.edge(a, far_b);
    b.edge(a, c);
    b.edge(c, d);
    b.pad(u, du);
    b.pad(far_b, db);
    b.pad(d, dd);
    return b.finish();
}

Gadget make_s3(const GadgetParams& p) {
    DegreePlan plan(p);
    int du = plan.get("u", p.k, 8);
    int dg = plan.get("g", 14, 1, 14);
    int df = plan.get("f", 14, 1, 14);
    int dt = plan.get("t", 8, 8);
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int x = b.vertex("x");
    int v = b.vertex("v");
    int w = b.vertex("w");
    int y = b.vertex("y");
    int z = b.vertex("z");
    int t = b.vertex("t");
    int g = b.vertex("g");
    int f = b.vertex("f");
    b.edge(u, x);
    b.edge(x, v);
    b.edge(x, w);
    b.edge(v, y);
    b.edge(w, g);
    b.edge(y, z);
    b.edge(y, t);
    b.edge(z, f);
    b.pad(u, du);
    b.pad(g, dg);
    b.pad(f, df);
    b.pad(t, dt);
    return b.finish();
}

Gadget make_lock(const GadgetParams& p) {
    DegreePlan plan(p);
    int du = plan.get("u", p.k, 8);
    int dx = plan.get("x", p.k, 8);
    plan.done();
    Builder b;
    int u = b.vertex("u");
    int x = b.vertex("x");
    int v1 = b.vertex("v1");
    int v2 = b.vertex("v2");
    int w1 = b.vertex("w1");
    int w2 = b.vertex("w2");
    int m11 = b.vertex("m11");
    int m12 = b.vertex("m12");
    int m21 = b.vertex("m21");
    int m22 = b.vertex("m22");
    b.edge(u, v1);
    b.edge(u, v2);
    b.edge(x, w1);
    b.edge(x, w2);
    b.edge(v1, m11);
    b.edge(v1, m12);
    b.edge(v2, m21);
    b.edge(v2, m22);
    b.edge(m11, w1);
    b.edge(m12, w2);
    b.edge(m21, w1);
    b.edge(m22, w2);
    b.pad(u, du);
    b.pad(x, dx);
    return b.finish();
}

Gadget make_hub_tree(const GadgetParams& p) {
    DegreePlan plan(p);
    int dc = plan.get("child", 3, 1);
    plan.done();
    Builder b;
    int hub = b.vertex("hub");
    for (int i = 0; i < p.k; ++i) {
        int c = b.vertex();
        b.edge(hub, c);
        b.pad(c, dc);
    }
    return b.finish();
}

}  // namespace

std::string gadget_kind_name(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::WeakVertex: return "WeakVertex";
        case GadgetKind::S1: return "S1";
        case GadgetKind::S2: return "S2";
        case GadgetKind::S3: return "S3";
        case GadgetKind::Lock: return "Lock";
        case GadgetKind::C1: return "C1";
        case GadgetKind::C2: return "C2";
        case GadgetKind::C3: return "C3";
        case GadgetKind::C4: return "C4";
        case GadgetKind::C5: return "C5";
        case GadgetKind::C6: return "C6";
        case GadgetKind::C7: return "C7";
        case GadgetKind::C8: return "C8";
        case GadgetKind::C9: return "C9";
        case GadgetKind::C10: return "C10";
        case GadgetKind::C11: return "C11";
        case GadgetKind::HubTree: return "HubTree";
    }
    return "?";
}

Gadget gen_gadget(GadgetKind kind, const GadgetParams& params) {
    if (params.k < 17) throw BadParams("k must be at least 17");
    switch (kind) {
        case GadgetKind::WeakVertex: return make_weak_vertex(params);
        case GadgetKind::S1: return make_s1(params);
        case GadgetKind::S2: return make_s2(params);
        case GadgetKind::S3: return make_s3(params);
        case GadgetKind::Lock: return make_lock(params);
        case GadgetKind::C1: return make_c1(params);
        case GadgetKind::C2: return make_c2(params);
        case GadgetKind::C3: return make_c3(params);
        case GadgetKind::C4: return make_c4(params);
        case GadgetKind::C5: return make_c5(params);
        case GadgetKind::C6: return make_c6(params);
        case GadgetKind::C7: return make_c7(params);
        case GadgetKind::C8: return make_c8(params);
        case GadgetKind::C9: return make_c9(params);
        case GadgetKind::C10: return make_c10(params);
        case GadgetKind::C11: return make_c11(params);
        case GadgetKind::HubTree: return make_hub_tree(params);
    }
    throw BadParams("unknown gadget kind");
}

Graph gen_sparse(const GenSpec& spec) {
    if (spec.delta < 17) throw Unsatisfiable("delta must be at least 17");
    if (spec.n < spec.delta + 1)
        throw Unsatisfiable("n must be at least delta + 1 to realize the maximum degree");
    std::mt19937_64 rng(spec.seed);
    auto pick = [&](int m) { return static_cast<int>(rng() % static_cast<std::uint64_t>(m)); };

    // Hub star fixes the maximum degree; the remaining vertices attach as a
    // random tree to targets with spare degree.
    std::vector<std::pair<int, int>> es;
    std::vector<int> deg(spec.n, 0);
    auto add = [&](int a, int b) {
        es.emplace_back(a, b);
        ++deg[a];
        ++deg[b];
    };
    for (int v = 1; v <= spec.delta; ++v) add(0, v);
    for (int v = spec.delta + 1; v < spec.n; ++v) {
        int t = pick(v);
        while (deg[t] >= spec.delta) t = pick(v);
        add(t, v);
    }
    Graph g = build_graph(spec.n, es);
    if (!(mad_exact(g).value < spec.mad_bound))
        throw Unsatisfiable("mad bound rejects even a spanning tree");

    // Densify by rejection: each candidate edge is kept only when the exact
    // certificate still clears the bound.
    int attempts = 2 * spec.n;
    for (int i = 0; i < attempts; ++i) {
        int a = pick(spec.n);
        int b = pick(spec.n);
        if (a == b || deg[a] >= spec.delta || deg[b] >= spec.delta || g.has_edge(a, b))
            continue;
        std::vector<std::pair<int, int>> trial = es;
        trial.emplace_back(a, b);
        Graph h = build_graph(spec.n, trial);
        if (mad_exact(h).value < spec.mad_bound) {
            es = std::move(trial);
            g = std::move(h);
            ++deg[a];
            ++deg[b];
        }
    }
    return g;
}

}  // namespace sqc
