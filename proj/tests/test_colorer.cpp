#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "sqcolor/colorer.hpp"
#include "sqcolor/config.hpp"
#include "sqcolor/density.hpp"
#include "sqcolor/errors.hpp"
#include "sqcolor/graph.hpp"
#include "util.hpp"

using namespace sqc;
using namespace sqc::testing;

namespace {

struct Builder {
    std::vector<std::pair<int, int>> es;
    int n = 0;
    int vertex() { return n++; }
    void edge(int u, int v) { es.push_back({u, v}); }
    Graph graph() const { return build_graph(n, es); }

    // A degree-2 vertex hanging between `target` and `hub`.
    int filler(int target, int hub) {
        int f = vertex();
        edge(target, f);
        edge(f, hub);
        return f;
    }

    // Raise `hub` to degree 17 with mutually adjacent degree-2 pairs (plus
    // one triple when the remainder is odd). Their second endpoint being the
    // hub keeps every low-priority pattern off them.
    void pad_hub(int hub, int current_load) {
        int need = 17 - current_load;
        REQUIRE(need >= 2);
        if (need % 2 == 1) {
            int p = vertex(), q = vertex(), r = vertex();
            edge(p, q);
            edge(q, r);
            edge(p, hub);
            edge(q, hub);
            edge(r, hub);
            need -= 3;
        }
        for (; need > 0; need -= 2) {
            int p = vertex(), q = vertex();
            edge(p, q);
            edge(p, hub);
            edge(q, hub);
        }
    }
};

// Replay a trace: deletions forward must dismantle the graph exactly once;
// assignments backward must land on the returned coloring.
void check_trace_replay(const Graph& g, const ColorResult& res, Mode mode,
                        const ListAssignment& la) {
    std::vector<char> alive(g.n, 1);
    std::set<std::pair<int, int>> removed;
    for (const TraceStep& step : res.trace.steps) {
        for (int v : step.deleted_vertices) {
            REQUIRE(alive[v]);
            alive[v] = 0;
        }
        for (auto e : step.deleted_edges) {
            REQUIRE(!removed.count(e));
            removed.insert(e);
        }
    }
    for (int v = 0; v < g.n; ++v) CHECK(!alive[v]);

    PartialColoring pc(g.n);
    for (auto it = res.trace.steps.rbegin(); it != res.trace.steps.rend(); ++it) {
        for (int v : it->discolored) pc[v] = std::nullopt;
        for (const ExtensionEntry& e : it->extensions) {
            CHECK(std::find(la.lists[e.vertex].begin(), la.lists[e.vertex].end(), e.color) !=
                  la.lists[e.vertex].end());
            pc[e.vertex] = e.color;
        }
    }
    for (int v = 0; v < g.n; ++v) {
        REQUIRE(pc[v].has_value());
        CHECK(*pc[v] == res.coloring.color[v]);
    }
    CHECK(check_coloring(g, res.coloring, &la, mode).ok);
}

void check_constraint_bounds(const ColorResult& res, int k, Mode mode) {
    int slack = (mode == Mode::TwoDistance) ? 0 : 1;
    for (const TraceStep& step : res.trace.steps) {
        if (step.used_fallback) continue;
        if (step.match.kind == ConfigKind::C11 || step.match.kind == ConfigKind::Structural)
            continue;  // their scripted bounds are claim-specific, not k+1
        for (const ExtensionEntry& e : step.extensions) {
            int bound = (step.match.kind == ConfigKind::C1) ? k : k + 1;
            CHECK(e.constraint_count <= bound - slack);
        }
    }
}

// Full run on a theorem-domain gadget: verifies the domain, colors, checks
// the first reduction kind, and validates replay. Returns the trace.
ColorResult run_gadget(const Graph& g, ConfigKind expected_first) {
    REQUIRE(mad_exact(g).value < Rational(3));
    REQUIRE(max_degree(g) <= 17);
    ListAssignment la = uniform_lists(g.n, 19);
    ColorResult res = color(g, la, KParameter(17), Mode::TwoDistance);
    REQUIRE(!res.trace.steps.empty());
    CHECK(res.trace.steps[0].match.kind == expected_first);
    check_trace_replay(g, res, Mode::TwoDistance, la);
    check_constraint_bounds(res, 17, Mode::TwoDistance);
    return res;
}

}  // namespace

TEST_CASE("constraint sets by mode") {
    Graph c5 = cycle_graph(5);
    PartialColoring pc(5);
    CHECK(constraints(c5, pc, 0, Mode::TwoDistance).empty());
    pc[1] = 4;
    pc[2] = 9;
    CHECK(constraints(c5, pc, 0, Mode::TwoDistance) == std::set<int>{4, 9});
    CHECK(constraints(c5, pc, 4, Mode::TwoDistance) == std::set<int>{4, 9});

    // Five-vertex path, ends colored, center queried: both colors show up in
    // both modes (each end is two steps away, through a middle vertex).
    Graph p5 = path_graph(5);
    PartialColoring qc(5);
    qc[0] = 3;
    qc[4] = 8;
    CHECK(constraints(p5, qc, 2, Mode::TwoDistance) == std::set<int>{3, 8});
    CHECK(constraints(p5, qc, 2, Mode::Injective) == std::set<int>{3, 8});

    // Three-vertex path: the middle is merely adjacent to the colored ends,
    // so injective mode sees nothing there.
    Graph p3 = path_graph(3);
    PartialColoring rc(3);
    rc[0] = 1;
    rc[2] = 2;
    CHECK(constraints(p3, rc, 1, Mode::TwoDistance) == std::set<int>{1, 2});
    CHECK(constraints(p3, rc, 1, Mode::Injective).empty());
    // An end vertex sees the far end through the middle in both modes.
    PartialColoring sc(3);
    sc[1] = 5;
    sc[2] = 6;
    CHECK(constraints(p3, sc, 0, Mode::TwoDistance) == std::set<int>{5, 6});
    CHECK(constraints(p3, sc, 0, Mode::Injective) == std::set<int>{6});
}

TEST_CASE("coloring checker") {
    Graph c5 = cycle_graph(5);
    Coloring good{{0, 1, 2, 3, 4}};
    CHECK(check_coloring(c5, good, nullptr, Mode::TwoDistance).ok);

    Coloring bad{{0, 1, 0, 3, 4}};  // vertices 0 and 2 share a neighbor
    CheckResult res = check_coloring(c5, bad, nullptr, Mode::TwoDistance);
    CHECK(!res.ok);
    REQUIRE(res.violations.size() == 1);
    CHECK(res.violations[0].kind == "conflict");
    CHECK(res.violations[0].u == 0);
    CHECK(res.violations[0].v == 2);

    // Adjacent repeat without a common neighbor is fine injectively.
    Graph k2 = build_graph(2, {{0, 1}});
    Coloring same{{7, 7}};
    CHECK(check_coloring(k2, same, nullptr, Mode::Injective).ok);
    CHECK(!check_coloring(k2, same, nullptr, Mode::TwoDistance).ok);

    ListAssignment la;
    la.lists = {{0, 1}, {2}};
    Coloring off{{0, 1}};
    CheckResult lres = check_coloring(k2, off, &la, Mode::TwoDistance);
    CHECK(!lres.ok);
    REQUIRE(lres.violations.size() == 1);
    CHECK(lres.violations[0].kind == "off-list");
    CHECK(lres.violations[0].u == 1);

    Coloring partial{{-1, 0}};
    CHECK(!check_coloring(k2, partial, nullptr, Mode::TwoDistance).ok);
}

TEST_CASE("input validation") {
    Graph k3 = complete_graph(3);
    ListAssignment tiny;
    tiny.lists = {{0}, {0}, {0}};
    CHECK_THROWS_AS(color(k3, tiny, KParameter(17), Mode::TwoDistance), BadInput);

    ListAssignment wrong_count = uniform_lists(2, 19);
    CHECK_THROWS_AS(color(k3, wrong_count, KParameter(17), Mode::TwoDistance), BadInput);

    Graph star = star_graph(18);
    CHECK_THROWS_AS(color(star, uniform_lists(19, 19), KParameter(17), Mode::TwoDistance),
                    BadK);

    // Plenty of repeats but too few distinct colors.
    ListAssignment dup;
    dup.lists.assign(3, std::vector<int>(25, 5));
    CHECK_THROWS_AS(color(k3, dup, KParameter(17), Mode::TwoDistance), BadInput);

    // Injective mode needs only k+1 colors.
    Graph p4 = path_graph(4);
    ListAssignment la18 = uniform_lists(4, 18);
    CHECK_THROWS_AS(color(p4, la18, KParameter(17), Mode::TwoDistance), BadInput);
    CHECK(check_coloring(p4, color(p4, la18, KParameter(17), Mode::Injective).coloring,
                         nullptr, Mode::Injective)
              .ok);
}

TEST_CASE("small guaranteed instances") {
    SUBCASE("star") {
        Graph g = star_graph(17);
        ListAssignment la = uniform_lists(g.n, 19);
        ColorResult res = color(g, la, KParameter(17), Mode::TwoDistance);
        // The square of a star is complete: all eighteen colors distinct.
        std::set<int> used(res.coloring.color.begin(), res.coloring.color.end());
        CHECK(used.size() == 18);
        check_trace_replay(g, res, Mode::TwoDistance, la);
        check_constraint_bounds(res, 17, Mode::TwoDistance);
        for (const TraceStep& s : res.trace.steps) CHECK(s.match.kind == ConfigKind::C1);
    }
    SUBCASE("five-cycle") {
        Graph g = cycle_graph(5);
        ListAssignment la = uniform_lists(5, 19);
        ColorResult res = color(g, la, KParameter(17), Mode::TwoDistance);
        std::set<int> used(res.coloring.color.begin(), res.coloring.color.end());
        CHECK(used.size() == 5);
        CHECK(res.trace.steps[0].match.kind == ConfigKind::C2);
        check_trace_replay(g, res, Mode::TwoDistance, la);
    }
    SUBCASE("empty and singleton") {
        Graph none = build_graph(0, {});
        ColorResult res = color(none, ListAssignment{}, KParameter(17), Mode::TwoDistance);
        CHECK(res.coloring.color.empty());
        CHECK(res.trace.steps.empty());

        Graph one = build_graph(1, {});
        ColorResult r1 = color(one, uniform_lists(1, 19), KParameter(17), Mode::TwoDistance);
        CHECK(r1.coloring.color.size() == 1);
        REQUIRE(r1.trace.steps.size() == 1);
        CHECK(r1.trace.steps[0].match.kind == ConfigKind::C1);
    }
    SUBCASE("long path") {
        Graph g = path_graph(40);
        ListAssignment la = uniform_lists(40, 19);
        ColorResult res = color(g, la, KParameter(17), Mode::TwoDistance);
        check_trace_replay(g, res, Mode::TwoDistance, la);
        check_constraint_bounds(res, 17, Mode::TwoDistance);
    }
}

TEST_CASE("irreducible graphs are reported, not colored") {
    Graph pet = petersen_graph();
    ListAssignment la = uniform_lists(10, 19);
    try {
        color(pet, la, KParameter(17), Mode::TwoDistance);
        FAIL("expected NoReducibleConfiguration");
    } catch (const NoReducibleConfiguration& e) {
        CHECK(e.residual_vertices.size() == 10);
        Graph residue = induced_subgraph(pet, e.residual_vertices);
        CHECK(mad_exact(residue).value >= Rational(3));
    }

    // A pendant vertex on the Petersen graph peels off before the core jams.
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < pet.n; ++u)
        for (int v : pet.adj[u])
            if (u < v) es.push_back({u, v});
    es.push_back({0, 10});
    Graph padded = build_graph(11, es);
    try {
        color(padded, uniform_lists(11, 19), KParameter(17), Mode::TwoDistance);
        FAIL("expected NoReducibleConfiguration");
    } catch (const NoReducibleConfiguration& e) {
        CHECK(e.residual_vertices.size() == 10);
        CHECK(!std::count(e.residual_vertices.begin(), e.residual_vertices.end(), 10));
    }
}

TEST_CASE("planted theta drives the discolor-recolor path") {
    // Two degree-3 hubs joined by three two-edge paths: the first reduction
    // removes a middle and must revoke and restore a hub color.
    Builder b;
    int u = b.vertex(), f = b.vertex();
    int m = b.filler(u, f);
    b.filler(u, f);
    b.filler(u, f);
    Graph g = b.graph();
    ColorResult res = run_gadget(g, ConfigKind::C3);
    CHECK(res.trace.steps[0].discolored == std::vector<int>{u});
    CHECK(res.trace.steps[0].deleted_vertices == std::vector<int>{m});
}

TEST_CASE("edge-removal reduction keeps both endpoints") {
    // Adjacent degree-3 vertices, every outer neighbor a hub-anchored
    // degree-2 vertex: the first reduction removes just the shared edge.
    Builder b;
    int u = b.vertex(), v = b.vertex(), H = b.vertex();
    b.edge(u, v);
    b.filler(u, H);
    b.filler(u, H);
    b.filler(v, H);
    b.filler(v, H);
    b.pad_hub(H, 4);
    Graph g = b.graph();
    REQUIRE(g.degree(H) == 17);
    ColorResult res = run_gadget(g, ConfigKind::C4);
    const TraceStep& s = res.trace.steps[0];
    CHECK(s.deleted_vertices.empty());
    REQUIRE(s.deleted_edges.size() == 1);
    int eu = s.match.role("u"), ev = s.match.role("v");
    CHECK(s.deleted_edges[0] == std::make_pair(std::min(eu, ev), std::max(eu, ev)));
    CHECK(s.discolored == std::vector<int>{std::min(eu, ev), std::max(eu, ev)});
    CHECK(!s.used_fallback);
}

TEST_CASE("degree-4 core with one link reduces first") {
    Builder b;
    int u = b.vertex(), v = b.vertex(), zf = b.vertex(), H = b.vertex();
    b.edge(u, v);
    b.edge(v, zf);          // v is the only qualifying middle
    b.filler(zf, H);        // zf degree 3, third neighbor the hub
    b.edge(zf, H);
    b.filler(u, H);
    b.filler(u, H);
    b.filler(u, H);
    b.pad_hub(H, 5);
    Graph g = b.graph();
    REQUIRE(g.degree(u) == 4);
    REQUIRE(g.degree(H) == 17);
    run_gadget(g, ConfigKind::C6);
}

TEST_CASE("degree-4 core with two links reduces first") {
    // Two mirrored cores whose link endpoints bridge each other keep the
    // density strictly under the bound while blocking every smaller shape.
    Builder b;
    int H1 = b.vertex(), H2 = b.vertex();
    int fz = b.vertex(), ft = b.vertex();  // bridges between the twin fars
    std::array<int, 2> us{}, xs{}, ys{};
    for (int side = 0; side < 2; ++side) {
        int u = b.vertex(), v = b.vertex(), w = b.vertex(), zf = b.vertex(), tf = b.vertex(),
            x = b.vertex(), y = b.vertex();
        b.edge(u, v);
        b.edge(v, zf);
        b.edge(zf, fz);
        b.edge(zf, H1);
        b.edge(u, w);
        b.edge(w, tf);
        b.edge(tf, ft);
        b.edge(tf, H1);
        // x and y at degree 4 block the one-link shape (two of the remaining
        // neighbors would have to be very small) while keeping the sum at 8.
        b.edge(u, x);
        b.edge(u, y);
        us[side] = u;
        xs[side] = x;
        ys[side] = y;
    }
    for (int i = 0; i < 3; ++i) b.filler(xs[0], H1);
    for (int i = 0; i < 3; ++i) b.filler(ys[0], H2);
    for (int i = 0; i < 3; ++i) b.filler(xs[1], H2);
    for (int i = 0; i < 3; ++i) b.filler(ys[1], H2);
    b.pad_hub(H1, 7);
    b.pad_hub(H2, 9);
    Graph g = b.graph();
    REQUIRE(g.degree(us[0]) == 4);
    REQUIRE(g.degree(H1) == 17);
    REQUIRE(g.degree(H2) == 17);
    run_gadget(g, ConfigKind::C7);
}

TEST_CASE("degree-5 core reduces first") {
    Builder b;
    int H1 = b.vertex(), H2 = b.vertex();
    int ft = b.vertex();
    std::array<int, 2> us{};
    for (int side = 0; side < 2; ++side) {
        int hub = (side == 0) ? H1 : H2;
        int u = b.vertex(), v = b.vertex(), tf = b.vertex();
        b.edge(u, v);
        b.edge(v, tf);
        b.edge(tf, ft);
        b.edge(tf, hub);
        for (int i = 0; i < 4; ++i) b.filler(u, hub);
        us[side] = u;
    }
    b.pad_hub(H1, 5);
    b.pad_hub(H2, 5);
    Graph g = b.graph();
    REQUIRE(g.degree(us[0]) == 5);
    REQUIRE(g.degree(H1) == 17);
    REQUIRE(g.degree(H2) == 17);
    run_gadget(g, ConfigKind::C8);
}

TEST_CASE("degree-6 core reduces first") {
    Builder b;
    int H1 = b.vertex(), H2 = b.vertex();
    int ft = b.vertex();
    for (int side = 0; side < 2; ++side) {
        int u = b.vertex(), v = b.vertex(), tf = b.vertex();
        b.edge(u, v);
        b.edge(v, tf);
        b.edge(tf, ft);
        b.edge(tf, H2);  // both fars lean on the second hub
        for (int i = 0; i < 5; ++i) b.filler(u, (side == 0) ? H1 : H2);
    }
    b.pad_hub(H1, 5);
    b.pad_hub(H2, 7);
    Graph g = b.graph();
    REQUIRE(g.degree(H1) == 17);
    REQUIRE(g.degree(H2) == 17);
    run_gadget(g, ConfigKind::C9);
}

TEST_CASE("degree-7 core reduces first") {
    Builder b;
    int u = b.vertex(), H = b.vertex();
    b.filler(u, H);  // the small plain neighbor
    std::vector<int> ws;
    for (int i = 0; i < 6; ++i) {
        int wi = b.vertex();
        b.edge(u, wi);
        ws.push_back(wi);
    }
    // Pairs of link middles share a degree-3 far endpoint anchored on the hub.
    for (int i = 0; i < 6; i += 2) {
        int t = b.vertex();
        b.edge(ws[i], t);
        b.edge(ws[i + 1], t);
        b.edge(t, H);
    }
    b.pad_hub(H, 4);
    Graph g = b.graph();
    REQUIRE(g.degree(u) == 7);
    REQUIRE(g.degree(H) == 17);
    run_gadget(g, ConfigKind::C10);
}

namespace {

// A five-edge unit granting u five slots: a degree-3 pair v,w one-linked to a
// shared degree-3 vertex y (third neighbor u) and to far vertices y1, y2
// (degree 3, third neighbors u and a shared bridge). Self-blocking: every
// small vertex leans on u, so nothing below the degree-k pattern fires.
struct FullDegreeUnit {
    int v, w, y, z1, z2, z3, z4, y1, y2, s;
};

FullDegreeUnit add_full_degree_unit(Builder& b, int u) {
    FullDegreeUnit t;
    t.v = b.vertex();
    t.w = b.vertex();
    t.y = b.vertex();
    t.z1 = b.vertex();
    t.z2 = b.vertex();
    t.z3 = b.vertex();
    t.z4 = b.vertex();
    t.y1 = b.vertex();
    t.y2 = b.vertex();
    t.s = b.vertex();
    b.edge(u, t.v);
    b.edge(u, t.w);
    b.edge(u, t.y);
    b.edge(u, t.y1);
    b.edge(u, t.y2);
    b.edge(t.v, t.z1);
    b.edge(t.v, t.z2);
    b.edge(t.w, t.z3);
    b.edge(t.w, t.z4);
    b.edge(t.z2, t.y);
    b.edge(t.z3, t.y);
    b.edge(t.z1, t.y1);
    b.edge(t.z4, t.y2);
    b.edge(t.y1, t.s);
    b.edge(t.y2, t.s);
    return t;
}

}  // namespace

TEST_CASE("full-degree pattern colors through the support case analysis") {
    Builder b;
    int u = b.vertex();
    add_full_degree_unit(b, u);
    add_full_degree_unit(b, u);
    add_full_degree_unit(b, u);
    // An adjacent-pair support on u: a triangle of two degree-2 vertices.
    int x = b.vertex(), a = b.vertex();
    b.edge(u, x);
    b.edge(u, a);
    b.edge(x, a);
    Graph g = b.graph();
    REQUIRE(g.degree(u) == 17);
    ColorResult res = run_gadget(g, ConfigKind::C11);
    const TraceStep& s = res.trace.steps[0];
    CHECK((s.match.x_type == SupportType::S1 || s.match.x_type == SupportType::S3));
    CHECK(!s.used_fallback);
    CHECK(s.deleted_vertices.size() >= 7);
}

TEST_CASE("support-pair component is colored via its own claim") {
    // A four-cycle of two weak supports and two middles, the supports held
    // by degree-17 hubs: no vertex pattern fires, the component does.
    Builder b;
    int s0 = b.vertex(), t1 = b.vertex(), s2 = b.vertex(), t3 = b.vertex();
    b.edge(s0, t1);
    b.edge(t1, s2);
    b.edge(s2, t3);
    b.edge(t3, s0);
    int M0 = b.vertex(), M2 = b.vertex();
    b.edge(s0, M0);
    b.edge(s2, M2);
    b.pad_hub(M0, 1);
    b.pad_hub(M2, 1);
    Graph g = b.graph();
    REQUIRE(g.degree(M0) == 17);
    ColorResult res = run_gadget(g, ConfigKind::Structural);
    const TraceStep& s = res.trace.steps[0];
    CHECK(s.match.support_set == std::vector<int>{s0, s2});
    CHECK(s.deleted_vertices == std::vector<int>{s0, t1, s2, t3});
    CHECK(!s.used_fallback);
}

TEST_CASE("four-support component goes through the degree-list coloring") {
    // An eight-cycle alternating supports and middles, each support held by
    // its own hub: the support conflict graph is a four-cycle with tight
    // lists, exercising the degree-choosable branch.
    Builder b;
    std::vector<int> ring;
    for (int i = 0; i < 8; ++i) ring.push_back(b.vertex());
    for (int i = 0; i < 8; ++i) b.edge(ring[i], ring[(i + 1) % 8]);
    for (int i = 0; i < 8; i += 2) {
        int M = b.vertex();
        b.edge(ring[i], M);
        b.pad_hub(M, 1);
    }
    Graph g = b.graph();
    ColorResult res = run_gadget(g, ConfigKind::Structural);
    const TraceStep& s = res.trace.steps[0];
    CHECK(s.match.support_set == std::vector<int>{ring[0], ring[2], ring[4], ring[6]});
    CHECK(s.deleted_vertices.size() == 8);  // supports plus the four middles
    check_trace_replay(g, res, Mode::TwoDistance, uniform_lists(g.n, 19));
}

TEST_CASE("brooks list coloring") {
    Graph c4 = cycle_graph(4);
    SUBCASE("uniform two-lists alternate") {
        std::vector<std::vector<int>> lists(4, std::vector<int>{1, 2});
        Coloring c = brooks_list_color(c4, lists);
        CHECK(c.color[0] != c.color[1]);
        CHECK(c.color[1] != c.color[2]);
        CHECK(c.color[2] != c.color[3]);
        CHECK(c.color[3] != c.color[0]);
        for (int v = 0; v < 4; ++v) CHECK((c.color[v] == 1 || c.color[v] == 2));
    }
    SUBCASE("rotating tight lists") {
        std::vector<std::vector<int>> lists = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
        Coloring c = brooks_list_color(c4, lists);
        for (int v = 0; v < 4; ++v) {
            CHECK(std::count(lists[v].begin(), lists[v].end(), c.color[v]) == 1);
            CHECK(c.color[v] != c.color[(v + 1) % 4]);
        }
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(
            brooks_list_color(complete_graph(4), std::vector<std::vector<int>>(4, {1, 2, 3})),
            PreconditionViolated);
        CHECK_THROWS_AS(brooks_list_color(cycle_graph(5), std::vector<std::vector<int>>(5, {1, 2})),
                        PreconditionViolated);
        CHECK_THROWS_AS(brooks_list_color(path_graph(4), std::vector<std::vector<int>>(4, {1, 2})),
                        PreconditionViolated);
        CHECK_THROWS_AS(brooks_list_color(c4, std::vector<std::vector<int>>(4, {1})),
                        PreconditionViolated);
        CHECK_THROWS_AS(
            brooks_list_color(build_graph(2, {{0, 1}}), std::vector<std::vector<int>>(2, {1, 2})),
            PreconditionViolated);
    }
    SUBCASE("larger even cycle with slack") {
        Graph c6 = cycle_graph(6);
        std::vector<std::vector<int>> lists(6, std::vector<int>{4, 7, 9});
        Coloring c = brooks_list_color(c6, lists);
        for (int v = 0; v < 6; ++v) CHECK(c.color[v] != c.color[(v + 1) % 6]);
    }
    SUBCASE("theta graph with tight lists") {
        Graph theta = build_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
        std::vector<std::vector<int>> lists = {{1, 2, 3}, {1, 2, 3}, {1, 2}, {2, 3}, {1, 3}};
        Coloring c = brooks_list_color(theta, lists);
        for (int u = 0; u < 5; ++u)
            for (int v : theta.adj[u])
                if (u < v) CHECK(c.color[u] != c.color[v]);
        for (int v = 0; v < 5; ++v)
            CHECK(std::count(lists[v].begin(), lists[v].end(), c.color[v]) == 1);
    }
}

TEST_CASE("guarantee on sparse random instances") {
    std::mt19937 rng(8001);
    int colored = 0;
    for (int it = 0; it < 60; ++it) {
        int n = 10 + static_cast<int>(rng() % 40);
        Graph g = sparse_random_graph(rng, n);
        REQUIRE(mad_exact(g).value < Rational(3));
        REQUIRE(max_degree(g) <= 17);
        ListAssignment la = uniform_lists(g.n, 19);
        ColorResult res = color(g, la, KParameter(17), Mode::TwoDistance);
        check_trace_replay(g, res, Mode::TwoDistance, la);
        check_constraint_bounds(res, 17, Mode::TwoDistance);
        colored++;
    }
    CHECK(colored == 60);
}

TEST_CASE("guarantee with scrambled non-uniform lists") {
    std::mt19937 rng(8002);
    for (int it = 0; it < 25; ++it) {
        int n = 8 + static_cast<int>(rng() % 25);
        Graph g = sparse_random_graph(rng, n);
        ListAssignment la;
        la.lists.resize(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> pool(60);
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            la.lists[v].assign(pool.begin(), pool.begin() + 19);
        }
        ColorResult res = color(g, la, KParameter(17), Mode::TwoDistance);
        CHECK(check_coloring(g, res.coloring, &la, Mode::TwoDistance).ok);
        check_trace_replay(g, res, Mode::TwoDistance, la);
    }
}

TEST_CASE("injective mode colors with one fewer color") {
    std::mt19937 rng(8003);
    for (int it = 0; it < 40; ++it) {
        int n = 8 + static_cast<int>(rng() % 30);
        Graph g = sparse_random_graph(rng, n);
        ListAssignment la = uniform_lists(g.n, 18);  // one fewer than two-distance
        ColorResult res = color(g, la, KParameter(17), Mode::Injective);
        CHECK(check_coloring(g, res.coloring, &la, Mode::Injective).ok);
        check_trace_replay(g, res, Mode::Injective, la);
        // Every extension either touched an already-colored neighbor or the
        // vertex was isolated at its level.
        for (const TraceStep& s : res.trace.steps)
            for (const ExtensionEntry& e : s.extensions)
                CHECK((e.had_colored_neighbor || e.degree_at_level == 0));
    }

    // Two adjacent vertices can share their single color injectively.
    Graph k2 = build_graph(2, {{0, 1}});
    ColorResult res = color(k2, uniform_lists(2, 18), KParameter(17), Mode::Injective);
    CHECK(check_coloring(k2, res.coloring, nullptr, Mode::Injective).ok);
}

TEST_CASE("extension driver applies a single claim in place") {
    // The theta gadget again, but driven by hand: color everything except
    // the pattern's vertices with the engine, then apply one extension.
    Builder b;
    int u = b.vertex(), f = b.vertex();
    int m = b.filler(u, f);
    b.filler(u, f);
    b.filler(u, f);
    Graph g = b.graph();
    ListAssignment la = uniform_lists(g.n, 19);

    auto m3 = detect(g, KParameter(17), ConfigKind::C3);
    REQUIRE(!m3.empty());
    ConfigurationMatch match = m3.front();
    REQUIRE(match.role("v") == m);

    // Color the graph without the middle, by the engine itself.
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (v != m) keep.push_back(v);
    Graph rest = induced_subgraph(g, keep);
    ColorResult base = color(rest, uniform_lists(rest.n, 19), KParameter(17),
                             Mode::TwoDistance);
    PartialColoring pc(g.n);
    for (size_t i = 0; i < keep.size(); ++i) pc[keep[i]] = base.coloring.color[i];

    TraceStep step = apply_extension(g, la, Mode::TwoDistance, match, pc);
    CHECK(step.discolored == std::vector<int>{u});
    for (int v = 0; v < g.n; ++v) REQUIRE(pc[v].has_value());
    Coloring full;
    for (int v = 0; v < g.n; ++v) full.color.push_back(*pc[v]);
    CHECK(check_coloring(g, full, &la, Mode::TwoDistance).ok);
}

TEST_CASE("deterministic output") {
    std::mt19937 rng(8004);
    Graph g = sparse_random_graph(rng, 30);
    ListAssignment la = uniform_lists(g.n, 19);
    ColorResult a = color(g, la, KParameter(17), Mode::TwoDistance);
    ColorResult b = color(g, la, KParameter(17), Mode::TwoDistance);
    CHECK(a.coloring.color == b.coloring.color);
    REQUIRE(a.trace.steps.size() == b.trace.steps.size());
    for (size_t i = 0; i < a.trace.steps.size(); ++i) {
        CHECK(a.trace.steps[i].deleted_vertices == b.trace.steps[i].deleted_vertices);
        CHECK(a.trace.steps[i].extensions.size() == b.trace.steps[i].extensions.size());
    }
}
