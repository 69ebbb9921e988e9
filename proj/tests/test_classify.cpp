#include "sqcolor/classify.hpp"

#include <random>

#include "doctest.h"
#include "util.hpp"

using namespace sqc;
using namespace sqc::testing;

namespace {

struct Builder {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int vertex() { return n++; }
    void edge(int u, int v) { edges.emplace_back(u, v); }
    // Raise deg(v) by `count` with fresh pendant leaves.
    void pendants(int v, int count) {
        for (int i = 0; i < count; ++i) {
            edge(v, vertex());
        }
    }
    Graph graph() const { return build_graph(n, edges); }
};

}  // namespace

TEST_CASE("S1 supports on a path") {
    auto cls = classify_vertices(path_graph(4));
    CHECK(cls.support[0] == SupportType::None);
    CHECK(cls.support[1] == SupportType::S1);
    CHECK(cls.support[2] == SupportType::S1);
    CHECK(cls.support[3] == SupportType::None);
    CHECK(cls.negative[1] == NegativeType::N1);
    CHECK(cls.negative[2] == NegativeType::N1);
    for (int v = 0; v < 4; ++v) {
        CHECK_FALSE(cls.weak[v]);
        CHECK_FALSE(cls.positive[v]);
        CHECK_FALSE(cls.locked[v]);
    }
    CHECK(cls.locks.empty());
}

TEST_CASE("weak vertex via two links") {
    Builder b;
    int x = b.vertex(), third = b.vertex();
    int m1 = b.vertex(), y1 = b.vertex();
    int m2 = b.vertex(), y2 = b.vertex();
    b.edge(x, third);
    b.edge(x, m1);
    b.edge(m1, y1);
    b.edge(x, m2);
    b.edge(m2, y2);
    auto cls = classify_vertices(b.graph());
    CHECK(cls.weak[x]);
    CHECK_FALSE(cls.weak[third]);

    // Raising one far end above 14 kills the second link's contribution.
    Builder c;
    x = c.vertex();
    third = c.vertex();
    m1 = c.vertex();
    y1 = c.vertex();
    m2 = c.vertex();
    y2 = c.vertex();
    c.edge(x, third);
    c.edge(x, m1);
    c.edge(m1, y1);
    c.edge(x, m2);
    c.edge(m2, y2);
    c.pendants(y2, 15);
    auto cls2 = classify_vertices(c.graph());
    CHECK_FALSE(cls2.weak[x]);
}

TEST_CASE("weak vertex twice linked to the same far vertex") {
    Builder b;
    int x = b.vertex(), third = b.vertex();
    int m1 = b.vertex(), m2 = b.vertex(), y = b.vertex();
    b.edge(x, third);
    b.edge(x, m1);
    b.edge(m1, y);
    b.edge(x, m2);
    b.edge(m2, y);
    auto cls = classify_vertices(b.graph());
    CHECK(cls.weak[x]);
}

TEST_CASE("S2 support, both orientations") {
    // u - x - a - c - d with b hanging off a.
    Builder bld;
    int u = bld.vertex(), x = bld.vertex(), a = bld.vertex();
    int c = bld.vertex(), d = bld.vertex(), b = bld.vertex();
    bld.edge(u, x);
    bld.edge(x, a);
    bld.edge(a, c);
    bld.edge(c, d);
    bld.edge(a, b);
    auto cls = classify_vertices(bld.graph());
    CHECK(cls.support[x] == SupportType::S2);
    CHECK(cls.negative[x] == NegativeType::N2);
    // c sees the symmetric pattern: a's other neighbors are x (degree 2) and
    // b (degree 1 <= 7).
    CHECK(cls.support[c] == SupportType::S2);

    // With b too heavy, the qualifying assignment dies for both x and c:
    // each pairs the other (degree 2) with b, which now exceeds 7.
    Builder heavy;
    u = heavy.vertex();
    x = heavy.vertex();
    a = heavy.vertex();
    c = heavy.vertex();
    d = heavy.vertex();
    b = heavy.vertex();
    heavy.edge(u, x);
    heavy.edge(x, a);
    heavy.edge(a, c);
    heavy.edge(c, d);
    heavy.edge(a, b);
    heavy.pendants(b, 8);
    heavy.pendants(d, 8);  // keep c's other side from making c an S1
    auto cls2 = classify_vertices(heavy.graph());
    CHECK(cls2.support[x] == SupportType::None);
    CHECK(cls2.support[c] == SupportType::None);

    // S1 beats S2 when both apply: make x also adjacent to a degree-2 vertex.
    Builder both;
    u = both.vertex();
    x = both.vertex();
    a = both.vertex();
    c = both.vertex();
    d = both.vertex();
    b = both.vertex();
    both.edge(u, x);
    both.edge(x, a);
    both.edge(a, c);
    both.edge(c, d);
    both.edge(a, b);
    both.pendants(u, 1);  // u now degree 2
    auto cls3 = classify_vertices(both.graph());
    CHECK(cls3.support[x] == SupportType::S1);
    CHECK(cls3.negative[x] == NegativeType::N1);
    // c stays S2: its witnesses x (degree 2) and b (degree 1) are intact,
    // and its own neighbors d (degree 1) and a (degree 3) rule out S1.
    CHECK(cls3.support[c] == SupportType::S2);
}

TEST_CASE("S3 supports and N3 middles") {
    // Two weak vertices x and y joined by the link x - c - y; each keeps a
    // second link to a light far vertex.
    Builder bld;
    int u = bld.vertex(), x = bld.vertex(), c = bld.vertex(), y = bld.vertex();
    int e = bld.vertex();
    int a = bld.vertex(), b = bld.vertex();  // x's second link
    int f = bld.vertex(), g = bld.vertex();  // y's second link
    bld.edge(u, x);
    bld.edge(x, c);
    bld.edge(c, y);
    bld.edge(y, e);
    bld.edge(x, a);
    bld.edge(a, b);
    bld.edge(y, f);
    bld.edge(f, g);

    SUBCASE("light outer anchors make the middle an S2 support instead") {
        auto cls = classify_vertices(bld.graph());
        CHECK(cls.weak[x]);
        CHECK(cls.weak[y]);
        CHECK(cls.support[x] == SupportType::S3);
        CHECK(cls.support[y] == SupportType::S3);
        // c is adjacent to the degree-3 vertex x whose other neighbors are u
        // (degree 1 <= 7) and a (degree 2), so S2 wins over N3.
        CHECK(cls.support[c] == SupportType::S2);
        CHECK(cls.negative[c] == NegativeType::N2);
    }

    SUBCASE("heavy outer anchors leave a pure N3 middle") {
        bld.pendants(u, 8);
        bld.pendants(e, 8);
        auto cls = classify_vertices(bld.graph());
        CHECK(cls.weak[x]);
        CHECK(cls.weak[y]);
        CHECK(cls.support[x] == SupportType::S3);
        CHECK(cls.support[y] == SupportType::S3);
        CHECK(cls.support[c] == SupportType::None);
        CHECK(cls.negative[c] == NegativeType::N3);
        // S3 supports are never negative.
        CHECK(cls.negative[x] == NegativeType::None);
        CHECK(cls.negative[y] == NegativeType::None);
        // u now has degree >= 4 and the support neighbor x.
        CHECK(cls.positive[u]);
        CHECK_FALSE(cls.positive[g + 1]);  // one of u's pendant leaves
    }
}

namespace {

// The ten-vertex lock pattern; u and x are padded to degree 2 + extra.
Builder lock_builder(int extra_u, int extra_x) {
    Builder b;
    int u = b.vertex(), v1 = b.vertex(), v2 = b.vertex();
    int w1 = b.vertex(), w2 = b.vertex(), x = b.vertex();
    int m11 = b.vertex(), m12 = b.vertex(), m21 = b.vertex(), m22 = b.vertex();
    b.edge(u, v1);
    b.edge(u, v2);
    b.edge(v1, m11);
    b.edge(m11, w1);
    b.edge(v1, m12);
    b.edge(m12, w2);
    b.edge(v2, m21);
    b.edge(m21, w1);
    b.edge(v2, m22);
    b.edge(m22, w2);
    b.edge(w1, x);
    b.edge(w2, x);
    b.pendants(u, extra_u);
    b.pendants(x, extra_x);
    return b;
}

}  // namespace

TEST_CASE("lock detection and roles") {
    Builder b = lock_builder(6, 6);
    Graph g = b.graph();
    auto cls = classify_vertices(g);

    // v1, v2, w1, w2 are S3 supports; every vertex in a lock's v/w role is.
    for (int v : {1, 2, 3, 4}) {
        CHECK(cls.weak[v]);
        CHECK(cls.support[v] == SupportType::S3);
    }
    // The four middles are N3 negatives.
    for (int m : {6, 7, 8, 9}) {
        CHECK(cls.negative[m] == NegativeType::N3);
        CHECK(cls.support[m] == SupportType::None);
    }
    // Endpoints: locked, and positive thanks to degree 8.
    CHECK(cls.locked[0]);
    CHECK(cls.locked[5]);
    CHECK(cls.positive[0]);
    CHECK(cls.positive[5]);

    REQUIRE(cls.locks.size() == 1);
    const Lock& lock = cls.locks[0];
    CHECK(lock.u == 0);
    CHECK(lock.x == 5);
    CHECK(lock.v1 == 1);
    CHECK(lock.v2 == 2);
    CHECK(lock.w1 == 3);
    CHECK(lock.w2 == 4);
    CHECK(lock.middles == std::array<int, 4>{6, 7, 8, 9});
    CHECK(lock.vertex_set() == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(lock.edge_set().size() == 12);
}

TEST_CASE("support graph and lock component") {
    Builder b = lock_builder(6, 6);
    Graph g = b.graph();
    auto cls = classify_vertices(g);
    Graph h = support_graph(g, cls);

    // Exactly the twelve lock edges are incident to supports; the pendant
    // padding is not.
    CHECK(h.edge_count() == 12);

    auto reports = analyze_components(h, cls);
    REQUIRE(reports.size() == 1);
    const auto& r = reports[0];
    CHECK(r.vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(r.is_lock);
    CHECK_FALSE(r.is_cactus);
    CHECK(r.negative_count == 4);
    CHECK(r.positive_count == 2);
}

TEST_CASE("a lock with an extra internal edge is not a lock component") {
    Builder b = lock_builder(6, 6);
    b.edge(0, 5);  // chord between the endpoints
    Graph g = b.graph();
    auto cls = classify_vertices(g);
    // The ten-vertex pattern is still present...
    CHECK(cls.locks.size() == 1);
    Graph h = support_graph(g, cls);
    auto reports = analyze_components(h, cls);
    // ...but the u-x edge is not incident to any support, so H(G) is
    // unchanged and the component still matches the lock exactly.
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].is_lock);

    // An extra u-w1 edge bumps w1 to degree 4, dissolving the pattern itself.
    Builder c = lock_builder(6, 6);
    c.edge(0, 3);
    Graph g2 = c.graph();
    auto cls2 = classify_vertices(g2);
    CHECK(cls2.locks.empty());
    Graph h2 = support_graph(g2, cls2);
    auto reports2 = analyze_components(h2, cls2);
    REQUIRE(reports2.size() == 1);
    CHECK_FALSE(reports2[0].is_lock);
}

TEST_CASE("a bare lock contains rotated copies of itself") {
    // With both endpoints of degree 2, the endpoints become link middles for
    // the inner vertices, and two rotated ten-vertex patterns appear with
    // pairs of middles as their endpoints. Padding the endpoints (as the
    // other tests do) suppresses this.
    Builder b = lock_builder(0, 0);
    auto cls = classify_vertices(b.graph());
    REQUIRE(cls.locks.size() == 3);
    CHECK(cls.locks[0].u == 0);
    CHECK(cls.locks[0].x == 5);
    CHECK(cls.locks[1].u == 6);
    CHECK(cls.locks[1].x == 9);
    CHECK(cls.locks[2].u == 7);
    CHECK(cls.locks[2].x == 8);
    for (int v : {0, 5, 6, 7, 8, 9}) {
        CHECK(cls.locked[v]);
    }
}

TEST_CASE("degenerate lock candidates are rejected") {
    // The only common neighbor of w1 and w2 coincides with u: no lock.
    Builder c;
    int u = c.vertex(), v1 = c.vertex(), v2 = c.vertex();
    int w1 = c.vertex(), w2 = c.vertex();
    int m11 = c.vertex(), m12 = c.vertex(), m21 = c.vertex(), m22 = c.vertex();
    c.edge(u, v1);
    c.edge(u, v2);
    c.edge(v1, m11);
    c.edge(m11, w1);
    c.edge(v1, m12);
    c.edge(m12, w2);
    c.edge(v2, m21);
    c.edge(m21, w1);
    c.edge(v2, m22);
    c.edge(m22, w2);
    c.edge(w1, u);
    c.edge(w2, u);
    auto cls = classify_vertices(c.graph());
    CHECK(cls.locks.empty());
}

TEST_CASE("cactus recognition") {
    // Two triangles sharing one vertex: a cactus.
    Graph bowtie = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto cls = classify_vertices(bowtie);
    // Force H = whole graph by faking every vertex as support for this
    // structural check: instead classify normally and analyze the graph
    // itself as if it were H.
    auto reports = analyze_components(bowtie, cls);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].is_cactus);
    CHECK(reports[0].cycle_support_counts.size() == 2);

    // Two cycles sharing an edge: not a cactus.
    Graph theta = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
    auto reports2 = analyze_components(theta, classify_vertices(theta));
    REQUIRE(reports2.size() == 1);
    CHECK_FALSE(reports2[0].is_cactus);
    CHECK(reports2[0].cycle_support_counts.empty());

    // A path is a cactus with no cycles.
    auto reports3 = analyze_components(path_graph(5), classify_vertices(path_graph(5)));
    REQUIRE(reports3.size() == 1);
    CHECK(reports3[0].is_cactus);
    CHECK(reports3[0].cycle_support_counts.empty());
}

TEST_CASE("support graph and component counts on a plain path") {
    Graph p4 = path_graph(4);
    auto cls = classify_vertices(p4);
    Graph h = support_graph(p4, cls);
    CHECK(h.edge_count() == 3);  // every edge touches one of the two supports
    auto reports = analyze_components(h, cls);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].negative_count == 2);
    CHECK(reports[0].positive_count == 0);
    CHECK(reports[0].is_cactus);
    CHECK_FALSE(reports[0].is_lock);
}

TEST_CASE("graphs without supports have an empty support graph") {
    CHECK(support_graph(complete_graph(5), classify_vertices(complete_graph(5)))
              .edge_count() == 0);
    auto reports = analyze_components(
        support_graph(complete_graph(5), classify_vertices(complete_graph(5))),
        classify_vertices(complete_graph(5)));
    CHECK(reports.empty());
}

TEST_CASE("classification invariants on random graphs") {
    std::mt19937 rng(5001);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 14, trial % 2 == 0 ? 0.12 : 0.25);
        auto cls = classify_vertices(g);
        Graph h = support_graph(g, cls);
        for (int v = 0; v < g.n; ++v) {
            if (cls.weak[v]) {
                CHECK(g.degree(v) == 3);
            }
            if (cls.support[v] == SupportType::S1 ||
                cls.support[v] == SupportType::S2) {
                CHECK(g.degree(v) == 2);
            }
            if (cls.support[v] == SupportType::S3) {
                CHECK(g.degree(v) == 3);
                CHECK(cls.weak[v]);
            }
            if (cls.positive[v]) {
                CHECK(g.degree(v) >= 4);
            }
            CHECK((cls.negative[v] == NegativeType::N1) ==
                  (cls.support[v] == SupportType::S1));
            CHECK((cls.negative[v] == NegativeType::N2) ==
                  (cls.support[v] == SupportType::S2));
            if (cls.negative[v] == NegativeType::N3) {
                CHECK(g.degree(v) == 2);
                for (int t : g.adj[v]) {
                    CHECK(cls.support[t] == SupportType::S3);
                }
            }
            // Every edge at a support vertex is in H.
            if (cls.is_support(v)) {
                CHECK(h.adj[v] == g.adj[v]);
            }
        }
        // N3 vertices have both neighbors in the same H-component (their own).
        auto reports = analyze_components(h, cls);
        std::vector<int> comp_of(g.n, -1);
        for (size_t i = 0; i < reports.size(); ++i) {
            for (int v : reports[i].vertices) {
                comp_of[v] = static_cast<int>(i);
            }
        }
        for (int v = 0; v < g.n; ++v) {
            if (cls.negative[v] == NegativeType::N3) {
                CHECK(comp_of[g.adj[v][0]] == comp_of[g.adj[v][1]]);
                CHECK(comp_of[g.adj[v][0]] >= 0);
            }
        }
        // Locks: all v/w roles are S3 supports and all ten vertices distinct.
        for (const Lock& lock : cls.locks) {
            for (int v : {lock.v1, lock.v2, lock.w1, lock.w2}) {
                CHECK(g.degree(v) == 3);
            }
            auto vs = lock.vertex_set();
            CHECK(std::adjacent_find(vs.begin(), vs.end()) == vs.end());
            for (auto [a, bb] : lock.edge_set()) {
                CHECK(g.has_edge(a, bb));
            }
        }
    }
}
