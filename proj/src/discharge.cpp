#include "sqcolor/discharge.hpp"

#include <algorithm>

namespace sqc {

namespace {

void transfer(ChargeState& cs, const std::string& rule, int giver, int receiver,
              const Rational& amount) {
    if (giver >= 0)
        cs.charge[giver] = cs.charge[giver] - amount;
    else
        cs.pot = cs.pot - amount;
    if (receiver >= 0)
        cs.charge[receiver] = cs.charge[receiver] + amount;
    else
        cs.pot = cs.pot + amount;
    cs.ledger.push_back({rule, giver, receiver, amount});
}

}  // namespace

ChargeState initial_charges(const Graph& g) {
    ChargeState cs;
    cs.charge.reserve(g.n);
    for (int v = 0; v < g.n; ++v) cs.charge.emplace_back(g.degree(v));
    cs.pot = Rational(0);
    return cs;
}

ChargeState apply_rules(const Graph& g, const VertexClassification& cls, KParameter /*k*/) {
    ChargeState cs = initial_charges(g);
    const Rational r25(2, 5), r35(3, 5), r12(1, 2), r38(3, 8), r15(1, 5), r110(1, 10),
        r58(5, 8), r45(4, 5);

    // R1: degree 3..7 vertices pay into their 1-link middles.
    for (int x = 0; x < g.n; ++x) {
        if (g.degree(x) < 3 || g.degree(x) > 7) continue;
        for (const Link& ln : one_links(g, x)) {
            int a = ln.inner.front(), y = ln.y;
            int dy = g.degree(y);
            if (dy <= 7) {
                if (cls.weak[x])
                    transfer(cs, "R1.1", x, a, r25);
                else if (cls.weak[y])
                    transfer(cs, "R1.2", x, a, r35);
                else
                    transfer(cs, "R1.3", x, a, r12);
            } else if (dy <= 14) {
                transfer(cs, "R1.4", x, a, r38);
            } else if (!cls.is_negative(a)) {
                transfer(cs, "R1.5", x, a, r15);
            }
        }
    }

    // R2: degree 3..7 vertices pay their qualifying degree-3 neighbors.
    for (int x = 0; x < g.n; ++x) {
        if (g.degree(x) < 3 || g.degree(x) > 7) continue;
        for (int u : g.adj[x]) {
            if (g.degree(u) != 3) continue;
            int p = -1, q = -1;
            for (int t : g.adj[u]) {
                if (t == x) continue;
                (p == -1 ? p : q) = t;
            }
            bool ok = (g.degree(p) == 2 && g.degree(q) <= 7) ||
                      (g.degree(q) == 2 && g.degree(p) <= 7);
            if (ok) transfer(cs, "R2", x, u, r110);
        }
    }

    // R3 / R4: medium and high degree vertices pay every neighbor.
    for (int x = 0; x < g.n; ++x) {
        if (g.degree(x) >= 8 && g.degree(x) <= 14)
            for (int a : g.adj[x]) transfer(cs, "R3", x, a, r58);
    }
    for (int x = 0; x < g.n; ++x) {
        if (g.degree(x) >= 15)
            for (int a : g.adj[x]) transfer(cs, "R4", x, a, r45);
    }

    // Rg: positives pay the pot, negatives draw from it.
    for (int v = 0; v < g.n; ++v)
        if (cls.positive[v]) transfer(cs, "Rg", v, -1, r25);
    for (int v = 0; v < g.n; ++v)
        if (cls.is_negative(v)) transfer(cs, "Rg", -1, v, r15);

    return cs;
}

DischargeReport verify_min_charge(const ChargeState& cs) {
    DischargeReport rep;
    rep.pot_value = cs.pot;
    const Rational three(3);
    for (int v = 0; v < static_cast<int>(cs.charge.size()); ++v)
        if (cs.charge[v] < three) rep.deficient.emplace_back(v, cs.charge[v]);
    return rep;
}

std::vector<ComponentBound> pot_component_check(const Graph& h, const VertexClassification& cls) {
    std::vector<ComponentBound> out;
    for (const ComponentReport& comp : analyze_components(h, cls)) {
        ComponentBound b;
        b.vertices = comp.vertices;
        b.n = comp.negative_count;
        b.p = comp.positive_count;
        b.holds = b.p >= (b.n + 1) / 2;
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace sqc
