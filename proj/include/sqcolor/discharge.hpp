#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sqcolor/classify.hpp"
#include "sqcolor/config.hpp"
#include "sqcolor/graph.hpp"
#include "sqcolor/rational.hpp"

namespace sqc {

// One charge transfer. Vertex id -1 stands for the common pot.
struct LedgerEntry {
    std::string rule;  // "R1.1".."R1.5", "R2", "R3", "R4", "Rg"
    int giver;
    int receiver;
    Rational amount;
};

struct ChargeState {
    std::vector<Rational> charge;  // per vertex
    Rational pot;
    std::vector<LedgerEntry> ledger;
};

struct ComponentBound {
    std::vector<int> vertices;  // one component of the support graph, sorted
    int n = 0;                  // negative vertices in it
    int p = 0;                  // positive vertices in it
    bool holds = false;         // p >= ceil(n / 2)
};

struct DischargeReport {
    std::vector<std::pair<int, Rational>> deficient;  // final charge < 3
    Rational pot_value;
    std::vector<ComponentBound> component_bounds;
};

// Every vertex starts with its degree; empty pot and ledger.
ChargeState initial_charges(const Graph& g);

// One pass of the transfer rules, evaluated on the original degrees and
// classification:
//   R1  (3 <= d(x) <= 7, link x-a-y): d(y) <= 7 -> 2/5 to a if x is weak
//       (R1.1), else 3/5 if y is weak (R1.2), else 1/2 (R1.3);
//       8 <= d(y) <= 14 -> 3/8 (R1.4); d(y) >= 15 -> 1/5 unless a is
//       negative (R1.5).
//   R2  (3 <= d(x) <= 7): 1/10 to each adjacent degree-3 vertex u whose two
//       other neighbors are one of degree 2 and one of degree <= 7.
//   R3  (8 <= d(x) <= 14): 5/8 to every neighbor.
//   R4  (d(x) >= 15): 4/5 to every neighbor.
//   Rg  each positive vertex pays 2/5 into the pot; each negative vertex
//       draws 1/5 from it.
ChargeState apply_rules(const Graph& g, const VertexClassification& cls, KParameter k);

// Vertices whose final charge dropped below 3, plus the pot value.
DischargeReport verify_min_charge(const ChargeState& cs);

// Per component of the support graph h: negative count n, positive count p,
// and whether p >= ceil(n / 2) (the bound that keeps the pot solvent).
std::vector<ComponentBound> pot_component_check(const Graph& h, const VertexClassification& cls);

}  // namespace sqc
