#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sqcolor/graph.hpp"
#include "sqcolor/rational.hpp"

namespace sqc {

// Named patterns with fixed constructors. Each maps to a documented
// vertex-role layout; see gen_gadget.
enum class GadgetKind {
    WeakVertex,
    S1,
    S2,
    S3,
    Lock,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    HubTree,
};

std::string gadget_kind_name(GadgetKind kind);

// Free degrees for a gadget. `k` is the working parameter (>= 17): roles
// whose degree the pattern ties to k (C11's u, the lock endpoints, the S1
// far ends, the hub) default to it. `degrees` overrides the degree of any
// padded role by name; each constructor validates overrides against the
// pattern's admissible range and throws BadParams outside it.
struct GadgetParams {
    int k = 17;
    std::map<std::string, int> degrees;
};

struct Gadget {
    Graph graph;
    std::map<std::string, int> roles;
};

// Builds the named pattern. Degrees above a role's structural minimum are
// realized by attaching pendant leaves (depth-1 pendant trees); consumers
// that must avoid degree-one vertices pad with their own structure instead.
// The returned role map re-validates against classify/detect: for C-kinds
// the kind's detector reports the mapped vertices as its first match; for
// the classifier kinds the named vertices carry the advertised class.
//
// Layouts and free degrees (role: default, admissible range):
//   C1        pendant u on v (v: k, >= 1)
//   C2        u deg-2 between w (k, >= 1) and the link u-v-x (x: k-1, <= k-1)
//   C3        u deg-3: link u-v-y (y: k-1, <= k-1), others w (7) + x (9),
//             sum <= k-1
//   C4        edge u-v of deg-3 vertices; u others w (7) + x (9) sum <= k-1;
//             v others y deg-2 (far f: 1, >= 1) and z (7, <= 7)
//   C5        u deg-3: links u-v-y, u-w-z (y, z: 14, <= 14), third x (k-1,
//             <= k-1)
//   C6        u deg-4: link u-v-z (z: 14, <= 14), w (7, <= 7), x, y (3, <= 3)
//   C7        u deg-4: links u-v-z, u-w-t (z, t: 14, <= 14), others x (7) +
//             y (9) sum <= k-1
//   C8        u deg-5: link u-v-t (t: 7, <= 7), w (7, <= 7), second middle z
//             (far s: 8, >= 1), x, y (3, <= 3)
//   C9        u deg-6: link u-v-s (s: 7, <= 7), w (7, <= 7), middles z, t
//             (fars fz, ft: 8, >= 1), x, y (3, <= 3)
//   C10       u deg-7: v (7, <= 7) and six links u-wi-ti (ti: 3, <= 3)
//   C11       u deg-k; deg-3 v, w each linked to the shared deg-3 y (third
//             neighbor t: 1, >= 1) and to y1 / y2 (14, <= 14); support x is
//             an S1 pair x-a with far b (1, >= 1)
//   WeakVertex x deg-3 on u (k, >= 1) with links x-m1-f1, x-m2-f2 (f1, f2:
//             14, <= 14); x classifies weak, no support type
//   S1        path u-x-a-b (u, b: k, >= 1); x, a classify S1
//   S2        u-x-a with a's others b (7, <= 7) and the link a-c-d (d: 8,
//             >= 1); u (k, >= 4); x, c classify S2
//   S3        u-x with links x-v-y, x-w-g and y's links y-v-x, y-z-f; u (k,
//             >= 8), g, f (14, <= 14), y's third neighbor t (8, >= 8); x, y
//             classify S3 and the shared middle v classifies N3
//   Lock      ten-vertex core u, x, v1, v2, w1, w2 + four middles; u, x (k,
//             >= 8); classify yields the lock, four S3 supports and four N3
//             negatives
//   HubTree   hub of degree k whose children each get degree `child` (3,
//             >= 1); acyclic
Gadget gen_gadget(GadgetKind kind, const GadgetParams& params = {});

struct GenSpec {
    int n = 40;
    int delta = 17;
    std::uint64_t seed = 1;
    Rational mad_bound = Rational(3);
};

// Random graph with maximum degree exactly spec.delta and mad_exact
// certified < spec.mad_bound. Construction: a hub star plus a random
// attachment tree, then random extra edges each kept only when the
// certificate still holds. Deterministic per seed. Throws Unsatisfiable
// when delta < 17, n < delta + 1, or the bound rejects even the tree.
Graph gen_sparse(const GenSpec& spec);

}  // namespace sqc
