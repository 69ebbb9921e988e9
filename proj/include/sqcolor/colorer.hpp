#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sqcolor/config.hpp"
#include "sqcolor/graph.hpp"
#include "sqcolor/mode.hpp"

namespace sqc {

// Per-vertex allowed colors. color() requires at least k+2 distinct entries
// per vertex in two-distance mode and k+1 in injective mode.
struct ListAssignment {
    std::vector<std::vector<int>> lists;
};

// Every vertex gets the list {0, 1, ..., size-1}.
ListAssignment uniform_lists(int n, int size);

using PartialColoring = std::vector<std::optional<int>>;

struct Coloring {
    std::vector<int> color;
};

// One assignment made while undoing a reduction: the vertex, its color, the
// number of distinct forbidden colors at that moment, whether some neighbor
// was already colored, and the vertex degree in the graph of that step.
struct ExtensionEntry {
    int vertex;
    int color;
    int constraint_count;
    bool had_colored_neighbor;
    int degree_at_level;
};

// A reduction step: the pattern that justified it, what was removed from the
// graph (vertices and/or edges, in original ids), which surviving vertices
// had their colors revoked before re-extension, and the assignments replayed
// when the step was undone. used_fallback marks steps finished by the
// exhaustive safety net instead of the scripted order.
struct TraceStep {
    ConfigurationMatch match;
    std::vector<int> deleted_vertices;
    std::vector<std::pair<int, int>> deleted_edges;
    std::vector<int> discolored;
    std::vector<ExtensionEntry> extensions;
    bool used_fallback = false;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
};

struct ColorResult {
    Coloring coloring;
    ReductionTrace trace;
};

// Colors already unavailable to v: colors of colored vertices within the
// mode's conflict range of v.
std::set<int> constraints(const Graph& g, const PartialColoring& pc, int v, Mode mode);

// True when u and v may not share a color in the given mode (adjacent or
// sharing a common neighbor for two-distance; common neighbor only for
// injective).
bool color_conflicting(const Graph& g, int u, int v, Mode mode);

// The full pipeline: repeatedly detect a reducible pattern, shrink the graph,
// then extend the coloring of the residue back over every removed piece.
// Throws BadK (max degree above k), BadInput (wrong list count / short
// lists), NoReducibleConfiguration (no pattern in some residual subgraph),
// ExtensionFailure (internal bound breach; never on mad < 3 inputs).
ColorResult color(const Graph& g, const ListAssignment& la, KParameter k, Mode mode);

// Same with k = max(17, max degree).
ColorResult color(const Graph& g, const ListAssignment& la, Mode mode);

// Applies one matched pattern's scripted extension on `level` in place:
// derives the pattern's removed/revoked vertex sets, clears their colors in
// pc, and colors them in the claim's order (falling back to the bounded
// search if the script cannot finish). Every other vertex of `level` must
// already be colored. Returns the recorded step.
TraceStep apply_extension(const Graph& level, const ListAssignment& la, Mode mode,
                          const ConfigurationMatch& m, PartialColoring& pc);

// Proper list coloring of a 2-connected graph that is neither a clique nor
// an odd cycle, where every list has at least deg(v) colors. Throws
// PreconditionViolated otherwise.
Coloring brooks_list_color(const Graph& s, const std::vector<std::vector<int>>& lists);

struct ColoringViolation {
    // "conflict" (u, v colored alike within range), "off-list" (u colored
    // outside its list, v = -1), or "uncolored" (u has no color, v = -1).
    std::string kind;
    int u;
    int v;
};

struct CheckResult {
    bool ok;
    std::vector<ColoringViolation> violations;
};

// Validates a complete coloring for the mode; when lists are supplied, also
// checks membership.
CheckResult check_coloring(const Graph& g, const Coloring& c, const ListAssignment* la,
                           Mode mode);

}  // namespace sqc
