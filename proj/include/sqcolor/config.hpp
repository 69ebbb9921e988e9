#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqcolor/classify.hpp"
#include "sqcolor/graph.hpp"

namespace sqc {

enum class ConfigKind {
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
    Structural,
};

std::string config_kind_name(ConfigKind kind);

// The k parameter of the coloring problem: at least 17, and at least the
// maximum degree of any graph it is used with.
struct KParameter {
    int k;

    explicit KParameter(int value);  // throws BadK when value < 17
};

// Convenience: max(17, max_degree(g)).
KParameter default_k(const Graph& g);

// Throws BadK when k.k < max_degree(g).
void validate_k(const Graph& g, KParameter k);

// A bound occurrence of a configuration. `roles` lists (name, vertex) pairs
// in the kind's fixed role order; matches of one kind compare and sort by
// their role vertex tuple. Structural matches use block_vertices/support_set
// instead of roles.
struct ConfigurationMatch {
    ConfigKind kind;
    std::vector<std::pair<std::string, int>> roles;

    // Structural only: the offending 2-connected block and its supports.
    std::vector<int> block_vertices;
    std::vector<int> support_set;

    // C11 only: the support type of the role-x vertex (drives the deletion
    // set A and the extension's case analysis).
    SupportType x_type = SupportType::None;

    // Vertex bound to a role name; throws BadInput when absent.
    int role(const std::string& name) const;
    bool has_role(const std::string& name) const;
    std::vector<int> role_ids() const;
};

// All matches of one kind, canonically ordered. Symmetric role groups are
// canonicalized (for example C5's two link middles satisfy v < w); every
// distinct remaining binding is its own match. Throws BadK as validate_k.
std::vector<ConfigurationMatch> detect(const Graph& g, KParameter k, ConfigKind kind);

// First match in priority order C1 < C2 < ... < C11 < Structural; within a
// kind, the lexicographically least role binding. std::nullopt iff the graph
// contains no configuration at all.
std::optional<ConfigurationMatch> detect_any(const Graph& g, KParameter k);

// The structural reducible: a block of h = support_graph(g, cls) on >= 3
// vertices that is neither a cycle carrying an odd number of support
// vertices nor contained in a lock. Returns the least such block.
std::optional<ConfigurationMatch> detect_structural(const Graph& g,
                                                    const VertexClassification& cls,
                                                    const Graph& h, KParameter k);

// Independently re-checks every degree, adjacency, and link predicate of a
// match against g. Used by tests and the reduction engine's debug checks.
bool revalidate_match(const Graph& g, KParameter k, const ConfigurationMatch& m);

}  // namespace sqc
