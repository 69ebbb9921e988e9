#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqc {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input graph construction: an edge (v, v).
struct LoopEdge : Error {
    using Error::Error;
};

// Input graph construction: an endpoint outside [0, n).
struct VertexOutOfRange : Error {
    using Error::Error;
};

// A k parameter that is below 17 or below the maximum degree of the graph it
// is used with.
struct BadK : Error {
    using Error::Error;
};

// A request that violates a documented precondition (lists too small, malformed
// coloring, mode mismatch, ...).
struct BadInput : Error {
    using Error::Error;
};

// Exhaustive oracle asked to run on an instance above its size guard.
struct TooLarge : Error {
    using Error::Error;
};

// Gadget constructor given degrees outside the pattern's admissible range.
struct BadParams : Error {
    using Error::Error;
};

// Generator could not satisfy the requested parameters.
struct Unsatisfiable : Error {
    using Error::Error;
};

// brooks_list_color called on a graph that is a clique, an odd cycle, not
// 2-connected, or with a list shorter than a degree.
struct PreconditionViolated : Error {
    using Error::Error;
};

// The reduction engine found no configuration to reduce. Carries the vertex
// ids (in the original graph) of the irreducible residual subgraph. Outside
// the guaranteed domain (mad < 3, max degree <= k) this is a legitimate
// outcome, not a bug.
struct NoReducibleConfiguration : Error {
    std::vector<int> residual_vertices;

    explicit NoReducibleConfiguration(std::vector<int> vertices)
        : Error("no reducible configuration in residual subgraph of " +
                std::to_string(vertices.size()) + " vertices"),
          residual_vertices(std::move(vertices)) {}
};

// An internal invariant of the extension procedure was breached (a claim's
// constraint bound exceeded, or no color available where one is guaranteed).
// Must never occur; any throw of this is a bug.
struct ExtensionFailure : Error {
    using Error::Error;
};

}  // namespace sqc
