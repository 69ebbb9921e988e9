#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sqcolor/graph.hpp"

namespace sqc {

// Edge-list text format:
//   p <n> <m>
//   e <u> <v>        (m lines, 0-based endpoints)
// `#` starts a comment that runs to end of line; blank lines are ignored.
// Throws BadInput on malformed input (and LoopEdge / VertexOutOfRange via
// graph construction).
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::string& path);

// Canonical serialization: edges sorted lexicographically with u < v, so
// output files re-parse to an identical graph.
std::string format_edge_list(const Graph& g);
void save_edge_list(const Graph& g, const std::string& path);

// Lists file: JSON object mapping vertex id (as a string key) to an array of
// integer color ids. Every vertex 0..n-1 must be present; each list is
// returned sorted with duplicates removed. Throws BadInput on malformed or
// incomplete input.
std::vector<std::vector<int>> parse_lists(const std::string& text, int n);
std::vector<std::vector<int>> load_lists(const std::string& path, int n);
std::string format_lists(const std::vector<std::vector<int>>& lists);

// Coloring: JSON array, one color id per vertex.
std::vector<int> parse_coloring(const std::string& text);
std::vector<int> load_coloring(const std::string& path);
std::string format_coloring(const std::vector<int>& coloring);

// Whole-file read/write helpers (throw BadInput on I/O failure).
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sqc
