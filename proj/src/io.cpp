#include "sqcolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "sqcolor/errors.hpp"

namespace sqc {

namespace {

int parse_int(const std::string& token, const std::string& what) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw BadInput("expected integer for " + what + ", got '" + token + "'");
    }
    if (pos != token.size()) {
        throw BadInput("expected integer for " + what + ", got '" + token + "'");
    }
    return value;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    bool have_header = false;
    int n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no);
        if (!have_header) {
            if (tokens[0] != "p" || tokens.size() != 3) {
                throw BadInput(where + ": expected header 'p <n> <m>'");
            }
            n = parse_int(tokens[1], "vertex count");
            m = parse_int(tokens[2], "edge count");
            if (n < 0 || m < 0) {
                throw BadInput(where + ": negative count in header");
            }
            have_header = true;
            continue;
        }
        if (tokens[0] != "e" || tokens.size() != 3) {
            throw BadInput(where + ": expected edge line 'e <u> <v>'");
        }
        if (static_cast<int>(edges.size()) >= m) {
            throw BadInput(where + ": more than " + std::to_string(m) +
                           " edge lines");
        }
        int u = parse_int(tokens[1], "edge endpoint");
        int v = parse_int(tokens[2], "edge endpoint");
        edges.emplace_back(u, v);
    }
    if (!have_header) {
        throw BadInput("missing header line 'p <n> <m>'");
    }
    if (static_cast<int>(edges.size()) != m) {
        throw BadInput("header announced " + std::to_string(m) + " edges, found " +
                       std::to_string(edges.size()));
    }
    return build_graph(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw BadInput("cannot open '" + path + "'");
    }
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    auto edges = g.edges();
    std::ostringstream out;
    out << "p " << g.n << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) {
        out << "e " << u << ' ' << v << '\n';
    }
    return out.str();
}

void save_edge_list(const Graph& g, const std::string& path) {
    write_file(path, format_edge_list(g));
}

std::vector<std::vector<int>> parse_lists(const std::string& text, int n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("lists file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw BadInput("lists file must be a JSON object of vertex -> colors");
    }
    std::vector<std::vector<int>> lists(n);
    std::vector<bool> seen(n, false);
    for (auto& [key, value] : j.items()) {
        int v = parse_int(key, "lists key");
        if (v < 0 || v >= n) {
            throw BadInput("lists key " + key + " out of range for n = " +
                           std::to_string(n));
        }
        if (seen[v]) {
            throw BadInput("duplicate lists key " + key);
        }
        seen[v] = true;
        if (!value.is_array()) {
            throw BadInput("list for vertex " + key + " is not an array");
        }
        for (auto& c : value) {
            if (!c.is_number_integer()) {
                throw BadInput("non-integer color in list for vertex " + key);
            }
            lists[v].push_back(c.get<int>());
        }
        std::sort(lists[v].begin(), lists[v].end());
        lists[v].erase(std::unique(lists[v].begin(), lists[v].end()),
                       lists[v].end());
    }
    for (int v = 0; v < n; ++v) {
        if (!seen[v]) {
            throw BadInput("lists file missing vertex " + std::to_string(v));
        }
    }
    return lists;
}

std::vector<std::vector<int>> load_lists(const std::string& path, int n) {
    return parse_lists(read_file(path), n);
}

std::string format_lists(const std::vector<std::vector<int>>& lists) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (size_t v = 0; v < lists.size(); ++v) {
        j[std::to_string(v)] = lists[v];
    }
    return j.dump();
}

std::vector<int> parse_coloring(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("coloring file is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) {
        throw BadInput("coloring file must be a JSON array");
    }
    std::vector<int> coloring;
    for (auto& c : j) {
        if (!c.is_number_integer()) {
            throw BadInput("non-integer entry in coloring array");
        }
        coloring.push_back(c.get<int>());
    }
    return coloring;
}

std::vector<int> load_coloring(const std::string& path) {
    return parse_coloring(read_file(path));
}

std::string format_coloring(const std::vector<int>& coloring) {
    nlohmann::json j = coloring;
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw BadInput("cannot open '" + path + "'");
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw BadInput("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw BadInput("failed writing '" + path + "'");
    }
}

}  // namespace sqc
