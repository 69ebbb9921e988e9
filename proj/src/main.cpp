#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqcolor/classify.hpp"
#include "sqcolor/colorer.hpp"
#include "sqcolor/config.hpp"
#include "sqcolor/density.hpp"
#include "sqcolor/discharge.hpp"
#include "sqcolor/errors.hpp"
#include "sqcolor/gen.hpp"
#include "sqcolor/graph.hpp"
#include "sqcolor/io.hpp"
#include "sqcolor/mode.hpp"
#include "sqcolor/oracle.hpp"

using nlohmann::json;
using namespace sqc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseIo = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitIrreducible = 3;
constexpr int kExitVerification = 4;

// Failures while reading or parsing inputs (files, env) map to exit 1;
// the same exception types thrown later by operations map to exit 2.
struct InputError {
    std::string message;
};

template <class F>
auto loading(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::exception& e) {
        throw InputError{e.what()};
    }
}

std::string support_name(SupportType t) {
    switch (t) {
        case SupportType::None: return "none";
        case SupportType::S1: return "S1";
        case SupportType::S2: return "S2";
        case SupportType::S3: return "S3";
    }
    return "?";
}

std::string negative_name(NegativeType t) {
    switch (t) {
        case NegativeType::None: return "none";
        case NegativeType::N1: return "N1";
        case NegativeType::N2: return "N2";
        case NegativeType::N3: return "N3";
    }
    return "?";
}

Mode parse_mode(const std::string& name) {
    if (name == "2distance") return Mode::TwoDistance;
    if (name == "injective") return Mode::Injective;
    throw BadInput("unknown mode: " + name);
}

json edges_json(const std::vector<std::pair<int, int>>& es) {
    json out = json::array();
    for (auto [u, v] : es) out.push_back(json::array({u, v}));
    return out;
}

json match_json(const ConfigurationMatch& m) {
    json j;
    j["kind"] = config_kind_name(m.kind);
    if (!m.roles.empty()) {
        json roles = json::object();
        for (const auto& [name, v] : m.roles) roles[name] = v;
        j["roles"] = roles;
    }
    if (m.kind == ConfigKind::Structural) {
        j["block_vertices"] = m.block_vertices;
        j["support_set"] = m.support_set;
    }
    if (m.x_type != SupportType::None) j["x_type"] = support_name(m.x_type);
    return j;
}

json trace_json(const ReductionTrace& trace) {
    json steps = json::array();
    for (const TraceStep& s : trace.steps) {
        json j;
        j["match"] = match_json(s.match);
        j["deleted_vertices"] = s.deleted_vertices;
        j["deleted_edges"] = edges_json(s.deleted_edges);
        j["discolored"] = s.discolored;
        json exts = json::array();
        for (const ExtensionEntry& e : s.extensions) {
            exts.push_back({{"vertex", e.vertex},
                            {"color", e.color},
                            {"constraint_count", e.constraint_count},
                            {"had_colored_neighbor", e.had_colored_neighbor},
                            {"degree_at_level", e.degree_at_level}});
        }
        j["extensions"] = exts;
        j["used_fallback"] = s.used_fallback;
        steps.push_back(std::move(j));
    }
    return steps;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

// Runs fn(i) for i in [0, count) on up to `jobs` threads; the first failing
// index's exception wins, so error behavior does not depend on scheduling.
void for_each_index(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Applies `process` to every input path (parallel with --jobs) and prints a
// single report for one path or a {"reports": [...]} envelope for several.
int run_per_file(const std::vector<std::string>& paths, int jobs,
                 const std::function<json(const Graph&)>& process) {
    std::vector<json> reports(paths.size());
    for_each_index(paths.size(), jobs, [&](std::size_t i) {
        Graph g = loading([&] { return load_edge_list(paths[i]); });
        json r = process(g);
        r["path"] = paths[i];
        reports[i] = std::move(r);
    });
    if (reports.size() == 1) {
        emit(reports.front());
    } else {
        emit(json{{"reports", reports}});
    }
    return kExitOk;
}

ListAssignment lists_for(const Graph& g, const std::string& lists_path, KParameter k, Mode mode) {
    if (!lists_path.empty()) {
        ListAssignment la;
        la.lists = loading([&] { return load_lists(lists_path, g.n); });
        return la;
    }
    int need = mode == Mode::TwoDistance ? k.k + 2 : k.k + 1;
    return uniform_lists(g.n, need);
}

struct GenOptions {
    std::string kind = "sparse";
    int n = 40;
    int delta = 17;
    std::uint64_t seed = 1;
    std::string mad_bound = "3";
    int k = 17;
    std::vector<std::string> degrees;
    std::string out;
    std::string roles_out;
};

GadgetKind parse_gadget_kind(const std::string& name) {
    static const GadgetKind all[] = {
        GadgetKind::WeakVertex, GadgetKind::S1, GadgetKind::S2,  GadgetKind::S3,
        GadgetKind::Lock,       GadgetKind::C1, GadgetKind::C2,  GadgetKind::C3,
        GadgetKind::C4,         GadgetKind::C5, GadgetKind::C6,  GadgetKind::C7,
        GadgetKind::C8,         GadgetKind::C9, GadgetKind::C10, GadgetKind::C11,
        GadgetKind::HubTree,
    };
    for (GadgetKind k : all)
        if (gadget_kind_name(k) == name) return k;
    throw BadInput("unknown gen kind: " + name);
}

int run_gen(const GenOptions& opt) {
    std::uint64_t seed = opt.seed;
    if (const char* env = std::getenv("SQC_SEED")) {
        seed = loading([&] {
            std::size_t used = 0;
            std::uint64_t v = std::stoull(env, &used);
            if (used != std::string(env).size()) throw BadInput("SQC_SEED must be an integer");
            return v;
        });
    }
    json report;
    Graph g;
    if (opt.kind == "sparse") {
        GenSpec spec;
        spec.n = opt.n;
        spec.delta = opt.delta;
        spec.seed = seed;
        spec.mad_bound = loading([&] { return Rational::parse(opt.mad_bound); });
        g = gen_sparse(spec);
        report["kind"] = "sparse";
        report["seed"] = seed;
        report["delta"] = max_degree(g);
    } else {
        GadgetKind kind = loading([&] { return parse_gadget_kind(opt.kind); });
        GadgetParams params;
        params.k = opt.k;
        for (const std::string& spec : opt.degrees) {
            loading([&] {
                auto eq = spec.find('=');
                if (eq == std::string::npos)
                    throw BadInput("--degree expects role=value, got: " + spec);
                params.degrees[spec.substr(0, eq)] = std::stoi(spec.substr(eq + 1));
                return 0;
            });
        }
        Gadget gadget = gen_gadget(kind, params);
        g = gadget.graph;
        report["kind"] = gadget_kind_name(kind);
        report["k"] = params.k;
        json roles = json::object();
        for (const auto& [name, v] : gadget.roles) roles[name] = v;
        report["roles"] = roles;
        if (!opt.out.empty()) {
            std::string roles_path = opt.roles_out.empty() ? opt.out + ".roles.json"
                                                           : opt.roles_out;
            write_file(roles_path, roles.dump(2) + "\n");
            report["roles_path"] = roles_path;
        }
    }
    report["n"] = g.n;
    report["m"] = g.edge_count();
    report["max_degree"] = max_degree(g);
    report["mad"] = mad_exact(g).value.str();
    if (!opt.out.empty()) {
        save_edge_list(g, opt.out);
        report["path"] = opt.out;
    } else {
        report["edges"] = edges_json(g.edges());
    }
    emit(report);
    std::cerr << "generated " << report["kind"].get<std::string>() << ": n=" << g.n
              << " m=" << g.edge_count() << " mad=" << report["mad"].get<std::string>() << "\n";
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"2-distance and injective list coloring toolkit for sparse graphs"};
    app.require_subcommand(1);

    int jobs = 1;
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", jobs, "Parallel workers, one input file per task")
            ->check(CLI::PositiveNumber);
    };

    std::vector<std::string> graph_paths;
    std::string graph_path;
    std::string coloring_path;
    std::string lists_path;
    std::string out_path;
    std::string mode_name = "2distance";
    std::string kind_name;
    int k_value = 0;
    bool any_only = false;
    bool want_chi2 = false;

    CLI::App* mad = app.add_subcommand("mad", "Exact maximum average degree with witness");
    mad->add_option("graph", graph_paths, "Edge-list file(s)")->required();
    add_jobs(mad);

    CLI::App* girth_cmd = app.add_subcommand("girth", "Shortest cycle length");
    girth_cmd->add_option("graph", graph_paths, "Edge-list file(s)")->required();
    add_jobs(girth_cmd);

    CLI::App* square_cmd = app.add_subcommand("square", "Square of the graph");
    square_cmd->add_option("graph", graph_paths, "Edge-list file(s)")->required();
    square_cmd->add_option("-o,--out", out_path, "Write the square as an edge-list file");
    add_jobs(square_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Weak/support/positive/negative/lock taxonomy");
    classify_cmd->add_option("graph", graph_paths, "Edge-list file(s)")->required();
    add_jobs(classify_cmd);

    CLI::App* detect_cmd = app.add_subcommand("detect", "Reducible configuration matches");
    detect_cmd->add_option("graph", graph_paths, "Edge-list file(s)")->required();
    detect_cmd->add_option("--k", k_value, "Coloring parameter (default max(17, max degree))");
    detect_cmd->add_option("--kind", kind_name, "Restrict to one kind (C1..C11, Structural)");
    detect_cmd->add_flag("--any", any_only, "Report only the first match in priority order");
    add_jobs(detect_cmd);

    CLI::App* discharge_cmd = app.add_subcommand("discharge", "Charge transfer audit");
    discharge_cmd->add_option("graph", graph_paths, "Edge-list file(s)")->required();
    discharge_cmd->add_option("--k", k_value, "Coloring parameter");
    add_jobs(discharge_cmd);

    CLI::App* color_cmd = app.add_subcommand("color", "Constructive list coloring");
    color_cmd->add_option("graph", graph_path, "Edge-list file")->required();
    color_cmd->add_option("--k", k_value, "Coloring parameter");
    color_cmd->add_option("--mode", mode_name, "2distance or injective")
        ->check(CLI::IsMember({"2distance", "injective"}));
    color_cmd->add_option("--lists", lists_path, "Lists JSON (default: uniform of minimum size)");
    color_cmd->add_option("-o,--out", out_path, "Write the coloring JSON to this file");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Re-check a coloring file");
    verify_cmd->add_option("graph", graph_path, "Edge-list file")->required();
    verify_cmd->add_option("coloring", coloring_path, "Coloring JSON file")->required();
    verify_cmd->add_option("--mode", mode_name, "2distance or injective")
        ->check(CLI::IsMember({"2distance", "injective"}));
    verify_cmd->add_option("--lists", lists_path, "Also check list membership");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exhaustive oracles (small graphs)");
    oracle_cmd->add_option("graph", graph_path, "Edge-list file")->required();
    oracle_cmd->add_flag("--chi2", want_chi2, "Exact 2-distance chromatic number");
    oracle_cmd->add_option("--lists", lists_path, "Exact list-colorability for these lists");
    oracle_cmd->add_option("--mode", mode_name, "2distance or injective")
        ->check(CLI::IsMember({"2distance", "injective"}));

    GenOptions gen_opt;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Certified instances and gadgets");
    gen_cmd->add_option("--kind", gen_opt.kind,
                        "sparse or a gadget name (WeakVertex, S1..S3, Lock, C1..C11, HubTree)");
    gen_cmd->add_option("--n", gen_opt.n, "Target vertex count (sparse)");
    gen_cmd->add_option("--delta", gen_opt.delta, "Target maximum degree (sparse)");
    gen_cmd->add_option("--seed", gen_opt.seed, "PRNG seed (SQC_SEED env overrides)");
    gen_cmd->add_option("--mad-bound", gen_opt.mad_bound, "Density bound as num/den (sparse)");
    gen_cmd->add_option("--k", gen_opt.k, "Working parameter for gadget kinds");
    gen_cmd->add_option("--degree", gen_opt.degrees, "Gadget degree override role=value");
    gen_cmd->add_option("-o,--out", gen_opt.out, "Write the edge list here");
    gen_cmd->add_option("--roles-out", gen_opt.roles_out,
                        "Role map path (default: <out>.roles.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParseIo;
    }

    auto chosen_k = [&](const Graph& g) {
        return k_value > 0 ? KParameter(k_value) : default_k(g);
    };

    try {
        if (mad->parsed()) {
            return run_per_file(graph_paths, jobs, [](const Graph& g) {
                MadCertificate cert = mad_exact(g);
                json j;
                j["n"] = g.n;
                j["m"] = g.edge_count();
                j["average_degree"] = average_degree(g).str();
                j["mad"] = cert.value.str();
                j["witness"] = cert.witness;
                std::cerr << "mad " << cert.value.str() << " on " << g.n << " vertices\n";
                return j;
            });
        }
        if (girth_cmd->parsed()) {
            return run_per_file(graph_paths, jobs, [](const Graph& g) {
                auto len = girth(g);
                json j;
                j["girth"] = len ? json(*len) : json(nullptr);
                return j;
            });
        }
        if (square_cmd->parsed()) {
            if (!out_path.empty() && graph_paths.size() != 1)
                throw InputError{"--out requires exactly one input graph"};
            return run_per_file(graph_paths, jobs, [&](const Graph& g) {
                Graph sq = square(g);
                json j;
                j["n"] = sq.n;
                j["m"] = sq.edge_count();
                j["edges"] = edges_json(sq.edges());
                if (!out_path.empty()) {
                    save_edge_list(sq, out_path);
                    j["path_out"] = out_path;
                }
                return j;
            });
        }
        if (classify_cmd->parsed()) {
            return run_per_file(graph_paths, jobs, [](const Graph& g) {
                VertexClassification cls = classify_vertices(g);
                json j;
                json weak = json::array(), positive = json::array(), locked = json::array();
                json supports = {{"S1", json::array()},
                                 {"S2", json::array()},
                                 {"S3", json::array()}};
                json negatives = {{"N1", json::array()},
                                  {"N2", json::array()},
                                  {"N3", json::array()}};
                for (int v = 0; v < g.n; ++v) {
                    if (cls.weak[v]) weak.push_back(v);
                    if (cls.positive[v]) positive.push_back(v);
                    if (cls.locked[v]) locked.push_back(v);
                    if (cls.is_support(v)) supports[support_name(cls.support[v])].push_back(v);
                    if (cls.is_negative(v)) negatives[negative_name(cls.negative[v])].push_back(v);
                }
                j["weak"] = weak;
                j["supports"] = supports;
                j["positive"] = positive;
                j["negatives"] = negatives;
                j["locked"] = locked;
                json locks = json::array();
                for (const Lock& lk : cls.locks) {
                    locks.push_back({{"u", lk.u},
                                     {"x", lk.x},
                                     {"v1", lk.v1},
                                     {"v2", lk.v2},
                                     {"w1", lk.w1},
                                     {"w2", lk.w2},
                                     {"middles", lk.middles}});
                }
                j["locks"] = locks;
                json comps = json::array();
                Graph h = support_graph(g, cls);
                for (const ComponentReport& c : analyze_components(h, cls)) {
                    comps.push_back({{"vertices", c.vertices},
                                     {"is_lock", c.is_lock},
                                     {"is_cactus", c.is_cactus},
                                     {"cycle_support_counts", c.cycle_support_counts},
                                     {"negative_count", c.negative_count},
                                     {"positive_count", c.positive_count}});
                }
                j["components"] = comps;
                return j;
            });
        }
        if (detect_cmd->parsed()) {
            return run_per_file(graph_paths, jobs, [&](const Graph& g) {
                KParameter k = chosen_k(g);
                json j;
                j["k"] = k.k;
                json out = json::array();
                if (any_only) {
                    if (auto m = detect_any(g, k)) out.push_back(match_json(*m));
                } else if (!kind_name.empty()) {
                    const ConfigKind kinds[] = {
                        ConfigKind::C1, ConfigKind::C2,  ConfigKind::C3,  ConfigKind::C4,
                        ConfigKind::C5, ConfigKind::C6,  ConfigKind::C7,  ConfigKind::C8,
                        ConfigKind::C9, ConfigKind::C10, ConfigKind::C11, ConfigKind::Structural};
                    bool found = false;
                    for (ConfigKind kind : kinds) {
                        if (config_kind_name(kind) != kind_name) continue;
                        found = true;
                        for (const auto& m : detect(g, k, kind)) out.push_back(match_json(m));
                    }
                    if (!found) throw BadInput("unknown configuration kind: " + kind_name);
                } else {
                    const ConfigKind kinds[] = {
                        ConfigKind::C1, ConfigKind::C2,  ConfigKind::C3,  ConfigKind::C4,
                        ConfigKind::C5, ConfigKind::C6,  ConfigKind::C7,  ConfigKind::C8,
                        ConfigKind::C9, ConfigKind::C10, ConfigKind::C11, ConfigKind::Structural};
                    for (ConfigKind kind : kinds)
                        for (const auto& m : detect(g, k, kind)) out.push_back(match_json(m));
                }
                j["matches"] = out;
                std::cerr << "detect: " << out.size() << " match(es)\n";
                return j;
            });
        }
        if (discharge_cmd->parsed()) {
            return run_per_file(graph_paths, jobs, [&](const Graph& g) {
                KParameter k = chosen_k(g);
                VertexClassification cls = classify_vertices(g);
                ChargeState cs = apply_rules(g, cls, k);
                DischargeReport report = verify_min_charge(cs);
                Graph h = support_graph(g, cls);
                report.component_bounds = pot_component_check(h, cls);
                json j;
                j["k"] = k.k;
                json charges = json::array();
                for (const Rational& c : cs.charge) charges.push_back(c.str());
                j["charges"] = charges;
                j["pot"] = report.pot_value.str();
                json deficient = json::array();
                for (const auto& [v, c] : report.deficient)
                    deficient.push_back({{"vertex", v}, {"charge", c.str()}});
                j["deficient"] = deficient;
                json bounds = json::array();
                for (const ComponentBound& b : report.component_bounds) {
                    bounds.push_back({{"vertices", b.vertices},
                                      {"n", b.n},
                                      {"p", b.p},
                                      {"holds", b.holds}});
                }
                j["component_bounds"] = bounds;
                j["ledger_entries"] = cs.ledger.size();
                std::cerr << "discharge: pot " << report.pot_value.str() << ", "
                          << report.deficient.size() << " deficient vertices\n";
                return j;
            });
        }
        if (color_cmd->parsed()) {
            Graph g = loading([&] { return load_edge_list(graph_path); });
            Mode mode = parse_mode(mode_name);
            KParameter k = chosen_k(g);
            ListAssignment la = lists_for(g, lists_path, k, mode);
            ColorResult res = color(g, la, k, mode);
            json j;
            j["k"] = k.k;
            j["mode"] = mode_name;
            j["coloring"] = res.coloring.color;
            j["steps"] = res.trace.steps.size();
            j["trace"] = trace_json(res.trace);
            if (!out_path.empty()) {
                write_file(out_path, format_coloring(res.coloring.color));
                j["path_out"] = out_path;
            }
            emit(j);
            std::cerr << "colored " << g.n << " vertices in " << res.trace.steps.size()
                      << " steps\n";
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            Graph g = loading([&] { return load_edge_list(graph_path); });
            Mode mode = parse_mode(mode_name);
            Coloring c;
            c.color = loading([&] { return load_coloring(coloring_path); });
            ListAssignment la;
            const ListAssignment* lap = nullptr;
            if (!lists_path.empty()) {
                la.lists = loading([&] { return load_lists(lists_path, g.n); });
                lap = &la;
            }
            CheckResult res = check_coloring(g, c, lap, mode);
            json j;
            j["ok"] = res.ok;
            json violations = json::array();
            for (const ColoringViolation& v : res.violations)
                violations.push_back({{"kind", v.kind}, {"u", v.u}, {"v", v.v}});
            j["violations"] = violations;
            emit(j);
            std::cerr << (res.ok ? "coloring ok\n" : "coloring INVALID\n");
            return res.ok ? kExitOk : kExitVerification;
        }
        if (oracle_cmd->parsed()) {
            Graph g = loading([&] { return load_edge_list(graph_path); });
            json j;
            if (want_chi2 || lists_path.empty()) j["chi2"] = chi2_exact(g);
            if (!lists_path.empty()) {
                auto lists = loading([&] { return load_lists(lists_path, g.n); });
                auto got = list_color_exact(g, lists, parse_mode(mode_name));
                j["colorable"] = got.has_value();
                if (got) j["coloring"] = *got;
            }
            emit(j);
            return kExitOk;
        }
        if (gen_cmd->parsed()) {
            return run_gen(gen_opt);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitParseIo;
    } catch (const NoReducibleConfiguration& e) {
        json j;
        j["error"] = "no_reducible_configuration";
        j["residual_vertices"] = e.residual_vertices;
        emit(j);
        std::cerr << "error: " << e.what() << "\n";
        return kExitIrreducible;
    } catch (const ExtensionFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const BadK& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const BadParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const Unsatisfiable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
