#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

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
#include "sqcolor/rational.hpp"

namespace py = pybind11;
using namespace sqc;

namespace {

py::object to_fraction(const Rational& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str());
}

Mode mode_from(const std::string& name) {
    if (name == "2distance") return Mode::TwoDistance;
    if (name == "injective") return Mode::Injective;
    throw py::value_error("mode must be '2distance' or 'injective'");
}

ConfigKind config_kind_from(const std::string& name) {
    for (ConfigKind kind :
         {ConfigKind::C1, ConfigKind::C2, ConfigKind::C3, ConfigKind::C4, ConfigKind::C5,
          ConfigKind::C6, ConfigKind::C7, ConfigKind::C8, ConfigKind::C9, ConfigKind::C10,
          ConfigKind::C11, ConfigKind::Structural}) {
        if (config_kind_name(kind) == name) return kind;
    }
    throw py::value_error("unknown configuration kind: " + name);
}

GadgetKind gadget_kind_from(const std::string& name) {
    for (GadgetKind kind :
         {GadgetKind::WeakVertex, GadgetKind::S1, GadgetKind::S2, GadgetKind::S3,
          GadgetKind::Lock, GadgetKind::C1, GadgetKind::C2, GadgetKind::C3, GadgetKind::C4,
          GadgetKind::C5, GadgetKind::C6, GadgetKind::C7, GadgetKind::C8, GadgetKind::C9,
          GadgetKind::C10, GadgetKind::C11, GadgetKind::HubTree}) {
        if (gadget_kind_name(kind) == name) return kind;
    }
    throw py::value_error("unknown gadget kind: " + name);
}

const char* support_name(SupportType t) {
    switch (t) {
        case SupportType::S1: return "S1";
        case SupportType::S2: return "S2";
        case SupportType::S3: return "S3";
        case SupportType::None: break;
    }
    return "";
}

const char* negative_name(NegativeType t) {
    switch (t) {
        case NegativeType::N1: return "N1";
        case NegativeType::N2: return "N2";
        case NegativeType::N3: return "N3";
        case NegativeType::None: break;
    }
    return "";
}

KParameter pick_k(const Graph& g, int k) { return k > 0 ? KParameter(k) : default_k(g); }

py::dict match_to_dict(const ConfigurationMatch& m) {
    py::dict d;
    d["kind"] = config_kind_name(m.kind);
    py::dict roles;
    for (const auto& [name, v] : m.roles) roles[py::str(name)] = v;
    d["roles"] = roles;
    if (m.kind == ConfigKind::Structural) {
        d["block_vertices"] = m.block_vertices;
        d["support_set"] = m.support_set;
    }
    if (m.x_type != SupportType::None) d["x_type"] = support_name(m.x_type);
    return d;
}

py::dict mad_to_dict(const MadCertificate& cert) {
    py::dict d;
    d["value"] = to_fraction(cert.value);
    d["witness"] = cert.witness;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "2-distance and injective list coloring toolkit for sparse graphs";

    py::register_exception<Error>(m, "Error");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return build_graph(n, edges);
             }),
             py::arg("n"), py::arg("edges"),
             "Simple undirected graph on vertices 0..n-1.")
        .def_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("neighbors", [](const Graph& g, int v) { return g.adj.at(v); }, py::arg("v"))
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n) + ", m=" + std::to_string(g.edge_count()) +
                   ")";
        });

    m.def("parse_edge_list",
          static_cast<Graph (*)(const std::string&)>(&parse_edge_list), py::arg("text"),
          "Parses the 'p n m' / 'e u v' edge-list format.");
    m.def("format_edge_list", &format_edge_list, py::arg("graph"),
          "Canonical edge-list serialization (sorted edges).");

    m.def("square", &square, py::arg("graph"),
          "Same vertices, an edge between every pair at distance 1 or 2.");
    m.def("girth", &girth, py::arg("graph"),
          "Length of a shortest cycle, or None for a forest.");
    m.def("max_degree", &max_degree, py::arg("graph"));
    m.def("average_degree",
          [](const Graph& g) { return to_fraction(average_degree(g)); }, py::arg("graph"));
    m.def("mad_exact", [](const Graph& g) { return mad_to_dict(mad_exact(g)); },
          py::arg("graph"),
          "Exact maximum average degree with an attaining vertex set.");
    m.def("mad_bruteforce", [](const Graph& g) { return mad_to_dict(mad_bruteforce(g)); },
          py::arg("graph"), "Subset-enumeration oracle for mad (n <= 28).");
    m.def("euler_check", &euler_check, py::arg("graph"),
          "The planar bound (mad - 2)(girth - 2) < 4, checked exactly.");

    m.def("chi2_exact", &chi2_exact, py::arg("graph"),
          "Exact 2-distance chromatic number (n <= 14).");
    m.def("list_color_exact",
          [](const Graph& g, const std::vector<std::vector<int>>& lists,
             const std::string& mode) { return list_color_exact(g, lists, mode_from(mode)); },
          py::arg("graph"), py::arg("lists"), py::arg("mode") = "2distance",
          "Exhaustive list coloring (n <= 14); None when infeasible.");

    m.def("classify", [](const Graph& g) {
        VertexClassification cls = classify_vertices(g);
        py::dict d;
        py::list weak, positive, locked, locks;
        py::dict supports, negatives;
        for (int v = 0; v < g.n; ++v) {
            if (cls.weak[v]) weak.append(v);
            if (cls.positive[v]) positive.append(v);
            if (cls.locked[v]) locked.append(v);
            if (cls.is_support(v)) supports[py::int_(v)] = support_name(cls.support[v]);
            if (cls.is_negative(v)) negatives[py::int_(v)] = negative_name(cls.negative[v]);
        }
        for (const Lock& lk : cls.locks) {
            py::dict ld;
            ld["u"] = lk.u;
            ld["x"] = lk.x;
            ld["v1"] = lk.v1;
            ld["v2"] = lk.v2;
            ld["w1"] = lk.w1;
            ld["w2"] = lk.w2;
            ld["middles"] = std::vector<int>(lk.middles.begin(), lk.middles.end());
            locks.append(ld);
        }
        d["weak"] = weak;
        d["supports"] = supports;
        d["positive"] = positive;
        d["negative"] = negatives;
        d["locked"] = locked;
        d["locks"] = locks;
        return d;
    }, py::arg("graph"), "Per-vertex taxonomy: weak, supports, positive, negative, locks.");

    m.def("detect",
          [](const Graph& g, const std::string& kind, int k) {
              py::list out;
              for (const auto& match : detect(g, pick_k(g, k), config_kind_from(kind))) {
                  out.append(match_to_dict(match));
              }
              return out;
          },
          py::arg("graph"), py::arg("kind"), py::arg("k") = 0,
          "All matches of one configuration kind, canonically ordered.");
    m.def("detect_any",
          [](const Graph& g, int k) -> py::object {
              auto match = detect_any(g, pick_k(g, k));
              if (!match) return py::none();
              return match_to_dict(*match);
          },
          py::arg("graph"), py::arg("k") = 0,
          "First configuration in priority order, or None.");

    m.def("discharge", [](const Graph& g, int k) {
        KParameter kp = pick_k(g, k);
        VertexClassification cls = classify_vertices(g);
        ChargeState cs = apply_rules(g, cls, kp);
        DischargeReport rep = verify_min_charge(cs);
        py::dict d;
        py::list charges, deficient, bounds;
        for (const Rational& c : cs.charge) charges.append(to_fraction(c));
        for (const auto& [v, c] : rep.deficient) {
            deficient.append(py::make_tuple(v, to_fraction(c)));
        }
        for (const ComponentBound& b : pot_component_check(support_graph(g, cls), cls)) {
            py::dict bd;
            bd["vertices"] = b.vertices;
            bd["n"] = b.n;
            bd["p"] = b.p;
            bd["holds"] = b.holds;
            bounds.append(bd);
        }
        d["charges"] = charges;
        d["pot"] = to_fraction(cs.pot);
        d["deficient"] = deficient;
        d["component_bounds"] = bounds;
        d["rule_applications"] = static_cast<long long>(cs.ledger.size());
        return d;
    }, py::arg("graph"), py::arg("k") = 0,
       "Runs the transfer rules and reports final charges, pot, and bounds.");

    m.def("color",
          [](const Graph& g, std::vector<std::vector<int>> lists, int k,
             const std::string& mode) {
              ListAssignment la{std::move(lists)};
              ColorResult res = color(g, la, pick_k(g, k), mode_from(mode));
              py::dict d;
              d["coloring"] = res.coloring.color;
              py::list steps;
              int fallbacks = 0;
              for (const TraceStep& s : res.trace.steps) {
                  py::dict sd;
                  sd["kind"] = config_kind_name(s.match.kind);
                  sd["deleted_vertices"] = s.deleted_vertices;
                  sd["deleted_edges"] = s.deleted_edges;
                  sd["discolored"] = s.discolored;
                  sd["used_fallback"] = s.used_fallback;
                  steps.append(sd);
                  fallbacks += s.used_fallback;
              }
              d["steps"] = steps;
              d["fallback_steps"] = fallbacks;
              return d;
          },
          py::arg("graph"), py::arg("lists"), py::arg("k") = 0, py::arg("mode") = "2distance",
          "Full pipeline: reduce, then extend the coloring back over every removed piece.");

    m.def("check_coloring",
          [](const Graph& g, const std::vector<int>& coloring, py::object lists,
             const std::string& mode) {
              Coloring c{coloring};
              ListAssignment la;
              const ListAssignment* lap = nullptr;
              if (!lists.is_none()) {
                  la.lists = lists.cast<std::vector<std::vector<int>>>();
                  lap = &la;
              }
              CheckResult res = check_coloring(g, c, lap, mode_from(mode));
              py::dict d;
              d["ok"] = res.ok;
              py::list violations;
              for (const ColoringViolation& v : res.violations) {
                  py::dict vd;
                  vd["kind"] = v.kind;
                  vd["u"] = v.u;
                  vd["v"] = v.v;
                  violations.append(vd);
              }
              d["violations"] = violations;
              return d;
          },
          py::arg("graph"), py::arg("coloring"), py::arg("lists") = py::none(),
          py::arg("mode") = "2distance",
          "Validates a complete coloring; with lists, also checks membership.");

    m.def("brooks_list_color",
          [](const Graph& g, const std::vector<std::vector<int>>& lists) {
              return brooks_list_color(g, lists).color;
          },
          py::arg("graph"), py::arg("lists"),
          "Proper list coloring with degree-sized lists (2-connected, not a "
          "clique, not an odd cycle).");

    m.def("gen_sparse",
          [](int n, int delta, std::uint64_t seed, const std::string& mad_bound) {
              GenSpec spec;
              spec.n = n;
              spec.delta = delta;
              spec.seed = seed;
              spec.mad_bound = Rational::parse(mad_bound);
              return gen_sparse(spec);
          },
          py::arg("n") = 40, py::arg("delta") = 17, py::arg("seed") = 1,
          py::arg("mad_bound") = "3",
          "Random connected graph with the exact max degree and certified "
          "mad below the bound.");

    m.def("gen_gadget",
          [](const std::string& kind, int k, const std::map<std::string, int>& degrees) {
              GadgetParams params;
              params.k = k;
              params.degrees = degrees;
              Gadget gadget = gen_gadget(gadget_kind_from(kind), params);
              py::dict d;
              d["graph"] = gadget.graph;
              py::dict roles;
              for (const auto& [name, v] : gadget.roles) roles[py::str(name)] = v;
              d["roles"] = roles;
              return d;
          },
          py::arg("kind"), py::arg("k") = 17,
          py::arg("degrees") = std::map<std::string, int>{},
          "Canonical occurrence of a named pattern with a role map.");
}
