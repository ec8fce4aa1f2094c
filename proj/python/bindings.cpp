#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "defco/approximation.hpp"
#include "defco/errors.hpp"
#include "defco/exact_dp.hpp"
#include "defco/gadgets.hpp"
#include "defco/io.hpp"
#include "defco/oracle.hpp"
#include "defco/structural.hpp"

namespace py = pybind11;
using namespace defco;

namespace {

using Colors = std::optional<std::vector<int>>;

// indices coming from python are checked here, the C++ accessors do not
int vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.num_vertices())
        throw py::index_error("vertex " + std::to_string(v) + " out of range");
    return v;
}

Colors unwrap(const std::optional<Coloring>& c) {
    if (!c)
        return std::nullopt;
    return c->color;
}

EliminationStrategy strategy_of(const std::string& s) {
    if (s == "min-degree")
        return EliminationStrategy::min_degree;
    if (s == "min-fill")
        return EliminationStrategy::min_fill;
    throw PreconditionError("strategy must be min-degree or min-fill");
}

TreeDecomposition decomposition_for(const Graph& g, const std::string& strategy) {
    return heuristic_decomposition(g, strategy_of(strategy));
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unsupported";
    }
}

py::dict structural_dict(const StructuralResult& r) {
    py::dict d;
    d["verdict"] = verdict_name(r.verdict);
    d["coloring"] = unwrap(r.coloring);
    d["route"] = r.route;
    d["parameter_set"] = r.parameter_set;
    return d;
}

} // namespace

PYBIND11_MODULE(_defco, m) {
    m.doc() = "defective coloring: exact DP, approximations, structural solvers, gadgets";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_edges",
                    [](int n, const std::vector<std::pair<int, int>>& edges) {
                        return Graph::from_edges(n, edges);
                    },
                    py::arg("n"), py::arg("edges"))
        .def("add_vertex", &Graph::add_vertex, py::arg("role") = "")
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def("degree", [](const Graph& g, int v) { return g.degree(vertex(g, v)); })
        .def("neighbors", [](const Graph& g, int v) {
            auto nb = g.neighbors(vertex(g, v));
            return std::vector<int>(nb.begin(), nb.end());
        })
        .def("role", [](const Graph& g, int v) { return g.role(vertex(g, v)); })
        .def("edges", &Graph::edges)
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("read_dimacs", &read_dimacs_file, py::arg("path"));
    m.def("write_dimacs", &write_dimacs_file, py::arg("path"), py::arg("graph"));

    m.def("verify",
          [](const Graph& g, const std::vector<int>& colors, int num_colors, int deficiency) {
              VerificationReport r = verify(g, Coloring{colors}, num_colors, deficiency);
              py::dict d;
              d["valid"] = r.valid;
              d["max_deficiency"] = r.max_deficiency;
              d["violating"] = r.violating_vertices;
              return d;
          },
          py::arg("graph"), py::arg("colors"), py::arg("num_colors"), py::arg("deficiency"));
    m.def("deficiency_profile",
          [](const Graph& g, const std::vector<int>& colors) { return deficiency_profile(g, Coloring{colors}); },
          py::arg("graph"), py::arg("colors"));
    m.def("degeneracy", &degeneracy, py::arg("graph"));

    m.def("treewidth_upper_bound",
          [](const Graph& g, const std::string& strategy) { return decomposition_for(g, strategy).width(); },
          py::arg("graph"), py::arg("strategy") = "min-fill");
    m.def("decompose",
          [](const Graph& g, const std::string& strategy, bool balanced) {
              TreeDecomposition td = decomposition_for(g, strategy);
              if (balanced)
                  td = balance(g, td);
              py::dict d;
              d["bags"] = td.bags;
              d["parent"] = td.parent;
              d["root"] = td.root;
              d["width"] = td.width();
              d["height"] = td.height();
              return d;
          },
          py::arg("graph"), py::arg("strategy") = "min-fill", py::arg("balanced") = false);

    m.def("solve_exact",
          [](const Graph& g, int num_colors, int deficiency, const std::string& strategy, int threads) {
              py::gil_scoped_release release;
              NiceDecomposition nice = make_nice(g, decomposition_for(g, strategy));
              return unwrap(solve_exact(g, nice, num_colors, deficiency, DpOptions{threads}));
          },
          py::arg("graph"), py::arg("num_colors"), py::arg("deficiency"),
          py::arg("strategy") = "min-fill", py::arg("threads") = 1);

    m.def("solve_approx",
          [](const Graph& g, int num_colors, int deficiency, double epsilon, const std::string& strategy) {
              ApproxOutcome out;
              {
                  py::gil_scoped_release release;
                  out = solve_approx_deficiency(g, decomposition_for(g, strategy), num_colors, deficiency, epsilon);
              }
              py::dict d;
              d["coloring"] = unwrap(out.coloring);
              d["budget"] = out.budget;
              d["delta"] = out.delta;
              d["balanced_height"] = out.balanced_height;
              d["balanced_width"] = out.balanced_width;
              return d;
          },
          py::arg("graph"), py::arg("num_colors"), py::arg("deficiency"), py::arg("epsilon"),
          py::arg("strategy") = "min-fill");

    m.def("solve_double_colors",
          [](const Graph& g, int num_colors, int deficiency, const std::string& strategy) {
              py::gil_scoped_release release;
              return unwrap(solve_double_colors(g, decomposition_for(g, strategy), num_colors, deficiency).coloring);
          },
          py::arg("graph"), py::arg("num_colors"), py::arg("deficiency"), py::arg("strategy") = "min-fill");

    m.def("halve", [](const Graph& g) { return halve_local_search(g).coloring.color; }, py::arg("graph"));

    m.def("solve_by_fvs",
          [](const Graph& g, int num_colors, int deficiency, std::optional<std::vector<int>> fvs) {
              return structural_dict(solve_by_fvs(g, num_colors, deficiency, fvs));
          },
          py::arg("graph"), py::arg("num_colors"), py::arg("deficiency"), py::arg("fvs") = py::none());
    m.def("solve_by_vc",
          [](const Graph& g, int num_colors, int deficiency, std::optional<std::vector<int>> vc) {
              return structural_dict(solve_by_vc(g, num_colors, deficiency, vc));
          },
          py::arg("graph"), py::arg("num_colors"), py::arg("deficiency"), py::arg("vc") = py::none());
    m.def("approx_plus_one",
          [](const Graph& g, int num_colors, int deficiency) {
              return structural_dict(approx_plus_one_fvs(g, num_colors, deficiency));
          },
          py::arg("graph"), py::arg("num_colors"), py::arg("deficiency"));

    m.def("brute_force",
          [](const Graph& g, int num_colors, int deficiency) {
              return unwrap(brute_force_decide(g, num_colors, deficiency));
          },
          py::arg("graph"), py::arg("num_colors"), py::arg("deficiency"));
    m.def("min_deficiency", [](const Graph& g, int k) { return min_deficiency(g, k); },
          py::arg("graph"), py::arg("num_colors"));
    m.def("min_colors", [](const Graph& g, int d) { return min_colors(g, d); },
          py::arg("graph"), py::arg("deficiency"));

    m.def("tower", [](int i, int j) { return build_tower(i, j).graph; }, py::arg("i"), py::arg("j"));

    py::class_<MccInstance>(m, "MccInstance")
        .def_readonly("graph", &MccInstance::graph)
        .def_readonly("k", &MccInstance::k)
        .def_readonly("n", &MccInstance::n)
        .def_readonly("planted", &MccInstance::planted)
        .def("verify_clique", [](const MccInstance& mcc, const std::vector<int>& c) { return verify_clique(mcc, c); });
    m.def("random_mcc", &random_mcc, py::arg("k"), py::arg("n"), py::arg("p"), py::arg("seed"),
          py::arg("plant") = true);

    py::class_<GeneratedInstance>(m, "HardnessInstance")
        .def_property_readonly("graph", [](const GeneratedInstance& g) { return g.instance.graph; })
        .def_property_readonly("num_colors", [](const GeneratedInstance& g) { return g.instance.num_colors; })
        .def_property_readonly("deficiency", [](const GeneratedInstance& g) { return g.instance.deficiency; })
        .def_property_readonly("construction", [](const GeneratedInstance& g) { return to_string(g.construction); })
        .def_readonly("certificate", &GeneratedInstance::certificate)
        .def("witness", [](const GeneratedInstance& g, const std::vector<int>& clique) {
            return witness_coloring(g, clique).color;
        }, py::arg("clique"));
    m.def("build_hardness",
          [](const MccInstance& mcc, int num_colors, const std::string& construction, std::int64_t cap) {
              return build_hardness(mcc, num_colors, construction_from_string(construction), cap);
          },
          py::arg("mcc"), py::arg("num_colors"), py::arg("construction") = "td",
          py::arg("cap") = kDefaultVertexCap);
}
