#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <tuple>

#include "steengraph/algebra.hpp"
#include "steengraph/connectivity.hpp"
#include "steengraph/hopf.hpp"
#include "steengraph/report.hpp"
#include "steengraph/structure.hpp"
#include "steengraph/verify.hpp"
#include "steengraph/wood_graph.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace steengraph;

namespace {

TruncationLevel level_of(int n) { return TruncationLevel::truncated(n); }

std::map<std::pair<int, int>, std::uint64_t> table_dict(const WalkCountTable& t) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& e : t.entries()) out[{e.p, e.q}] = e.value;
  return out;
}

std::vector<std::pair<int, int>> edge_list(const Monomial& x) {
  std::vector<std::pair<int, int>> out;
  const WoodGraph g = to_graph(x);
  for (const Edge& e : g.edges()) out.emplace_back(e.low, e.high);
  return out;
}

WoodGraph graph_from(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  for (const auto& [p, q] : edges) es.push_back({p, q});
  return WoodGraph(n, es);
}

std::optional<std::vector<int>> vertices(const std::optional<VertexSequence>& s) {
  if (!s) return std::nullopt;
  return s->vertices;
}

std::vector<std::vector<std::uint64_t>> matrix_rows(const AdjacencyMatrix& a) {
  std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(a.size()));
  for (int p = 0; p < a.size(); ++p) {
    for (int q = 0; q < a.size(); ++q) rows[static_cast<std::size_t>(p)].push_back(a(p, q));
  }
  return rows;
}

py::dict sweep_dict(const SweepReport& r) {
  py::dict d;
  d["theorem"] = std::string(claim_name(r.claim));
  d["n"] = r.n;
  d["cases"] = r.cases;
  d["discrepancies"] = r.discrepancies;
  d["witnesses"] = r.witnesses;
  d["finding_count"] = r.finding_count;
  d["findings"] = r.findings;
  d["note"] = r.note;
  d["passed"] = r.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wood graphs of the truncated mod-2 dual Steenrod algebras A*(n).";

  py::class_<Monomial>(m, "Monomial")
      .def(py::init([](const std::string& text, int n) { return parse_monomial(text, level_of(n)); }),
           py::arg("text"), py::arg("n"))
      .def(py::init([](const std::vector<Exponent>& exponents, int n) { return Monomial(level_of(n), exponents); }),
           py::arg("exponents"), py::arg("n"))
      .def_property_readonly("n", [](const Monomial& x) { return x.level().n(); })
      .def_property_readonly("exponents", &Monomial::exponents)
      .def("compact", &Monomial::to_compact_string)
      .def("__str__", &Monomial::to_string)
      .def("__repr__", [](const Monomial& x) {
        return "Monomial('" + x.to_string() + "', n=" + std::to_string(x.level().n()) + ")";
      })
      .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; })
      .def("__hash__", [](const Monomial& x) { return std::hash<Monomial>{}(x); });

  // algebra
  m.def("parse_monomial", [](const std::string& text, int n) { return parse_monomial(text, level_of(n)); },
        py::arg("text"), py::arg("n"));
  m.def("multiply", [](const Monomial& x, const Monomial& y) { return multiply(x, y).terms(); },
        "Product as a list of terms (empty when it vanishes).");
  m.def("edge_bit", &edge_bit, py::arg("x"), py::arg("p"), py::arg("q"));
  m.def("alpha", &alpha);
  m.def("divides_edgewise", &divides_edgewise, py::arg("d"), py::arg("x"));
  m.def("monomial_count", [](int n) { return monomial_count(level_of(n)); });
  m.def("enumerate_monomials", [](int n) {
    std::vector<Monomial> out;
    for (const auto& x : enumerate_monomials(level_of(n))) out.push_back(x);
    return out;
  });

  // graphs
  m.def("edges", &edge_list, "Edges {p, q} of the Wood graph as index pairs p < q.");
  m.def("from_edges", [](int n, const std::vector<std::pair<int, int>>& e) { return from_graph(graph_from(n, e)); },
        py::arg("n"), py::arg("edges"));
  m.def("adjacency_matrix", [](const Monomial& x, bool directed) { return matrix_rows(adjacency_matrix(x, directed)); },
        py::arg("x"), py::arg("directed") = false);
  m.def("top_class", [](int n) { return top_class(level_of(n)); });
  m.def("export_dot", [](const Monomial& x, bool directed) { return export_dot(to_graph(x), directed); },
        py::arg("x"), py::arg("directed") = false);

  // connectivity
  m.def("connection_numbers", [](const Monomial& x) { return table_dict(connection_numbers(x)); });
  m.def("unilateral_numbers", [](const Monomial& x) { return table_dict(unilateral_numbers(x)); });
  m.def("is_connected", &is_connected);
  m.def("is_unilateral", &is_unilateral);
  m.def("oracle_is_connected", [](const Monomial& x) { return oracle_is_connected(to_graph(x)); });
  m.def("oracle_is_unilateral", [](const Monomial& x) { return oracle_is_unilateral(to_graph(x)); });

  // structure
  m.def("degrees", [](const Monomial& x, int p) {
    const DegreeProfile d = degrees(x, p);
    return std::make_tuple(d.in_degree, d.out_degree, d.degree);
  }, "(in_degree, out_degree, degree) of vertex p.");
  m.def("is_tree", &is_tree);
  m.def("oracle_is_tree", [](const Monomial& x) { return oracle_is_tree(to_graph(x)); });
  m.def("paper_hamilton_condition", &paper_hamilton_condition);
  m.def("dirac_condition", &dirac_condition);
  m.def("hamilton_cycle", [](const Monomial& x) { return vertices(oracle_hamilton_cycle(to_graph(x))); });
  m.def("has_hamilton_directed_path", &has_hamilton_directed_path);
  m.def("hamilton_directed_path", [](const Monomial& x) { return vertices(hamilton_directed_path(x)); });

  // hopf
  m.def("coproduct", [](const Monomial& x) { return coproduct(x).terms(); });
  m.def("coproduct_generator", [](int i, int j, int n) { return coproduct_generator(i, j, level_of(n)).terms(); },
        py::arg("i"), py::arg("j"), py::arg("n"));
  m.def("counit", py::overload_cast<const Monomial&>(&counit));
  m.def("antipode", [](const Monomial& x) { return antipode(x).terms(); });
  m.def("antipode_generator", [](int i, int n) { return antipode_generator(i, level_of(n)).terms(); },
        py::arg("i"), py::arg("n"));
  m.def("directed_path_polynomial", [](int j, int i, int n) { return directed_path_polynomial(j, i, level_of(n)).terms(); },
        py::arg("j"), py::arg("i"), py::arg("n"));
  m.def("unilateral_via_antipode", [](const Monomial& x) { return unilateral_via_antipode(x); });
  m.def("verify_antipode_recursion", [](int i_max) { return verify_antipode_recursion(i_max).passed; });
  m.def("verify_hopf_ideal", [](int n) { return verify_hopf_ideal(n).passed; });

  // reports and sweeps
  m.def("analyze_json", [](const Monomial& x) { return to_json(analyze(x)); });
  m.def("verify", [](const std::string& theorem, int n, unsigned threads) {
    auto claim = claim_from_name(theorem);
    if (!claim) throw py::value_error("unknown theorem '" + theorem + "'");
    SweepOptions options;
    options.threads = threads;
    SweepReport r;
    {
      py::gil_scoped_release release;
      r = run_sweep(*claim, n, options);
    }
    return sweep_dict(r);
  }, py::arg("theorem"), py::arg("n"), py::arg("threads") = 1);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
