#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <string>

#include "koszul_lab/classifier.hpp"
#include "koszul_lab/corpus.hpp"
#include "koszul_lab/errors.hpp"
#include "koszul_lab/graph.hpp"
#include "koszul_lab/graph_io.hpp"
#include "koszul_lab/report_json.hpp"
#include "koszul_lab/semigroup.hpp"
#include "koszul_lab/toric.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace koszul;

namespace {

constexpr int kAlgebraMaxOrder = 10;
constexpr int kVeroneseMaxN = 7;
constexpr int kMaxDegreeBound = 6;

Graph load(const std::string& text, const std::string& format) {
  if (format == "auto") return parse_graph(text);
  if (format == "graph6") return parse_graph(text, GraphFormat::Graph6);
  if (format == "edgelist") return parse_graph(text, GraphFormat::EdgeList);
  if (format == "json") return parse_graph(text, GraphFormat::Json);
  throw std::invalid_argument("unknown format '" + format + "'");
}

void check_algebra(const Graph& g, int degree_bound, int lowest) {
  require_connected(g);
  if (g.order() > kAlgebraMaxOrder)
    throw UnsupportedSizeError("n = " + std::to_string(g.order()) + " exceeds the algebra cap");
  if (degree_bound < lowest) throw std::invalid_argument("degree_bound too small");
  if (degree_bound > kMaxDegreeBound) throw UnsupportedSizeError("degree_bound exceeds the cap");
}

std::string classify_json(const std::string& text, const std::string& format) {
  return to_json(classify(load(text, format))).dump();
}

std::string oracle_json(const std::string& text, int degree_bound, const std::string& format) {
  const Graph g = load(text, format);
  check_algebra(g, degree_bound, 2);
  return to_json(edge_ring_oracle(g, degree_bound)).dump();
}

std::string toric_json(const std::string& text, int degree_bound, const std::string& format) {
  const Graph g = load(text, format);
  check_algebra(g, degree_bound, 3);
  if (g.size() == 0) return json{{"generators", json::array()}}.dump();
  const auto gens = minimal_generators(edge_ring_basis(g), degree_bound);
  return json{{"generators", to_json(std::span<const Binomial>(gens))},
              {"counts_by_degree", generator_degree_counts(gens, degree_bound)}}
      .dump();
}

std::string groebner_json(const std::string& text, std::size_t attempts, std::uint64_t seed, int degree_bound,
                          const std::string& format) {
  const Graph g = load(text, format);
  check_algebra(g, degree_bound, 3);
  if (g.size() == 0) return json{{"quadratically_generated", true}, {"attempts_tried", 0}, {"found", true}}.dump();
  return to_json(quadratic_gb_search(edge_ring_basis(g), attempts, seed, degree_bound)).dump();
}

std::string veronese_json(int n, int d, int degree_bound) {
  if (n > kVeroneseMaxN) throw UnsupportedSizeError("veronese: n exceeds the cap");
  if (degree_bound < 2) throw std::invalid_argument("degree_bound too small");
  if (degree_bound > kMaxDegreeBound) throw UnsupportedSizeError("degree_bound exceeds the cap");
  return to_json(strongly_koszul_pairwise(veronese_basis(n, d), degree_bound)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Strongly Koszul edge rings of graphs";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<DisconnectedGraphError> disconnected(m, "DisconnectedGraphError", PyExc_ValueError);
  static py::exception<UnsupportedSizeError> too_large(m, "UnsupportedSizeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const DisconnectedGraphError& e) {
      disconnected(e.what());
    } catch (const UnsupportedSizeError& e) {
      too_large(e.what());
    }
  });

  m.def("to_graph6", [](const std::string& text, const std::string& format) { return to_graph6(load(text, format)); },
        py::arg("text"), py::arg("format") = "auto");
  m.def("edges", [](const std::string& text, const std::string& format) {
    const Graph g = load(text, format);
    std::vector<std::pair<int, int>> out;
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
    return py::make_tuple(g.order(), out);
  }, py::arg("text"), py::arg("format") = "auto");
  m.def("classify_json", &classify_json, py::arg("text"), py::arg("format") = "auto");
  m.def("oracle_json", &oracle_json, py::arg("text"), py::arg("degree_bound") = 4, py::arg("format") = "auto");
  m.def("toric_json", &toric_json, py::arg("text"), py::arg("degree_bound") = 4, py::arg("format") = "auto");
  m.def("groebner_json", &groebner_json, py::arg("text"), py::arg("attempts") = 1000, py::arg("seed") = 0,
        py::arg("degree_bound") = 4, py::arg("format") = "auto");
  m.def("veronese_json", &veronese_json, py::arg("n"), py::arg("d"), py::arg("degree_bound") = 4);
  m.attr("__version__") = "0.1.0";
}
