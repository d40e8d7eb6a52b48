#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pseudoassoc/catalog.hpp"
#include "pseudoassoc/io.hpp"
#include "pseudoassoc/maps.hpp"
#include "pseudoassoc/realization.hpp"
#include "pseudoassoc/tubings.hpp"
#include "pseudoassoc/verify.hpp"

namespace py = pybind11;
using namespace pseudoassoc;

namespace {

using TubeIds = std::pair<std::vector<std::string>, std::vector<std::string>>;

TubeIds ids(const Pseudograph& g, const Tube& t) { return {node_ids(g, t.nodes), edge_ids(g, t.edges)}; }

py::dict info(const std::string& text) {
  auto g = parse_graph(text);
  py::dict d;
  d["nodes"] = g.nodes();
  d["edges"] = g.edge_count();
  d["loops"] = g.loop_count();
  d["bundles"] = bundle_ids(g);
  d["redundant_edges"] = g.redundant_edges();
  d["dimension"] = g.dimension();
  d["components"] = g.components().size();
  d["connected"] = g.connected();
  d["loopless"] = g.loopless();
  return d;
}

std::vector<TubeIds> tubes(const std::string& text) {
  auto g = parse_graph(text);
  std::vector<TubeIds> out;
  for (const auto& t : enumerate_tubes(g)) out.push_back(ids(g, t));
  return out;
}

std::vector<std::vector<TubeIds>> maximal(const std::string& text) {
  auto g = parse_graph(text);
  std::vector<std::vector<TubeIds>> out;
  for (const auto& tubing : maximal_tubings(g)) {
    auto& row = out.emplace_back();
    for (const auto& t : tubing) row.push_back(ids(g, t));
  }
  return out;
}

std::string realize_json(const std::string& text, bool hrep) {
  auto g = parse_graph(text);
  if (g.loopless()) return realization_to_json(realize(g), hrep);
  return cone_to_json(cone_realization(g), hrep);
}

std::string verify_json(const std::string& text, const std::string& suite) {
  auto g = parse_graph(text);
  std::vector<CheckResult> results;
  if (suite == "all")
    results = verify_all(g);
  else if (suite == "poset")
    results = verify_poset(g);
  else if (suite == "construction")
    results = verify_construction(g);
  else if (suite == "realization")
    results = verify_realization(g);
  else if (suite == "maps")
    results = verify_maps(g);
  else
    throw GraphError("unknown suite \"" + suite + "\"");
  return format_results_json(results);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pseudograph associahedra";
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<TooManyFaces>(m, "TooManyFaces", PyExc_RuntimeError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception<RealizationError>(m, "RealizationError", PyExc_RuntimeError);

  m.def("canonical", [](const std::string& text) { return to_json(parse_graph(text)); }, py::arg("graph"));
  m.def("info", &info, py::arg("graph"));
  m.def("tubes", &tubes, py::arg("graph"));
  m.def("maximal_tubings", &maximal, py::arg("graph"));
  m.def(
      "fvector",
      [](const std::string& text, std::size_t max_faces) {
        return enumerate_tubings(parse_graph(text), {max_faces}).fvector();
      },
      py::arg("graph"), py::arg("max_faces") = 0);
  m.def(
      "poset_json",
      [](const std::string& text, std::size_t max_faces) {
        return poset_to_json(enumerate_tubings(parse_graph(text), {max_faces}));
      },
      py::arg("graph"), py::arg("max_faces") = 0);
  m.def("realize_json", &realize_json, py::arg("graph"), py::arg("hrep") = false);
  m.def(
      "contract_json", [](const std::string& text, const std::string& edge) {
        return map_report_json(contract_map(parse_graph(text), edge));
      },
      py::arg("graph"), py::arg("edge"));
  m.def(
      "delete_json", [](const std::string& text, const std::string& edge) {
        return map_report_json(delete_map(parse_graph(text), edge));
      },
      py::arg("graph"), py::arg("edge"));
  m.def(
      "tonks_json", [](std::size_t n, const std::vector<std::string>& order) { return map_report_json(tonks(n, order)); },
      py::arg("n"), py::arg("order") = std::vector<std::string>{});
  m.def("verify_json", &verify_json, py::arg("graph"), py::arg("suite") = "all");
  m.def(
      "catalog", [](const std::string& family, const std::string& arg) {
        return to_json(standard_graph(parse_family(family, arg)));
      },
      py::arg("family"), py::arg("n") = "");
  m.def("figure_ids", &figure_ids);
  m.def("identities_json", [] { return format_report_json(verify_family_identities()); });
}
