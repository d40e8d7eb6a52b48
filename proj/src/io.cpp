#include "pseudoassoc/io.hpp"

#include <sstream>

#include "json.hpp"

namespace pseudoassoc {

namespace {

using Json = nlohmann::ordered_json;

Json tube_json(const Pseudograph& g, const Tube& t) { return Json::array({node_ids(g, t.nodes), edge_ids(g, t.edges)}); }

Json tubing_json(const Pseudograph& g, const Tubing& tubes) {
  auto out = Json::array();
  for (const auto& t : tubes) out.push_back(tube_json(g, t));
  return out;
}

Json strings(const std::vector<Integer>& xs) {
  auto out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Json hrep_json(const Pseudograph& g, const HRepresentation& h, Json& root) {
  auto planes = Json::array();
  for (const auto& p : h.hyperplanes) planes.push_back({{"support", p.support}, {"rhs", to_string(p.rhs)}});
  auto halves = Json::array();
  for (const auto& s : h.halfspaces)
    halves.push_back({{"tube", tube_json(g, s.tube)}, {"lambda", to_string(s.lambda)}, {"removed", s.removed}});
  root["hyperplanes"] = planes;
  root["halfspaces"] = halves;
  return root;
}

// Top-level keys one per line; arrays of rows get one compact row per line.
std::string dump_rows(const Json& root) {
  std::ostringstream out;
  auto rows = [&](const Json& arr, const char* indent) {
    out << "[";
    for (std::size_t i = 0; i < arr.size(); ++i) out << (i ? ",\n" : "\n") << indent << arr[i].dump();
    out << (arr.empty() ? "]" : "\n" + std::string(indent).substr(2) + "]");
  };
  if (root.is_array()) {
    rows(root, "  ");
    out << "\n";
    return out.str();
  }
  out << "{";
  std::size_t k = 0;
  for (auto it = root.begin(); it != root.end(); ++it, ++k) {
    out << (k ? ",\n" : "\n") << "  " << Json(it.key()).dump() << ": ";
    const auto& v = it.value();
    if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()))
      rows(v, "    ");
    else
      out << v.dump();
  }
  out << "\n}\n";
  return out.str();
}

}  // namespace

std::string format_fvector(const FacePoset& fp) {
  std::ostringstream out;
  out << "dim " << fp.dimension() << "; f = (";
  auto f = fp.fvector();
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? ", " : "") << f[i];
  out << ")";
  return out.str();
}

std::string format_tubes(const Pseudograph& g, const std::vector<Tube>& tubes) {
  std::ostringstream out;
  for (std::size_t i = 0; i < tubes.size(); ++i)
    out << i << "\t" << tubes[i].element_count() << "\t" << describe(g, tubes[i]) << "\n";
  return out.str();
}

std::string format_faces(const FacePoset& fp) {
  std::ostringstream out;
  const auto& p = fp.poset();
  for (std::size_t i = 0; i < fp.size(); ++i)
    out << i << "\t" << p.dimension - p.rank[i] << "\t" << (p.compact[i] ? "compact" : "unbounded") << "\t"
        << describe(fp.graph(), fp.tubing(i)) << "\n";
  return out.str();
}

std::string poset_to_json(const FacePoset& fp) {
  const auto& p = fp.poset();
  Json root;
  root["dimension"] = p.dimension;
  auto faces = Json::array();
  for (std::size_t i = 0; i < fp.size(); ++i)
    faces.push_back({{"tubes", tubing_json(fp.graph(), fp.tubing(i))}, {"rank", p.rank[i]}, {"compact", bool(p.compact[i])}});
  root["faces"] = faces;
  auto covers = Json::array();
  for (std::size_t i = 0; i < fp.size(); ++i)
    for (auto j : p.above[i]) covers.push_back({i, j});
  root["covers"] = covers;
  return dump_rows(root);
}

std::string poset_to_dot(const FacePoset& fp) {
  const auto& p = fp.poset();
  std::ostringstream out;
  out << "digraph faces {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < fp.size(); ++i)
    out << "  " << i << " [label=\"" << fp.faces()[i].size() << "\"" << (p.compact[i] ? "" : ", style=dashed")
        << "];\n";
  for (std::size_t i = 0; i < fp.size(); ++i)
    for (auto j : p.above[i]) out << "  " << i << " -> " << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string realization_to_json(const Realization& r, bool with_hrep) {
  Json root;
  root["c"] = to_string(r.c);
  root["coordinate_order"] = r.coordinate_order;
  auto vertices = Json::array();
  for (const auto& v : r.vertices)
    vertices.push_back({{"tubing", tubing_json(r.graph, v.tubing)}, {"coords", strings(v.coords)}});
  root["vertices"] = vertices;
  if (with_hrep) hrep_json(r.graph, r.hrep, root);
  return dump_rows(root);
}

std::string cone_to_json(const ConeRealization& cone, bool with_hrep) {
  const auto& r = cone.realization;
  Json root;
  root["c"] = to_string(r.c);
  root["ghost_nodes"] = cone.loop_free.ghost_nodes;
  root["coordinate_order"] = r.coordinate_order;
  auto vertices = Json::array();
  for (auto i : cone.kept)
    vertices.push_back({{"tubing", tubing_json(r.graph, r.vertices[i].tubing)}, {"coords", strings(r.vertices[i].coords)}});
  root["vertices"] = vertices;
  if (with_hrep) hrep_json(r.graph, r.hrep, root);
  return dump_rows(root);
}

std::string map_table_to_json(const FaceMapTable& map) {
  auto rows = Json::array();
  for (std::size_t i = 0; i < map.image.size(); ++i) rows.push_back({{"from", i}, {"to", map.image[i]}});
  return dump_rows(rows);
}

std::string map_report_json(const FaceMapTable& map) {
  Json root;
  root["kind"] = map.kind == FaceMapTable::Kind::contraction ? "contraction" : "deletion";
  root["edges"] = map.edges;
  root["target_graph"] = Json::parse(to_json(map.target.graph()));
  root["source_faces"] = map.source.size();
  root["target_faces"] = map.target.size();
  root["source_vertices"] = map.source.vertices().size();
  root["target_vertices"] = map.target.vertices().size();
  root["order_preserving"] = check_order_preserving(map).empty();
  root["surjective"] = check_surjective(map).empty();
  auto rows = Json::array();
  for (std::size_t i = 0; i < map.image.size(); ++i) rows.push_back({{"from", i}, {"to", map.image[i]}});
  root["map"] = rows;
  return dump_rows(root);
}

std::string promotion_log_to_json(const Pseudograph& g, const std::vector<PromotionStep>& log) {
  auto rows = Json::array();
  for (const auto& s : log)
    rows.push_back({{"tube", tube_json(g, s.tube)},
                    {"elements", s.elements},
                    {"added", s.added},
                    {"removed", s.removed},
                    {"label_compatible", s.label_compatible},
                    {"faces_after", s.faces_after}});
  return dump_rows(rows);
}

}  // namespace pseudoassoc
