#include "pseudoassoc/pseudograph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace pseudoassoc {

namespace {

std::string quote_id(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

}  // namespace

Pseudograph::Pseudograph(std::vector<std::string> nodes, const std::vector<EdgeSpec>& edges)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw GraphError("graph has no nodes");
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    const auto& id = nodes_[v];
    if (id.empty()) throw GraphError("empty node identifier");
    if (!node_lookup_.emplace(id, v).second)
      throw GraphError("duplicate node identifier " + quote_id(id));
  }
  edges_.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& spec = edges[e];
    if (spec.id.empty()) throw GraphError("empty edge identifier");
    if (node_lookup_.count(spec.id))
      throw GraphError("edge identifier " + quote_id(spec.id) + " clashes with a node identifier");
    if (!edge_lookup_.emplace(spec.id, e).second)
      throw GraphError("duplicate edge identifier " + quote_id(spec.id));
    auto a = node_lookup_.find(spec.first);
    if (a == node_lookup_.end())
      throw GraphError("edge " + quote_id(spec.id) + " names unknown node " + quote_id(spec.first));
    auto b = node_lookup_.find(spec.second);
    if (b == node_lookup_.end())
      throw GraphError("edge " + quote_id(spec.id) + " names unknown node " + quote_id(spec.second));
    edges_.push_back({spec.id, a->second, b->second});
  }

  // bundles keyed by unordered endpoint pair, in order of first member
  bundle_of_.assign(edges_.size(), npos);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_pair;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& rec = edges_[e];
    if (rec.is_loop()) {
      loops_.push_back(e);
      continue;
    }
    auto key = std::minmax(rec.first, rec.second);
    auto [it, fresh] = by_pair.emplace(key, bundles_.size());
    if (fresh) bundles_.emplace_back();
    bundles_[it->second].push_back(e);
    bundle_of_[e] = it->second;
  }
  redundant_ = loops_.size();
  for (const auto& b : bundles_) redundant_ += b.size() - 1;

  // components by union-find
  std::vector<std::size_t> parent(nodes_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& rec : edges_) {
    auto a = find(rec.first), b = find(rec.second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  component_of_.assign(nodes_.size(), npos);
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    auto root = find(v);
    if (component_of_[root] == npos) {
      component_of_[root] = components_.size();
      components_.emplace_back();
    }
    component_of_[v] = component_of_[root];
    components_[component_of_[v]].push_back(v);
  }

  if (fits_masks()) {
    neighbors_.assign(nodes_.size(), 0);
    incident_.assign(nodes_.size(), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& rec = edges_[e];
      incident_[rec.first] |= std::uint64_t{1} << e;
      incident_[rec.second] |= std::uint64_t{1} << e;
      if (!rec.is_loop()) {
        neighbors_[rec.first] |= std::uint64_t{1} << rec.second;
        neighbors_[rec.second] |= std::uint64_t{1} << rec.first;
      }
    }
    for (const auto& b : bundles_) {
      std::uint64_t m = 0;
      for (auto e : b) m |= std::uint64_t{1} << e;
      bundle_masks_.push_back(m);
    }
  }
}

std::size_t Pseudograph::find_node(std::string_view id) const {
  auto it = node_lookup_.find(id);
  return it == node_lookup_.end() ? npos : it->second;
}

std::size_t Pseudograph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(id);
  return it == edge_lookup_.end() ? npos : it->second;
}

std::size_t Pseudograph::node_index(std::string_view id) const {
  auto v = find_node(id);
  if (v == npos) throw GraphError("unknown node " + quote_id(id));
  return v;
}

std::size_t Pseudograph::edge_index(std::string_view id) const {
  auto e = find_edge(id);
  if (e == npos) throw GraphError("unknown edge " + quote_id(id));
  return e;
}

void Pseudograph::require_masks() const {
  if (!fits_masks())
    throw GraphError("graph too large for tube enumeration (" + std::to_string(nodes_.size()) +
                     " nodes, " + std::to_string(edges_.size()) + " edges; limit is 64 each)");
}

std::uint64_t Pseudograph::all_nodes_mask() const {
  return nodes_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nodes_.size()) - 1;
}

std::uint64_t Pseudograph::all_edges_mask() const {
  return edges_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges_.size()) - 1;
}

EdgeSpec Pseudograph::edge_spec(std::size_t e) const {
  const auto& rec = edges_.at(e);
  return {rec.id, nodes_[rec.first], nodes_[rec.second]};
}

std::vector<EdgeSpec> Pseudograph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) out.push_back(edge_spec(e));
  return out;
}

Pseudograph parse_graph(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("malformed JSON: ") + err.what());
  }
  if (!doc.is_object()) throw ParseError("graph file must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "nodes" && key != "edges") throw ParseError("unexpected key " + quote_id(key));
  }
  if (!doc.contains("nodes") || !doc["nodes"].is_array())
    throw ParseError("missing \"nodes\" array");
  if (doc.contains("edges") && !doc["edges"].is_array())
    throw ParseError("\"edges\" must be an array");

  auto check_id = [](const json& v, const char* what) {
    if (!v.is_string()) throw ParseError(std::string(what) + " must be a string, got " + v.dump());
    auto s = v.get<std::string>();
    if (s.find(kGhostMarker) != std::string::npos)
      throw ParseError(std::string(what) + " " + quote_id(s) + " uses the reserved character " +
                       quote_id(std::string(1, kGhostMarker)));
    return s;
  };

  std::vector<std::string> nodes;
  for (const auto& v : doc["nodes"]) nodes.push_back(check_id(v, "node identifier"));

  std::vector<EdgeSpec> edges;
  if (doc.contains("edges")) {
    for (const auto& rec : doc["edges"]) {
      if (!rec.is_object()) throw ParseError("edge record must be an object, got " + rec.dump());
      for (const auto& [key, value] : rec.items()) {
        if (key != "id" && key != "ends")
          throw ParseError("unexpected key " + quote_id(key) + " in edge record " + rec.dump());
      }
      if (!rec.contains("id")) throw ParseError("edge record without \"id\": " + rec.dump());
      auto id = check_id(rec["id"], "edge identifier");
      if (!rec.contains("ends") || !rec["ends"].is_array() || rec["ends"].size() != 2)
        throw ParseError("edge " + quote_id(id) + " needs \"ends\": [node, node]");
      edges.push_back({id, check_id(rec["ends"][0], "endpoint"), check_id(rec["ends"][1], "endpoint")});
    }
  }
  try {
    return Pseudograph(std::move(nodes), edges);
  } catch (const ParseError&) {
    throw;
  } catch (const GraphError& err) {
    throw ParseError(err.what());
  }
}

std::string to_json(const Pseudograph& g) {
  std::ostringstream out;
  out << "{\n  \"nodes\": [";
  for (std::size_t v = 0; v < g.node_count(); ++v) out << (v ? ", " : "") << quote_id(g.node_id(v));
  out << "],\n  \"edges\": [";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto spec = g.edge_spec(e);
    out << (e ? ",\n" : "\n") << "    {\"id\": " << quote_id(spec.id) << ", \"ends\": ["
        << quote_id(spec.first) << ", " << quote_id(spec.second) << "]}";
  }
  out << (g.edge_count() ? "\n  ]\n}\n" : "]\n}\n");
  return out.str();
}

std::vector<std::vector<std::string>> bundle_ids(const Pseudograph& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& b : g.bundles()) {
    auto& ids = out.emplace_back();
    for (auto e : b) ids.push_back(g.edge(e).id);
  }
  return out;
}

Pseudograph underlying_simple(const Pseudograph& g) {
  std::vector<EdgeSpec> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) continue;
    if (g.bundles()[g.bundle_of(e)].front() == e) edges.push_back(g.edge_spec(e));
  }
  return Pseudograph(g.nodes(), edges);
}

std::string merged_node_id(const Pseudograph& g, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  auto base = g.node_id(a) + g.node_id(b);
  auto clashes = [&](const std::string& id) {
    auto v = g.find_node(id);
    return (v != Pseudograph::npos && v != a && v != b) || g.find_edge(id) != Pseudograph::npos;
  };
  auto id = base;
  for (int k = 2; clashes(id); ++k) id = base + "#" + std::to_string(k);
  return id;
}

Pseudograph contract(const Pseudograph& g, std::string_view edge_id) {
  auto e = g.edge_index(edge_id);
  const auto& rec = g.edge(e);
  if (rec.is_loop())
    throw GraphError("edge " + quote_id(edge_id) + " is a loop; contracting a loop is deletion");
  auto keep = std::min(rec.first, rec.second);
  auto drop = std::max(rec.first, rec.second);
  auto merged = merged_node_id(g, keep, drop);

  std::vector<std::string> nodes;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (v == drop) continue;
    nodes.push_back(v == keep ? merged : g.node_id(v));
  }
  auto rename = [&](std::size_t v) { return v == keep || v == drop ? merged : g.node_id(v); };
  std::vector<EdgeSpec> edges;
  for (std::size_t f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    const auto& r = g.edge(f);
    edges.push_back({r.id, rename(r.first), rename(r.second)});
  }
  return Pseudograph(std::move(nodes), edges);
}

Pseudograph delete_edge(const Pseudograph& g, std::string_view edge_id) {
  auto e = g.edge_index(edge_id);
  auto edges = g.edge_specs();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return Pseudograph(g.nodes(), edges);
}

GhostMap loop_free(const Pseudograph& g) {
  GhostMap out;
  auto nodes = g.nodes();
  std::map<std::size_t, std::string> ghost_of;
  for (auto l : g.loops()) {
    auto v = g.edge(l).first;
    if (ghost_of.count(v)) continue;
    ghost_of[v] = g.node_id(v) + kGhostMarker;
  }
  // ghost nodes are appended in the order of the nodes they hang off
  for (const auto& [v, ghost] : ghost_of) {
    nodes.push_back(ghost);
    out.ghost_nodes.push_back(ghost);
    out.ghost_parent[ghost] = g.node_id(v);
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto spec = g.edge_spec(e);
    if (g.edge(e).is_loop()) {
      spec.second = ghost_of.at(g.edge(e).first);
      out.loop_to_edge[spec.id] = spec.id;
    }
    edges.push_back(spec);
  }
  out.graph = Pseudograph(std::move(nodes), edges);
  return out;
}

}  // namespace pseudoassoc
