#include "pseudoassoc/tube.hpp"

#include <algorithm>

namespace pseudoassoc {

IndexSet IndexSet::of(const std::vector<std::size_t>& items) {
  IndexSet s;
  for (auto i : items) s.insert(i);
  return s;
}

std::vector<std::size_t> IndexSet::items() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (auto b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

namespace {

// Lexicographic comparison of the sorted index lists of two masks.
std::strong_ordering lex(IndexSet a, IndexSet b) {
  auto x = a.bits(), y = b.bits();
  while (x && y) {
    auto i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
    x &= x - 1;
    y &= y - 1;
  }
  if (!x && !y) return std::strong_ordering::equal;
  return x ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace

bool canonical_less(const Tube& a, const Tube& b) {
  if (a.element_count() != b.element_count()) return a.element_count() < b.element_count();
  if (auto c = lex(a.nodes, b.nodes); c != 0) return c < 0;
  return lex(a.edges, b.edges) < 0;
}

Tube whole_graph(const Pseudograph& g) {
  g.require_masks();
  return {IndexSet(g.all_nodes_mask()), IndexSet(g.all_edges_mask())};
}

Tube induced(const Pseudograph& g, IndexSet nodes) {
  g.require_masks();
  IndexSet edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& rec = g.edge(e);
    if (nodes.contains(rec.first) && nodes.contains(rec.second)) edges.insert(e);
  }
  return {nodes, edges};
}

bool connected_subgraph(const Pseudograph& g, IndexSet nodes, IndexSet edges) {
  if (nodes.empty()) return false;
  auto start = nodes.items().front();
  IndexSet reached = IndexSet::single(start);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto e : edges.items()) {
      const auto& rec = g.edge(e);
      bool a = reached.contains(rec.first), b = reached.contains(rec.second);
      if (a != b) {
        reached.insert(rec.first);
        reached.insert(rec.second);
        grew = true;
      }
    }
  }
  return reached == nodes;
}

IndexSet neighborhood(const Pseudograph& g, IndexSet nodes) {
  std::uint64_t out = 0;
  for (auto v : nodes.items()) out |= g.neighbor_mask(v);
  return IndexSet(out) - nodes;
}

bool is_tube(const Pseudograph& g, const Tube& t) {
  g.require_masks();
  if (t.nodes.empty()) return false;
  if (!t.nodes.subset_of(IndexSet(g.all_nodes_mask())) || !t.edges.subset_of(IndexSet(g.all_edges_mask())))
    return false;
  for (auto e : t.edges.items()) {
    const auto& rec = g.edge(e);
    if (!t.nodes.contains(rec.first) || !t.nodes.contains(rec.second)) return false;
  }
  // every adjacent pair inside the tube keeps at least one connecting edge
  for (std::size_t b = 0; b < g.bundles().size(); ++b) {
    const auto& rec = g.edge(g.bundles()[b].front());
    if (t.nodes.contains(rec.first) && t.nodes.contains(rec.second) &&
        !t.edges.intersects(IndexSet(g.bundle_mask(b))))
      return false;
  }
  if (!connected_subgraph(g, t.nodes, t.edges)) return false;
  return t != whole_graph(g);
}

bool is_tube(const Pseudograph& g, const std::vector<std::string>& nodes,
             const std::vector<std::string>& edges) {
  return is_tube(g, make_tube(g, nodes, edges));
}

bool compatible(const Pseudograph& g, const Tube& a, const Tube& b) {
  if (a.proper_subset_of(b) || b.proper_subset_of(a)) return true;
  if (a.nodes.intersects(b.nodes)) return false;
  return !neighborhood(g, a.nodes).intersects(b.nodes);
}

bool excludes(const Pseudograph& g, const Tube& t, std::size_t e) {
  const auto& rec = g.edge(e);
  return t.nodes.contains(rec.first) && t.nodes.contains(rec.second) && !t.edges.contains(e);
}

bool is_full(const Pseudograph& g, const Tube& t) { return induced(g, t.nodes) == t; }

Tube make_tube(const Pseudograph& g, const std::vector<std::string>& nodes,
               const std::vector<std::string>& edges) {
  g.require_masks();
  Tube t;
  for (const auto& id : nodes) t.nodes.insert(g.node_index(id));
  for (const auto& id : edges) t.edges.insert(g.edge_index(id));
  return t;
}

std::vector<std::string> node_ids(const Pseudograph& g, IndexSet nodes) {
  std::vector<std::string> out;
  for (auto v : nodes.items()) out.push_back(g.node_id(v));
  return out;
}

std::vector<std::string> edge_ids(const Pseudograph& g, IndexSet edges) {
  std::vector<std::string> out;
  for (auto e : edges.items()) out.push_back(g.edge(e).id);
  return out;
}

std::string describe(const Pseudograph& g, const Tube& t) {
  std::string s = "{";
  bool first = true;
  for (const auto& id : node_ids(g, t.nodes)) {
    s += (first ? "" : ",") + id;
    first = false;
  }
  if (!t.edges.empty()) {
    s += "|";
    first = true;
    for (const auto& id : edge_ids(g, t.edges)) {
      s += (first ? "" : ",") + id;
      first = false;
    }
  }
  return s + "}";
}

}  // namespace pseudoassoc
