#include "pseudoassoc/maps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pseudoassoc/catalog.hpp"

namespace pseudoassoc {

namespace {

// Edges of `from` carried over by id into `to`; ids missing from `to` are dropped.
IndexSet edges_by_id(const Pseudograph& from, IndexSet edges, const Pseudograph& to) {
  IndexSet out;
  for (auto e : edges.items()) {
    auto f = to.find_edge(from.edge(e).id);
    if (f != Pseudograph::npos) out.insert(f);
  }
  return out;
}

IndexSet nodes_by_id(const Pseudograph& from, IndexSet nodes, const Pseudograph& to) {
  IndexSet out;
  for (auto v : nodes.items()) out.insert(to.node_index(from.node_id(v)));
  return out;
}

// An image filling a whole component of the target is dropped, except when
// t was that component's tube already or a deletion split the component.
std::optional<Tube> proper(const Pseudograph& g, const Tube& t, const Pseudograph& target, const Tube& image,
                           bool may_split) {
  const auto& comp = target.components()[target.component_of(image.nodes.items().front())];
  if (image != induced(target, IndexSet::of(comp))) return image;
  const auto& source = g.components()[g.component_of(t.nodes.items().front())];
  if (t == induced(g, IndexSet::of(source))) return image;
  if (may_split && comp.size() != source.size()) return image;
  return std::nullopt;
}

void check_tubing(const Pseudograph& target, Tubing& tubes, const char* what) {
  std::sort(tubes.begin(), tubes.end(), canonical_less);
  tubes.erase(std::unique(tubes.begin(), tubes.end()), tubes.end());
  if (!is_tubing(target, tubes))
    throw InconsistencyError(std::string(what) + " produced " + describe(target, tubes) + ", which is not a tubing");
}

bool face_includes(const FacePoset::Face& big, const FacePoset::Face& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::size_t locate(const FacePoset& fp, const Tubing& tubes, const char* what) {
  auto i = fp.find(tubes);
  if (!i) throw InconsistencyError(std::string(what) + ": image " + describe(fp.graph(), tubes) + " is not a face");
  return *i;
}

}  // namespace

Pseudograph contraction_target(const Pseudograph& g, std::size_t e) {
  const auto& rec = g.edge(e);
  return rec.is_loop() ? delete_edge(g, rec.id) : contract(g, rec.id);
}

std::optional<Tube> phi_tube(const Pseudograph& g, std::size_t e, const Tube& t, const Pseudograph& target) {
  const auto& rec = g.edge(e);
  if (rec.is_loop()) {
    Tube out{nodes_by_id(g, t.nodes, target), edges_by_id(g, t.edges, target)};
    return proper(g, t, target, out, false);
  }
  bool has_first = t.nodes.contains(rec.first), has_second = t.nodes.contains(rec.second);
  auto merged = target.node_index(merged_node_id(g, rec.first, rec.second));
  auto map_nodes = [&] {
    IndexSet out;
    for (auto v : t.nodes.items())
      out.insert(v == rec.first || v == rec.second ? merged : target.node_index(g.node_id(v)));
    return out;
  };
  Tube out;
  if (!has_first && !has_second) {
    out = {nodes_by_id(g, t.nodes, target), edges_by_id(g, t.edges, target)};
  } else if (has_first && has_second) {
    // contains e, or excludes it: either way the endpoints are identified
    out = {map_nodes(), edges_by_id(g, t.edges, target)};
  } else {
    return std::nullopt;
  }
  auto image = proper(g, t, target, out, false);
  if (image && !is_tube(target, *image))
    throw InconsistencyError("contraction image " + describe(target, *image) + " of " + describe(g, t) +
                             " is not a tube");
  return image;
}

std::optional<Tube> phi_tube(const Pseudograph& g, std::string_view edge_id, const Tube& t) {
  auto e = g.edge_index(edge_id);
  return phi_tube(g, e, t, contraction_target(g, e));
}

std::vector<Tube> theta_tube(const Pseudograph& g, std::size_t e, const Tube& t, const Pseudograph& target) {
  Tube rest{t.nodes, edges_by_id(g, t.edges, target)};
  if (!t.edges.contains(e)) {
    if (auto u = proper(g, t, target, rest, true)) return {*u};
    return {};
  }
  if (connected_subgraph(target, rest.nodes, rest.edges)) {
    // t - e can stay connected yet lose the only kept edge of a bundle
    if (!is_tube(target, rest)) return {};
    if (auto u = proper(g, t, target, rest, true)) return {*u};
    return {};
  }
  // split: the component of the lowest node against the remainder
  IndexSet side = IndexSet::single(rest.nodes.items().front());
  for (bool grew = true; grew;) {
    grew = false;
    for (auto f : rest.edges.items()) {
      const auto& r = target.edge(f);
      if (side.contains(r.first) != side.contains(r.second)) {
        side.insert(r.first);
        side.insert(r.second);
        grew = true;
      }
    }
  }
  auto other = rest.nodes - side;
  auto part = [&](IndexSet nodes) {
    IndexSet edges;
    for (auto f : rest.edges.items())
      if (nodes.contains(target.edge(f).first)) edges.insert(f);
    return Tube{nodes, edges};
  };
  auto a = part(side), b = part(other);
  if (!connected_subgraph(target, b.nodes, b.edges)) return {};
  if (!is_tube(target, a) || !is_tube(target, b) || !compatible(target, a, b)) return {};
  return {a, b};
}

std::vector<Tube> theta_tube(const Pseudograph& g, std::string_view edge_id, const Tube& t) {
  auto e = g.edge_index(edge_id);
  return theta_tube(g, e, t, delete_edge(g, edge_id));
}

Tubing phi_tubing(const Pseudograph& g, std::size_t e, const Tubing& tubes, const Pseudograph& target) {
  Tubing out;
  for (const auto& t : tubes)
    if (auto u = phi_tube(g, e, t, target)) out.push_back(*u);
  check_tubing(target, out, "contraction");
  return out;
}

Tubing theta_tubing(const Pseudograph& g, std::size_t e, const Tubing& tubes, const Pseudograph& target) {
  Tubing out;
  for (const auto& t : tubes)
    for (auto& u : theta_tube(g, e, t, target)) out.push_back(u);
  check_tubing(target, out, "deletion");
  return out;
}

FaceMapTable contract_map(const Pseudograph& g, std::string_view edge_id) {
  auto e = g.edge_index(edge_id);
  FaceMapTable map;
  map.kind = FaceMapTable::Kind::contraction;
  map.edges = {std::string(edge_id)};
  map.source = enumerate_tubings(g);
  map.target = enumerate_tubings(contraction_target(g, e));
  for (std::size_t i = 0; i < map.source.size(); ++i)
    map.image.push_back(locate(map.target, phi_tubing(g, e, map.source.tubing(i), map.target.graph()), "contraction"));
  return map;
}

FaceMapTable delete_map(const Pseudograph& g, std::string_view edge_id) {
  auto e = g.edge_index(edge_id);
  FaceMapTable map;
  map.kind = FaceMapTable::Kind::deletion;
  map.edges = {std::string(edge_id)};
  map.source = enumerate_tubings(g);
  map.target = enumerate_tubings(delete_edge(g, edge_id));
  const auto& target = map.target.graph();
  for (std::size_t i = 0; i < map.source.size(); ++i)
    map.image.push_back(locate(map.target, theta_tubing(g, e, map.source.tubing(i), target), "deletion"));
  for (std::size_t j = 0; j < map.target.size(); ++j) {
    auto u = map.target.tubing(j);
    auto t = preimage(g, e, u, target);
    if (!t) throw InconsistencyError("deletion of " + std::string(edge_id) + ": no preimage for " + describe(target, u));
    auto i = locate(map.source, *t, "preimage");
    if (map.image[i] != j)
      throw InconsistencyError("deletion of " + std::string(edge_id) + ": preimage of " + describe(target, u) +
                               " maps elsewhere");
  }
  return map;
}

std::optional<Tubing> preimage(const Pseudograph& g, std::size_t e, const Tubing& target_tubing,
                               const Pseudograph& target) {
  const auto& rec = g.edge(e);
  Tubing lifted;
  for (const auto& u : target_tubing) {
    Tube t{nodes_by_id(target, u.nodes, g), edges_by_id(target, u.edges, g)};
    Tube with_e = t;
    if (rec.is_loop() || (t.nodes.contains(rec.first) && t.nodes.contains(rec.second))) with_e.edges.insert(e);
    // prefer a lift that maps back onto u by itself
    auto maps_to_u = [&](const Tube& x) {
      if (!is_tube(g, x)) return false;
      auto img = theta_tube(g, e, x, target);
      return img.size() == 1 && img.front() == u;
    };
    if (maps_to_u(t)) lifted.push_back(t);
    else if (maps_to_u(with_e)) lifted.push_back(with_e);
    else if (is_tube(g, t)) lifted.push_back(t);
    else return std::nullopt;
  }
  while (!is_tubing(g, lifted)) {
    // merge a pair of tubes joined by e, outermost among the tubes avoiding e
    auto outermost = [&](std::size_t i) {
      return std::none_of(lifted.begin(), lifted.end(), [&](const Tube& o) {
        return !o.edges.contains(e) && lifted[i].proper_subset_of(o);
      });
    };
    bool merged = false;
    for (std::size_t i = 0; i < lifted.size() && !merged; ++i) {
      for (std::size_t j = 0; j < lifted.size() && !merged; ++j) {
        if (i == j || !lifted[i].nodes.contains(rec.first) || !lifted[j].nodes.contains(rec.second)) continue;
        if (lifted[i].nodes.intersects(lifted[j].nodes) || !outermost(i) || !outermost(j)) continue;
        Tube joined{lifted[i].nodes | lifted[j].nodes, lifted[i].edges | lifted[j].edges | IndexSet::single(e)};
        if (!is_tube(g, joined)) continue;
        auto a = lifted[i], b = lifted[j];
        lifted.erase(std::remove_if(lifted.begin(), lifted.end(), [&](const Tube& x) { return x == a || x == b; }),
                     lifted.end());
        lifted.push_back(joined);
        merged = true;
      }
    }
    if (!merged) return std::nullopt;
  }
  canonicalize(lifted);
  Tubing want = target_tubing;
  canonicalize(want);
  if (theta_tubing(g, e, lifted, target) != want) return std::nullopt;
  return lifted;
}

std::string check_order_preserving(const FaceMapTable& map) {
  const auto& p = map.source.poset();
  for (std::size_t i = 0; i < map.source.size(); ++i)
    for (auto j : p.above[i]) {
      const auto& lower = map.target.faces()[map.image[i]];
      const auto& upper = map.target.faces()[map.image[j]];
      if (!face_includes(lower, upper))
        return "order not preserved: " + describe(map.source.graph(), map.source.tubing(i)) + " below " +
               describe(map.source.graph(), map.source.tubing(j)) + " but images " +
               describe(map.target.graph(), map.target.tubing(map.image[i])) + " and " +
               describe(map.target.graph(), map.target.tubing(map.image[j]));
    }
  return {};
}

std::string check_surjective(const FaceMapTable& map) {
  std::vector<bool> hit(map.target.size(), false);
  for (auto j : map.image) hit[j] = true;
  for (std::size_t j = 0; j < hit.size(); ++j)
    if (!hit[j]) return "target face " + describe(map.target.graph(), map.target.tubing(j)) + " is not hit";
  return {};
}

std::string check_deletion_dimension(const Pseudograph& g, const FaceMapTable& map) {
  auto e = g.edge_index(map.edges.at(0));
  const auto& rec = g.edge(e);
  bool single = !rec.is_loop() && g.bundles()[g.bundle_of(e)].size() == 1;
  if (single) {
    for (std::size_t i = 0; i < map.source.size(); ++i)
      if (map.target.poset().rank[map.image[i]] < map.source.poset().rank[i])
        return "deletion raised the dimension of " + describe(g, map.source.tubing(i));
    return {};
  }
  // the facet of the component of e with e removed
  auto facet = induced(g, IndexSet::of(g.components()[g.component_of(rec.first)]));
  facet.edges.erase(e);
  for (auto j : std::set<std::size_t>(map.image.begin(), map.image.end())) {
    Tubing lifted{facet};
    for (const auto& u : map.target.tubing(j)) {
      Tube t{nodes_by_id(map.target.graph(), u.nodes, g), edges_by_id(map.target.graph(), u.edges, g)};
      if (t != facet) lifted.push_back(t);
    }
    if (!is_tubing(g, lifted))
      return "image " + describe(map.target.graph(), map.target.tubing(j)) + " is not inside the facet of G - " +
             rec.id;
  }
  return {};
}

namespace {

// Tube of a contracted graph described by the original nodes it covers and its edge ids.
using Footprint = std::pair<std::set<std::string>, std::set<std::string>>;

struct Tracked {
  Pseudograph graph;
  std::vector<std::set<std::string>> origin;  // per node
};

Tracked contract_tracked(const Tracked& in, std::string_view edge_id) {
  auto e = in.graph.edge_index(edge_id);
  Tracked out{contraction_target(in.graph, e), {}};
  out.origin.resize(out.graph.node_count());
  const auto& rec = in.graph.edge(e);
  for (std::size_t v = 0; v < in.graph.node_count(); ++v) {
    auto w = rec.is_loop() || !rec.touches(v) ? out.graph.node_index(in.graph.node_id(v))
                                              : out.graph.node_index(merged_node_id(in.graph, rec.first, rec.second));
    out.origin[w].insert(in.origin[v].begin(), in.origin[v].end());
  }
  return out;
}

std::set<Footprint> footprint(const Tracked& tr, const Tubing& tubes) {
  std::set<Footprint> out;
  for (const auto& t : tubes) {
    Footprint f;
    for (auto v : t.nodes.items()) f.first.insert(tr.origin[v].begin(), tr.origin[v].end());
    for (const auto& id : edge_ids(tr.graph, t.edges)) f.second.insert(id);
    out.insert(f);
  }
  return out;
}

Tracked track(const Pseudograph& g) {
  Tracked tr{g, {}};
  for (const auto& id : g.nodes()) tr.origin.push_back({id});
  return tr;
}

}  // namespace

std::string check_contract_commutes(const Pseudograph& g, std::string_view e1, std::string_view e2) {
  auto base = track(g);
  auto a1 = contract_tracked(base, e1), a2 = contract_tracked(a1, e2);
  auto b1 = contract_tracked(base, e2), b2 = contract_tracked(b1, e1);
  auto source = enumerate_tubings(g);
  auto ia1 = g.edge_index(e1), ia2 = a1.graph.edge_index(e2);
  auto ib1 = g.edge_index(e2), ib2 = b1.graph.edge_index(e1);
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto tubing = source.tubing(i);
    auto x = phi_tubing(a1.graph, ia2, phi_tubing(g, ia1, tubing, a1.graph), a2.graph);
    auto y = phi_tubing(b1.graph, ib2, phi_tubing(g, ib1, tubing, b1.graph), b2.graph);
    if (footprint(a2, x) != footprint(b2, y))
      return "contracting " + std::string(e1) + " and " + std::string(e2) + " in the two orders differs on " +
             describe(g, tubing) + ": " + describe(a2.graph, x) + " vs " + describe(b2.graph, y);
  }
  return {};
}

std::string check_delete_commutes(const Pseudograph& g, std::string_view e1, std::string_view e2) {
  auto a1 = delete_edge(g, e1), a2 = delete_edge(a1, e2);
  auto b1 = delete_edge(g, e2), b2 = delete_edge(b1, e1);
  if (!(a2 == b2)) return "deleting " + std::string(e1) + " and " + std::string(e2) + " gives different graphs";
  auto source = enumerate_tubings(g);
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto tubing = source.tubing(i);
    auto x = theta_tubing(a1, a1.edge_index(e2), theta_tubing(g, g.edge_index(e1), tubing, a1), a2);
    auto y = theta_tubing(b1, b1.edge_index(e1), theta_tubing(g, g.edge_index(e2), tubing, b1), b2);
    if (x != y)
      return "deleting " + std::string(e1) + " and " + std::string(e2) + " in the two orders differs on " +
             describe(g, tubing) + ": " + describe(a2, x) + " vs " + describe(b2, y);
  }
  return {};
}

std::string check_loop_agreement(const Pseudograph& g, std::string_view loop_id) {
  auto l = g.edge_index(loop_id);
  if (!g.edge(l).is_loop()) throw GraphError("edge " + std::string(loop_id) + " is not a loop");
  auto target = delete_edge(g, loop_id);
  auto source = enumerate_tubings(g);
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto tubing = source.tubing(i);
    auto x = phi_tubing(g, l, tubing, target), y = theta_tubing(g, l, tubing, target);
    if (x != y)
      return "loop " + std::string(loop_id) + ": contraction and deletion differ on " + describe(g, tubing);
  }
  return {};
}

Pseudograph tube_graph(const Pseudograph& g, const Tube& t) {
  std::vector<EdgeSpec> edges;
  for (auto e : t.edges.items()) edges.push_back(g.edge_spec(e));
  return Pseudograph(node_ids(g, t.nodes), edges);
}

TubeQuotient tube_quotient(const Pseudograph& g, const Tube& t) {
  std::string merged;
  for (const auto& id : node_ids(g, t.nodes)) merged += id;
  {
    auto base = merged;
    auto clashes = [&](const std::string& id) {
      auto v = g.find_node(id);
      return (v != Pseudograph::npos && !t.nodes.contains(v)) || g.find_edge(id) != Pseudograph::npos;
    };
    for (int k = 2; clashes(merged); ++k) merged = base + "#" + std::to_string(k);
  }
  auto first = t.nodes.items().front();
  std::vector<std::string> nodes;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (v == first) nodes.push_back(merged);
    else if (!t.nodes.contains(v)) nodes.push_back(g.node_id(v));
  }
  auto name = [&](std::size_t v) { return t.nodes.contains(v) ? merged : g.node_id(v); };

  // outside nodes touching t: which t nodes and through which edges
  std::map<std::size_t, std::vector<std::size_t>> crossing;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& r = g.edge(e);
    if (r.is_loop()) continue;
    bool a = t.nodes.contains(r.first), b = t.nodes.contains(r.second);
    if (a != b) crossing[a ? r.second : r.first].push_back(e);
  }
  std::map<std::size_t, std::size_t> representative;  // edge -> first edge of its merged group
  for (const auto& [u, edges] : crossing) {
    std::set<std::size_t> inner;
    bool multi = false;
    for (auto e : edges) {
      const auto& r = g.edge(e);
      inner.insert(r.first == u ? r.second : r.first);
      multi = multi || g.bundles()[g.bundle_of(e)].size() > 1;
    }
    if (inner.size() < 2) continue;
    if (multi)
      throw GraphError("node " + g.node_id(u) + " meets tube " + describe(g, t) +
                       " through a multi-edge bundle and more than one node; no quotient graph represents this facet");
    for (auto e : edges) representative[e] = edges.front();
  }

  TubeQuotient q;
  std::vector<EdgeSpec> edges;
  std::map<std::size_t, std::size_t> slot;  // representative edge -> quotient edge
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (t.edges.contains(e)) continue;
    const auto& r = g.edge(e);
    if (auto it = representative.find(e); it != representative.end()) {
      if (auto s = slot.find(it->second); s != slot.end()) {
        q.origin[s->second].push_back(e);
        continue;
      }
      slot[e] = edges.size();
    }
    edges.push_back({r.id, name(r.first), name(r.second)});
    q.origin.push_back({e});
  }
  q.graph = Pseudograph(nodes, edges);
  q.node = q.graph.node_index(merged);
  return q;
}

FacetPoset facet_poset(const FacePoset& fp, std::size_t tube_index) {
  FacetPoset out;
  std::map<std::size_t, std::size_t> local;
  auto t = static_cast<std::uint32_t>(tube_index);
  for (std::size_t i = 0; i < fp.size(); ++i) {
    const auto& f = fp.faces()[i];
    if (std::binary_search(f.begin(), f.end(), t)) {
      local[i] = out.faces.size();
      out.faces.push_back(i);
    }
  }
  const auto& p = fp.poset();
  out.poset.dimension = p.dimension - 1;
  for (auto i : out.faces) {
    out.poset.rank.push_back(p.rank[i] - 1);
    out.poset.compact.push_back(p.compact[i]);
    std::vector<std::size_t> above;
    for (auto j : p.above[i])
      if (auto it = local.find(j); it != local.end()) above.push_back(it->second);
    out.poset.above.push_back(above);
  }
  out.poset.finalize();
  return out;
}

FacetDecomposition facet_decomposition(const Pseudograph& g, const Tube& t) {
  if (!is_tube(g, t)) throw GraphError(describe(g, t) + " is not a tube");
  if (!g.connected()) throw GraphError("facet decomposition needs a connected graph");
  FacetDecomposition out;
  out.quotient = tube_quotient(g, t);
  const auto& q = out.quotient;
  auto sub = tube_graph(g, t);
  out.tube_faces = enumerate_tubings(sub);
  auto quotient_faces = enumerate_tubings(q.graph);
  auto star_tube = quotient_faces.tube_index(Tube{IndexSet::single(q.node), IndexSet{}});
  if (!star_tube) throw InconsistencyError("the merged node is not a tube of the quotient");
  out.quotient_star = facet_poset(quotient_faces, *star_tube);
  auto faces = enumerate_tubings(g);
  out.facet = facet_poset(faces, *faces.tube_index(t));
  std::map<std::size_t, std::size_t> facet_local;
  for (std::size_t k = 0; k < out.facet.faces.size(); ++k) facet_local[out.facet.faces[k]] = k;

  auto lift = [&](const Tube& u) {
    Tube x;
    for (auto v : u.nodes.items()) {
      if (v == q.node) x.nodes = x.nodes | t.nodes;
      else x.nodes.insert(g.node_index(q.graph.node_id(v)));
    }
    for (auto e : u.edges.items())
      for (auto f : q.origin[e]) x.edges.insert(f);
    if (u.nodes.contains(q.node)) x.edges = x.edges | t.edges;
    return x;
  };

  auto product = poset_product(out.tube_faces.poset(), out.quotient_star.poset);
  out.isomorphism.assign(product.size(), 0);
  for (std::size_t i = 0; i < out.tube_faces.size(); ++i) {
    for (std::size_t j = 0; j < out.quotient_star.faces.size(); ++j) {
      Tubing rho{t};
      for (const auto& u : out.tube_faces.tubing(i))
        rho.push_back({nodes_by_id(sub, u.nodes, g), edges_by_id(sub, u.edges, g)});
      for (const auto& u : quotient_faces.tubing(out.quotient_star.faces[j])) rho.push_back(lift(u));
      canonicalize(rho);
      rho.erase(std::unique(rho.begin(), rho.end()), rho.end());
      auto k = faces.find(rho);
      if (!k || !facet_local.count(*k)) {
        out.detail = "rho gives " + describe(g, rho) + ", which is not a tubing containing " + describe(g, t);
        return out;
      }
      out.isomorphism[product_index(out.quotient_star.poset, i, j)] = facet_local[*k];
    }
  }
  out.detail = check_isomorphism(product, out.facet.poset, out.isomorphism, true);
  out.ok = out.detail.empty();
  return out;
}

std::vector<std::string> tonks_edges(std::size_t n) {
  auto g = complete_graph(n);
  std::vector<std::string> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& r = g.edge(e);
    auto lo = std::min(r.first, r.second), hi = std::max(r.first, r.second);
    if (hi != lo + 1) out.push_back(r.id);
  }
  return out;
}

FaceMapTable tonks(std::size_t n, const std::vector<std::string>& order) {
  if (n < 2) throw GraphError("tonks needs at least two nodes");
  auto g = complete_graph(n);
  auto edges = order.empty() ? tonks_edges(n) : order;
  {
    auto want = tonks_edges(n), got = edges;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) throw GraphError("tonks order must list every non-path edge of the complete graph exactly once");
  }
  FaceMapTable map;
  map.kind = FaceMapTable::Kind::deletion;
  map.edges = edges;
  map.source = enumerate_tubings(g);
  std::vector<Tubing> current;
  for (std::size_t i = 0; i < map.source.size(); ++i) current.push_back(map.source.tubing(i));
  auto graph = g;
  for (const auto& id : edges) {
    auto next = delete_edge(graph, id);
    auto e = graph.edge_index(id);
    for (auto& tubing : current) tubing = theta_tubing(graph, e, tubing, next);
    graph = next;
  }
  map.target = enumerate_tubings(graph);
  for (const auto& tubing : current) map.image.push_back(locate(map.target, tubing, "tonks"));
  return map;
}

}  // namespace pseudoassoc
