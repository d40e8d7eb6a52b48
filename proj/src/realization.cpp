#include "pseudoassoc/realization.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/dynamic_bitset.hpp>

namespace pseudoassoc {

namespace {

using Bits = boost::dynamic_bitset<>;

Integer power(const Integer& base, std::size_t exp) {
  Integer out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

void require_loopless_connected(const Pseudograph& g, const char* what) {
  if (!g.loopless()) throw GraphError(std::string(what) + " needs a graph without loops; use the cone realization");
  if (!g.connected()) throw GraphError(std::string(what) + " needs a connected graph");
  g.require_masks();
}

bool holds(const Tubing& tubes, const Tube& t) { return std::find(tubes.begin(), tubes.end(), t) != tubes.end(); }

std::string edge_list(const Pseudograph& g, const std::vector<std::size_t>& edges) {
  std::string s;
  for (auto e : edges) s += (s.empty() ? "" : ",") + g.edge(e).id;
  return s;
}

}  // namespace

std::string to_string(const Integer& x) { return x.str(); }

Integer realization_constant(const Pseudograph& g) {
  Integer size = g.size();
  return size * size;
}

BundleOrder edge_order(const Pseudograph& g, const Tubing& maximal, std::size_t bundle) {
  const auto& edges = g.bundles().at(bundle);
  std::vector<std::pair<std::size_t, std::size_t>> avoid;  // (tubes avoiding e, e)
  for (auto e : edges) {
    auto n = std::count_if(maximal.begin(), maximal.end(), [&](const Tube& t) { return !t.edges.contains(e); });
    avoid.emplace_back(static_cast<std::size_t>(n), e);
  }
  std::sort(avoid.begin(), avoid.end());
  for (std::size_t j = 0; j + 1 < avoid.size(); ++j)
    if (avoid[j].first == avoid[j + 1].first)
      throw RealizationError("ambiguous ordering of bundle {" + edge_list(g, edges) + "} at tubing " +
                             describe(g, maximal));
  BundleOrder out;
  for (const auto& [n, e] : avoid) out.edges.push_back(e);
  for (std::size_t j = 0; j + 1 < out.edges.size(); ++j) {
    const Tube* best = nullptr;
    for (const auto& t : maximal)
      if (t.edges.contains(out.edges[j]) && !t.edges.contains(out.edges[j + 1]) &&
          (!best || t.element_count() > best->element_count()))
        best = &t;
    if (!best)
      throw RealizationError("no tube of " + describe(g, maximal) + " separates " + g.edge(out.edges[j]).id +
                             " from " + g.edge(out.edges[j + 1]).id);
    out.witness.push_back(*best);
  }
  out.witness.push_back(whole_graph(g));
  return out;
}

std::vector<Integer> edge_values(const Pseudograph& g, const Tubing& maximal) {
  if (!g.loopless()) throw GraphError("edge values are defined for graphs without loops");
  auto c = realization_constant(g);
  auto outside = [&](const Tube& t) { return Integer(2 * (g.size() - t.element_count()) - 1); };
  std::vector<Integer> out(g.edge_count());
  for (std::size_t b = 0; b < g.bundles().size(); ++b) {
    auto order = edge_order(g, maximal, b);
    auto size = order.edges.size();
    Integer first = c;
    for (std::size_t x = 0; x + 1 < size; ++x) first += outside(order.witness[x]);
    out[order.edges[0]] = first;
    for (std::size_t j = 1; j < size; ++j)
      out[order.edges[j]] = power(c, j) * (c - 1) - outside(order.witness[j - 1]);
  }
  return out;
}

Integer lambda_value(const Pseudograph& g, const Tube& t) {
  auto c = realization_constant(g);
  Integer out = power(c, t.nodes.size());
  for (std::size_t b = 0; b < g.bundles().size(); ++b) {
    auto k = (t.edges & IndexSet(g.bundle_mask(b))).size();
    if (k > 0) out += power(c, k);
  }
  Integer rest = g.size() - t.element_count();
  return out + rest * rest;
}

Integer tube_sum(const Pseudograph& g, const Tube& t, const std::vector<Integer>& coords) {
  Integer s = 0;
  for (auto v : t.nodes.items()) s += coords[v];
  for (auto e : t.edges.items()) s += coords[g.node_count() + e];
  return s;
}

std::vector<Integer> node_values(const Pseudograph& g, const Tubing& maximal, const std::vector<Integer>& edges) {
  std::vector<Integer> out(g.node_count());
  std::vector<bool> known(g.node_count(), false);
  auto order = maximal;
  std::sort(order.begin(), order.end(), canonical_less);
  for (const auto& t : order) {
    Integer rest = lambda_value(g, t);
    for (auto e : t.edges.items()) rest -= edges[e];
    std::vector<std::size_t> fresh;
    for (auto v : t.nodes.items()) {
      if (known[v]) rest -= out[v];
      else fresh.push_back(v);
    }
    if (fresh.size() > 1)
      throw RealizationError("tube " + describe(g, t) + " brings in " + std::to_string(fresh.size()) +
                             " unsolved nodes");
    if (fresh.empty()) {
      if (rest != 0)
        throw RealizationError("tube " + describe(g, t) + " is inconsistent with its subtubes (off by " +
                               to_string(rest) + ")");
      continue;
    }
    out[fresh[0]] = rest;
    known[fresh[0]] = true;
  }
  Integer rest = power(realization_constant(g), g.node_count());
  std::vector<std::size_t> fresh;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (known[v]) rest -= out[v];
    else fresh.push_back(v);
  }
  if (fresh.size() > 1) throw RealizationError(std::to_string(fresh.size()) + " nodes lie in no tube");
  if (fresh.empty()) {
    if (rest != 0) throw RealizationError("node values miss the node-sum hyperplane by " + to_string(rest));
  } else {
    out[fresh[0]] = rest;
  }
  return out;
}

Realization realize(const Pseudograph& g) {
  require_loopless_connected(g, "realize");
  Realization r;
  r.graph = g;
  r.c = realization_constant(g);
  r.coordinate_order = g.nodes();
  for (const auto& e : g.edges()) r.coordinate_order.push_back(e.id);

  auto fp = enumerate_tubings(g);
  for (auto face : fp.vertices()) {
    auto tubing = fp.tubing(face);
    auto edges = edge_values(g, tubing);
    auto nodes = node_values(g, tubing, edges);
    RealizedVertex v{tubing, nodes};
    v.coords.insert(v.coords.end(), edges.begin(), edges.end());
    r.vertices.push_back(std::move(v));
  }
  r.hrep.hyperplanes.push_back({g.nodes(), power(r.c, g.node_count())});
  for (const auto& bundle : g.bundles()) {
    Hyperplane h;
    for (auto e : bundle) h.support.push_back(g.edge(e).id);
    h.rhs = power(r.c, bundle.size());
    r.hrep.hyperplanes.push_back(std::move(h));
  }
  for (const auto& t : fp.tubes()) r.hrep.halfspaces.push_back({t, lambda_value(g, t), false});
  return r;
}

IncidenceLattice incidence_lattice(const Realization& r) {
  const auto& g = r.graph;
  auto n = r.vertices.size();
  std::vector<Bits> generators;
  for (const auto& h : r.hrep.halfspaces) {
    if (h.removed) continue;
    Bits tight(n);
    for (std::size_t i = 0; i < n; ++i)
      if (tube_sum(g, h.tube, r.vertices[i].coords) == h.lambda) tight.set(i);
    if (tight.any()) generators.push_back(tight);
  }
  Bits all(n);
  all.set();
  std::set<Bits> closed{all};
  std::vector<Bits> work{all};
  while (!work.empty()) {
    auto s = work.back();
    work.pop_back();
    for (const auto& gen : generators) {
      auto meet = s & gen;
      if (meet.any() && closed.insert(meet).second) work.push_back(meet);
    }
  }
  std::vector<Bits> sets(closed.begin(), closed.end());
  std::stable_sort(sets.begin(), sets.end(), [](const Bits& a, const Bits& b) { return a.count() > b.count(); });

  IncidenceLattice out;
  auto m = sets.size();
  out.poset.above.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    // minimal proper supersets, found in order of increasing size
    std::vector<std::size_t> covers;
    for (std::size_t j = i; j-- > 0;) {
      if (sets[j].count() == sets[i].count() || !sets[i].is_subset_of(sets[j])) continue;
      bool minimal = std::none_of(covers.begin(), covers.end(), [&](std::size_t k) { return sets[k].is_subset_of(sets[j]); });
      if (minimal) covers.push_back(j);
    }
    out.poset.above[i] = covers;
  }
  out.poset.rank.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (auto j : out.poset.above[i]) out.poset.rank[i] = std::max(out.poset.rank[i], out.poset.rank[j] + 1);
  out.poset.dimension = static_cast<int>(g.dimension());
  out.poset.finalize();
  for (const auto& s : sets) {
    std::vector<std::size_t> members;
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) members.push_back(i);
    out.members.push_back(std::move(members));
  }
  return out;
}

IncidenceCertificate verify_incidence(const Realization& r, const FacePoset& fp) {
  IncidenceCertificate cert;
  const auto& g = r.graph;
  auto fail = [&](std::string why) {
    cert.detail = std::move(why);
    return cert;
  };
  std::map<std::string, std::size_t> coordinate;
  for (std::size_t i = 0; i < r.coordinate_order.size(); ++i) coordinate[r.coordinate_order[i]] = i;
  for (const auto& v : r.vertices) {
    for (const auto& h : r.hrep.hyperplanes) {
      Integer s = 0;
      for (const auto& id : h.support) s += v.coords[coordinate.at(id)];
      if (s != h.rhs)
        return fail("vertex " + describe(g, v.tubing) + " is off the hyperplane over " + h.support.front() +
                    "...: " + to_string(s) + " != " + to_string(h.rhs));
    }
    for (const auto& h : r.hrep.halfspaces) {
      ++cert.pairs_checked;
      auto s = tube_sum(g, h.tube, v.coords);
      bool member = holds(v.tubing, h.tube);
      if (s < h.lambda)
        return fail("vertex " + describe(g, v.tubing) + " violates the halfspace of " + describe(g, h.tube));
      if ((s == h.lambda) != member)
        return fail("vertex " + describe(g, v.tubing) + (member ? " is off" : " is on") + " the hyperplane of " +
                    describe(g, h.tube));
    }
  }
  auto lattice = incidence_lattice(r);
  cert.lattice_size = lattice.members.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < lattice.members.size(); ++i) index.emplace(lattice.members[i], i);
  std::vector<std::size_t> map(fp.size());
  for (std::size_t f = 0; f < fp.size(); ++f) {
    auto tubing = fp.tubing(f);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
      const auto& vt = r.vertices[i].tubing;
      if (std::all_of(tubing.begin(), tubing.end(), [&](const Tube& t) { return holds(vt, t); })) members.push_back(i);
    }
    auto it = index.find(members);
    if (it == index.end()) return fail("face " + describe(g, tubing) + " has no matching incidence set");
    map[f] = it->second;
  }
  auto why = check_isomorphism(fp.poset(), lattice.poset, map);
  if (!why.empty()) return fail("incidence lattice differs from the tubing poset: " + why);
  cert.ok = true;
  return cert;
}

IncidenceCertificate verify_incidence(const Pseudograph& g) {
  auto r = realize(g);
  return verify_incidence(r, enumerate_tubings(g));
}

Tube ghost_image(const Pseudograph& g, const GhostMap& lf, const Tube& t) {
  const auto& h = lf.graph;
  Tube out;
  for (auto v : t.nodes.items()) out.nodes.insert(h.node_index(g.node_id(v)));
  for (auto e : t.edges.items()) {
    auto f = h.edge_index(lf.loop_to_edge.count(g.edge(e).id) ? lf.loop_to_edge.at(g.edge(e).id) : g.edge(e).id);
    out.edges.insert(f);
    out.nodes.insert(h.edge(f).first);
    out.nodes.insert(h.edge(f).second);
  }
  return out;
}

Tubing ghost_image(const Pseudograph& g, const GhostMap& lf, const Tubing& tubes) {
  Tubing out;
  for (const auto& t : tubes) out.push_back(ghost_image(g, lf, t));
  canonicalize(out);
  return out;
}

ConeRealization cone_realization(const Pseudograph& g) {
  if (g.loopless()) throw GraphError("cone realization needs a graph with loops; use realize");
  if (!g.connected()) throw GraphError("cone realization needs a connected graph");
  ConeRealization cone;
  cone.loop_free = loop_free(g);
  cone.realization = realize(cone.loop_free.graph);
  const auto& h = cone.loop_free.graph;
  for (const auto& ghost : cone.loop_free.ghost_nodes) {
    Tube s{IndexSet::single(h.node_index(ghost)), IndexSet{}};
    cone.removed_tubes.push_back(s);
    for (auto& half : cone.realization.hrep.halfspaces)
      if (half.tube == s) half.removed = true;
  }
  for (std::size_t i = 0; i < cone.realization.vertices.size(); ++i) {
    const auto& tubing = cone.realization.vertices[i].tubing;
    bool ghosted = std::any_of(cone.removed_tubes.begin(), cone.removed_tubes.end(),
                               [&](const Tube& s) { return holds(tubing, s); });
    if (!ghosted) cone.kept.push_back(i);
  }
  return cone;
}

std::string check_cone(const Pseudograph& g, const ConeRealization& cone) {
  const auto& lf = cone.loop_free;
  const auto& h = lf.graph;
  auto removed = std::count_if(cone.realization.hrep.halfspaces.begin(), cone.realization.hrep.halfspaces.end(),
                               [](const Halfspace& x) { return x.removed; });
  if (static_cast<std::size_t>(removed) != lf.ghost_nodes.size())
    return std::to_string(removed) + " halfspaces removed for " + std::to_string(lf.ghost_nodes.size()) +
           " ghost nodes";
  auto fp = enumerate_tubings(g);
  std::set<Tubing> images, kept;
  for (auto face : fp.vertices()) images.insert(ghost_image(g, lf, fp.tubing(face)));
  for (auto i : cone.kept) {
    auto t = cone.realization.vertices[i].tubing;
    canonicalize(t);
    kept.insert(t);
  }
  if (images != kept)
    return "surviving vertices (" + std::to_string(kept.size()) + ") differ from the images of the " +
           std::to_string(images.size()) + " maximal tubings";
  for (std::size_t f = 0; f < fp.size(); ++f) {
    auto tubing = fp.tubing(f);
    auto image = ghost_image(g, lf, tubing);
    if (!is_tubing(h, image)) return "image of " + describe(g, tubing) + " is not a tubing";
    bool reaches_ghost = std::any_of(cone.removed_tubes.begin(), cone.removed_tubes.end(), [&](const Tube& s) {
      auto with = image;
      with.push_back(s);
      return is_tubing(h, with);
    });
    bool compact = excludes_all_loops(g, tubing);
    if (compact != fp.is_compact(f)) return "compact flag of " + describe(g, tubing) + " disagrees";
    if (compact == reaches_ghost)
      return describe(g, tubing) + (compact ? " excludes every loop but meets" : " keeps a loop but misses") +
             " a removed facet";
  }
  return {};
}

InequalityCheck check_join_inequality(const Pseudograph& g, std::size_t limit) {
  require_loopless_connected(g, "the join inequality");
  InequalityCheck out;
  auto fp = enumerate_tubings(g);
  const auto& tubes = fp.tubes();
  std::vector<Tubing> vertex_tubings;
  std::vector<std::vector<Integer>> values;
  for (auto face : fp.vertices()) {
    vertex_tubings.push_back(fp.tubing(face));
    values.push_back(edge_values(g, vertex_tubings.back()));
  }
  auto bundle_compatible = [&](const Tube& a, const Tube& b) {
    for (std::size_t i = 0; i < g.bundles().size(); ++i) {
      auto ea = a.edges & IndexSet(g.bundle_mask(i)), eb = b.edges & IndexSet(g.bundle_mask(i));
      if (!ea.subset_of(eb) && !eb.subset_of(ea)) return false;
    }
    return true;
  };
  auto whole = whole_graph(g);
  for (std::size_t i = 0; i < tubes.size(); ++i) {
    for (std::size_t j = 0; j < tubes.size(); ++j) {
      const auto &a = tubes[i], &b = tubes[j];
      if (i == j || !bundle_compatible(a, b)) continue;
      bool meet = a.nodes.intersects(b.nodes);
      bool adjacent = !meet && neighborhood(g, a.nodes).intersects(b.nodes);
      bool crossing = meet && !a.nodes.subset_of(b.nodes) && !b.nodes.subset_of(a.nodes);
      if (!adjacent && !crossing) continue;
      // intersection pieces, which must be tubes
      std::vector<Tube> meets;
      auto common = a.nodes & b.nodes;
      auto common_edges = a.edges & b.edges;
      bool pieces_are_tubes = true;
      while (!common.empty()) {
        auto piece = IndexSet::single(common.items().front());
        for (bool grew = true; grew;) {
          grew = false;
          for (auto e : common_edges.items()) {
            const auto& rec = g.edge(e);
            if (piece.contains(rec.first) != piece.contains(rec.second)) {
              piece.insert(rec.first);
              piece.insert(rec.second);
              grew = true;
            }
          }
        }
        IndexSet piece_edges;
        for (auto e : common_edges.items())
          if (piece.contains(g.edge(e).first)) piece_edges.insert(e);
        Tube t{piece, piece_edges};
        if (!is_tube(g, t)) pieces_are_tubes = false;
        meets.push_back(t);
        common = common - piece;
      }
      if (!pieces_are_tubes) continue;
      // minimal joins: one extra edge for every bundle inside the union left uncovered
      auto nodes = a.nodes | b.nodes;
      auto base_edges = a.edges | b.edges;
      std::vector<std::vector<std::size_t>> choices;
      for (std::size_t k = 0; k < g.bundles().size(); ++k) {
        const auto& rec = g.edge(g.bundles()[k].front());
        if (nodes.contains(rec.first) && nodes.contains(rec.second) &&
            !base_edges.intersects(IndexSet(g.bundle_mask(k))))
          choices.push_back(g.bundles()[k]);
      }
      std::vector<Tube> joins;
      if (nodes == whole.nodes) {
        joins.push_back(whole);
      } else {
        std::vector<std::size_t> pick(choices.size(), 0);
        while (true) {
          Tube join{nodes, base_edges};
          for (std::size_t k = 0; k < choices.size(); ++k) join.edges.insert(choices[k][pick[k]]);
          if (is_tube(g, join)) joins.push_back(join);
          std::size_t k = 0;
          while (k < choices.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
          if (k == choices.size()) break;
        }
      }
      Integer meets_lambda = 0;
      for (const auto& m : meets) meets_lambda += lambda_value(g, m);
      auto la = lambda_value(g, a), lb = lambda_value(g, b);
      for (const auto& join : joins) {
        auto lj = lambda_value(g, join);
        auto extra = join.edges - base_edges;
        for (std::size_t v = 0; v < vertex_tubings.size(); ++v) {
          if (join != whole && !holds(vertex_tubings[v], join)) continue;
          Integer rhs = lj - lb + meets_lambda;
          for (auto e : extra.items()) rhs -= values[v][e];
          ++out.instances;
          if (!(la < rhs)) {
            out.failure = "a=" + describe(g, a) + " b=" + describe(g, b) + " join=" + describe(g, join) +
                          " at " + describe(g, vertex_tubings[v]) + ": " + to_string(la) + " >= " + to_string(rhs);
            return out;
          }
          if (limit && out.instances >= limit) return out;
        }
      }
    }
  }
  return out;
}

}  // namespace pseudoassoc
