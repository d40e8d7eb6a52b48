#include "pseudoassoc/construction.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

namespace pseudoassoc {

namespace {

FacetSet unite(const FacetSet& a, const FacetSet& b) {
  FacetSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes(const FacetSet& big, const FacetSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool face_order(const FacetSet& a, const FacetSet& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

Tube without_edge(const Pseudograph& g, std::size_t e) {
  auto t = whole_graph(g);
  t.edges.erase(e);
  return t;
}

GradedPoset poset_of(const Pseudograph& g, const std::vector<FacetSet>& sorted, const std::vector<FacetLabel>& labels) {
  std::map<FacetSet, std::size_t> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], i);
  GradedPoset p;
  p.dimension = static_cast<int>(g.dimension());
  p.rank.resize(sorted.size());
  p.above.resize(sorted.size());
  p.compact.resize(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& f = sorted[i];
    p.rank[i] = static_cast<int>(f.size());
    Tubing tubes;
    for (auto x : f) tubes.push_back(labels[x].tube);
    p.compact[i] = excludes_all_loops(g, tubes);
    for (std::size_t k = 0; k < f.size(); ++k) {
      FacetSet smaller = f;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
      auto it = index.find(smaller);
      if (it == index.end()) throw InconsistencyError("facet complex is not closed under subsets");
      p.above[i].push_back(it->second);
    }
  }
  p.finalize();
  return p;
}

void require_connected(const Pseudograph& g, const char* what) {
  if (!g.connected())
    throw GraphError(std::string(what) + " needs a connected graph; split it into components first");
}

}  // namespace

std::vector<Tube> full_tubes(const Pseudograph& g) {
  std::vector<Tube> out;
  for (const auto& t : enumerate_tubes(g))
    if (is_full(g, t)) out.push_back(t);
  return out;
}

Tubing derived_tubing(const Pseudograph& g, const BaseFace& face) {
  Tubing out;
  for (const auto& t : face.full) out.push_back({t.nodes, t.edges & face.kept});
  auto whole = whole_graph(g);
  if (face.kept != whole.edges) out.push_back({whole.nodes, face.kept});
  canonicalize(out);
  return out;
}

BaseComplex::BaseComplex(const Pseudograph& g) : graph_(g) {
  require_connected(g, "the base complex");
  for (const auto& t : full_tubes(g)) {
    facets_.push_back({FacetLabel::Kind::full, t, Pseudograph::npos});
  }
  // bundles first, then loops, each in edge order
  for (const auto& bundle : g.bundles()) {
    if (bundle.size() < 2) continue;
    for (auto e : bundle) {
      facets_.push_back({FacetLabel::Kind::exclusion, without_edge(g, e), e});
    }
  }
  for (auto l : g.loops()) {
    facets_.push_back({FacetLabel::Kind::exclusion, without_edge(g, l), l});
  }

  // full-tube part: tubings of the underlying simple graph
  auto simple = enumerate_tubings(underlying_simple(g));
  std::vector<Tubing> full_part;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    Tubing tubes;
    for (const auto& t : simple.tubing(i)) tubes.push_back(induced(g, t.nodes));
    full_part.push_back(tubes);
  }

  // exclusion part: a proper subset of every bundle, any set of loops
  std::vector<std::vector<std::size_t>> groups;
  std::vector<bool> proper;
  for (const auto& bundle : g.bundles())
    if (bundle.size() >= 2) {
      groups.push_back(bundle);
      proper.push_back(true);
    }
  for (auto l : g.loops()) {
    groups.push_back({l});
    proper.push_back(false);
  }
  std::vector<IndexSet> excluded_sets;
  std::function<void(std::size_t, IndexSet)> pick = [&](std::size_t k, IndexSet acc) {
    if (k == groups.size()) {
      excluded_sets.push_back(acc);
      return;
    }
    const auto& grp = groups[k];
    std::uint64_t limit = std::uint64_t{1} << grp.size();
    for (std::uint64_t m = 0; m < limit; ++m) {
      if (proper[k] && m == limit - 1) continue;
      auto next = acc;
      for (std::size_t i = 0; i < grp.size(); ++i)
        if ((m >> i) & 1u) next.insert(grp[i]);
      pick(k + 1, next);
    }
  };
  pick(0, IndexSet{});

  auto all_edges = IndexSet(g.all_edges_mask());
  std::vector<std::pair<FacetSet, BaseFace>> built;
  for (const auto& tubes : full_part) {
    for (auto excluded : excluded_sets) {
      BaseFace face{tubes, all_edges - excluded};
      built.emplace_back(facet_set(face), face);
    }
  }
  std::sort(built.begin(), built.end(), [](const auto& a, const auto& b) { return face_order(a.first, b.first); });
  for (auto& [s, face] : built) {
    lookup_.emplace(s, faces_.size());
    facet_sets_.push_back(s);
    faces_.push_back(std::move(face));
  }
  poset_ = poset_of(g, facet_sets_, facets_);
}

FacetSet BaseComplex::facet_set(const BaseFace& face) const {
  FacetSet out;
  for (const auto& t : face.full) {
    auto it = std::find_if(facets_.begin(), facets_.end(),
                           [&](const FacetLabel& f) { return f.kind == FacetLabel::Kind::full && f.tube == t; });
    if (it == facets_.end()) throw GraphError("base face uses a tube that is not full: " + describe(graph_, t));
    out.push_back(static_cast<std::uint32_t>(it - facets_.begin()));
  }
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (facets_[i].kind == FacetLabel::Kind::exclusion && !face.kept.contains(facets_[i].edge))
      out.push_back(static_cast<std::uint32_t>(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> BaseComplex::find(const FacetSet& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BaseComplex::meet(std::size_t a, std::size_t b) const {
  return find(unite(facet_sets_.at(a), facet_sets_.at(b)));
}

std::vector<Tube> promotion_order(const Pseudograph& g) {
  std::vector<Tube> out;
  auto whole = whole_graph(g);
  for (const auto& t : enumerate_tubes(g)) {
    if (is_full(g, t)) continue;
    if (t.nodes == whole.nodes && (whole.edges - t.edges).size() == 1) continue;
    out.push_back(t);
  }
  // enumerate_tubes is already canonical, which orders by element count first
  return out;
}

std::vector<Tube> raw_promotion_order(const Pseudograph& g) {
  std::vector<Tube> out;
  for (const auto& t : full_tubes(g))
    if (t.nodes.size() > 1) out.push_back(t);
  std::stable_sort(out.begin(), out.end(), [](const Tube& a, const Tube& b) { return a.nodes.size() > b.nodes.size(); });
  auto rest = promotion_order(g);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

PromotionState::PromotionState(const Pseudograph& g, bool strict, BaseKind base_kind) : graph_(g), strict_(strict) {
  auto whole = whole_graph(g);
  if (base_kind == BaseKind::raw) {
    require_connected(g, "the raw base");
    g.require_masks();
    // node facets, then one exclusion facet per edge of a multi-edge bundle and per loop
    std::vector<std::vector<std::uint32_t>> groups;
    auto& nodes = groups.emplace_back();
    for (std::size_t v = 0; v < g.node_count(); ++v) {
      nodes.push_back(static_cast<std::uint32_t>(facets_.size()));
      facets_.push_back({FacetLabel::Kind::full, induced(g, IndexSet::single(v)), Pseudograph::npos});
    }
    for (const auto& b : g.bundles()) {
      if (b.size() < 2) continue;
      auto& group = groups.emplace_back();
      for (auto e : b) {
        group.push_back(static_cast<std::uint32_t>(facets_.size()));
        facets_.push_back({FacetLabel::Kind::exclusion, without_edge(g, e), e});
      }
    }
    std::vector<std::uint32_t> rays;
    for (auto l : g.loops()) {
      rays.push_back(static_cast<std::uint32_t>(facets_.size()));
      facets_.push_back({FacetLabel::Kind::exclusion, without_edge(g, l), l});
    }
    // a face picks a proper subset of each simplex's facets and any set of ray apexes
    std::vector<FacetSet> partial{{}};
    auto extend = [&](const std::vector<std::uint32_t>& group, bool proper) {
      std::vector<FacetSet> next;
      std::uint64_t limit = std::uint64_t{1} << group.size();
      for (const auto& f : partial)
        for (std::uint64_t m = 0; m < limit; ++m) {
          if (proper && m == limit - 1) continue;
          auto h = f;
          for (std::size_t i = 0; i < group.size(); ++i)
            if ((m >> i) & 1u) h.push_back(group[i]);
          next.push_back(h);
        }
      partial = std::move(next);
    };
    for (const auto& group : groups) extend(group, true);
    extend(rays, false);
    for (auto& f : partial) {
      std::sort(f.begin(), f.end());
      faces_.insert(f);
    }
    for (const auto& t : raw_promotion_order(g)) {
      FacetSet s;
      if (t.nodes != whole.nodes)
        for (auto v : t.nodes.items()) s.push_back(static_cast<std::uint32_t>(v));
      if (!is_full(g, t))
        for (std::size_t i = g.node_count(); i < facets_.size(); ++i)
          if (excludes(g, t, facets_[i].edge)) s.push_back(static_cast<std::uint32_t>(i));
      std::sort(s.begin(), s.end());
      targets_.emplace(t, s);
    }
    return;
  }
  BaseComplex base(g);
  facets_ = base.facets();
  faces_.insert(base.facet_sets().begin(), base.facet_sets().end());
  for (const auto& t : promotion_order(g)) {
    FacetSet s;
    if (t.nodes != whole.nodes) {
      auto full = induced(g, t.nodes);
      for (std::size_t i = 0; i < facets_.size(); ++i)
        if (facets_[i].kind == FacetLabel::Kind::full && facets_[i].tube == full) s.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::size_t i = 0; i < facets_.size(); ++i)
      if (facets_[i].kind == FacetLabel::Kind::exclusion && excludes(g, t, facets_[i].edge))
        s.push_back(static_cast<std::uint32_t>(i));
    std::sort(s.begin(), s.end());
    targets_.emplace(t, s);
  }
}

std::vector<Tube> PromotionState::pending() const {
  std::vector<Tube> out;
  for (const auto& [t, s] : targets_) out.push_back(t);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

FacetSet PromotionState::target(const Tube& t) const {
  auto it = targets_.find(t);
  if (it == targets_.end()) throw GraphError("tube " + describe(graph_, t) + " is not waiting to be promoted");
  return it->second;
}

const PromotionStep& PromotionState::promote(const Tube& t) {
  auto it = targets_.find(t);
  if (it == targets_.end()) throw GraphError("tube " + describe(graph_, t) + " is not waiting to be promoted");
  if (strict_) {
    if (is_full(graph_, t)) {
      if (last_elements_ || (last_full_nodes_ && last_full_nodes_ < t.nodes.size()))
        throw GraphError("promotion order violated: full tube " + describe(graph_, t) + " comes too late");
      last_full_nodes_ = t.nodes.size();
    } else {
      for (const auto& [u, s] : targets_)
        if (is_full(graph_, u)) throw GraphError("promotion order violated: full tube " + describe(graph_, u) + " is still pending");
      if (last_elements_ > t.element_count())
        throw GraphError("promotion order violated: " + describe(graph_, t) + " has fewer elements than " +
                         describe(graph_, log_.back().tube));
      last_elements_ = t.element_count();
    }
  }
  FacetSet sigma = it->second;
  targets_.erase(it);
  if (!faces_.count(sigma)) throw InconsistencyError("promotion target of " + describe(graph_, t) + " is not a face");

  auto w = static_cast<std::uint32_t>(facets_.size());
  facets_.push_back({FacetLabel::Kind::promoted, t, Pseudograph::npos});

  PromotionStep step;
  step.tube = t;
  step.elements = t.element_count();
  std::vector<FacetSet> removed, added;
  for (const auto& f : faces_) {
    if (includes(f, sigma)) {
      removed.push_back(f);
      continue;
    }
    bool all_compatible = std::all_of(f.begin(), f.end(), [&](auto x) { return compatible(graph_, facets_[x].tube, t); });
    if (all_compatible) ++step.label_compatible;
    if (faces_.count(unite(f, sigma))) {
      auto g = f;
      g.push_back(w);
      added.push_back(g);
    }
  }
  for (const auto& f : removed) faces_.erase(f);
  for (auto& f : added) faces_.insert(std::move(f));
  step.added = added.size();
  step.removed = removed.size();
  step.faces_after = faces_.size();

  // a pending face swallowed by this one moves onto the new facet
  for (auto& [u, s] : targets_)
    if (includes(s, sigma)) {
      FacetSet rest;
      std::set_difference(s.begin(), s.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
      rest.push_back(w);
      s = rest;
    }
  log_.push_back(step);
  return log_.back();
}

void PromotionState::promote_all() {
  for (const auto& t : raw_promotion_order(graph_))
    if (targets_.count(t)) promote(t);
}

std::vector<Tubing> PromotionState::labelled_faces() const {
  std::vector<Tubing> out;
  for (const auto& f : faces_) {
    Tubing tubes;
    for (auto x : f) tubes.push_back(facets_[x].tube);
    canonicalize(tubes);
    out.push_back(tubes);
  }
  return out;
}

GradedPoset PromotionState::poset() const {
  std::vector<FacetSet> sorted(faces_.begin(), faces_.end());
  std::sort(sorted.begin(), sorted.end(), face_order);
  return poset_of(graph_, sorted, facets_);
}

FacePoset construct_by_promotion(const Pseudograph& g) {
  PromotionState state(g);
  state.promote_all();
  auto tubes = enumerate_tubes(g);
  std::map<Tube, std::uint32_t> index;
  for (std::size_t i = 0; i < tubes.size(); ++i) index.emplace(tubes[i], static_cast<std::uint32_t>(i));
  std::set<Tube> seen;
  for (const auto& f : state.facets()) {
    if (!index.count(f.tube)) throw InconsistencyError("facet label " + describe(g, f.tube) + " is not a tube");
    if (!seen.insert(f.tube).second) throw InconsistencyError("facet label " + describe(g, f.tube) + " used twice");
  }
  std::vector<FacePoset::Face> faces;
  for (const auto& f : state.faces()) {
    FacePoset::Face face;
    for (auto x : f) face.push_back(index.at(state.facets()[x].tube));
    faces.push_back(face);
  }
  return FacePoset(g, std::move(tubes), std::move(faces));
}

namespace {

TruncationCertificate compare(const Pseudograph& g, const PromotionState& state) {
  TruncationCertificate cert;
  cert.log = state.log();
  auto direct = enumerate_tubings(g);
  auto built_poset = state.poset();
  auto iso = find_isomorphism(built_poset, direct.poset(), {true, 0});
  cert.isomorphic = iso && check_isomorphism(built_poset, direct.poset(), *iso, true).empty();

  std::set<Tubing> built, expected;
  for (auto& t : state.labelled_faces()) built.insert(t);
  for (std::size_t i = 0; i < direct.size(); ++i) expected.insert(direct.tubing(i));
  if (built != expected) {
    for (const auto& t : built)
      if (!expected.count(t)) {
        cert.detail = "construction produced " + describe(g, t) + ", which is not a tubing";
        return cert;
      }
    for (const auto& t : expected)
      if (!built.count(t)) {
        cert.detail = "tubing " + describe(g, t) + " is missing from the construction";
        return cert;
      }
  }
  for (const auto& step : cert.log)
    if (!is_full(g, step.tube) && step.added != step.label_compatible) {
      cert.detail = "promoting " + describe(g, step.tube) + " added " + std::to_string(step.added) +
                    " faces but " + std::to_string(step.label_compatible) + " faces were compatible";
      return cert;
    }
  if (!cert.isomorphic) {
    cert.detail = "no isomorphism between the constructed and enumerated posets";
    return cert;
  }
  cert.isomorphism = std::move(*iso);
  cert.ok = true;
  return cert;
}

TruncationCertificate verify_connected(const Pseudograph& g) {
  PromotionState state(g);
  state.promote_all();
  return compare(g, state);
}

}  // namespace

TruncationCertificate verify_truncation(const Pseudograph& g) {
  if (g.connected()) return verify_connected(g);
  // disconnected: build each component, then compare the product with a simplex
  TruncationCertificate cert;
  GradedPoset product = point_poset();
  for (const auto& comp : g.components()) {
    std::vector<std::string> nodes;
    for (auto v : comp) nodes.push_back(g.node_id(v));
    std::vector<EdgeSpec> edges;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (g.component_of(g.edge(e).first) == g.component_of(comp.front())) edges.push_back(g.edge_spec(e));
    Pseudograph piece(nodes, edges);
    auto part = verify_connected(piece);
    if (!part.ok) {
      part.detail = "component containing " + nodes.front() + ": " + part.detail;
      return part;
    }
    cert.log.insert(cert.log.end(), part.log.begin(), part.log.end());
    PromotionState state(piece);
    state.promote_all();
    product = poset_product(product, state.poset());
  }
  product = poset_product(product, simplex_poset(g.components().size()));
  auto direct = enumerate_tubings(g);
  auto iso = find_isomorphism(product, direct.poset(), {true, 0});
  if (!iso) {
    cert.detail = "component product times simplex is not isomorphic to the enumerated poset";
    return cert;
  }
  cert.isomorphism = std::move(*iso);
  cert.ok = true;
  return cert;
}

TruncationCertificate verify_promotion_sequence(const Pseudograph& g, const std::vector<Tube>& order,
                                                BaseKind base) {
  require_connected(g, "verify_promotion_sequence");
  PromotionState state(g, false, base);
  auto pending = state.pending();
  auto listed = order;
  std::sort(listed.begin(), listed.end(), canonical_less);
  if (listed != pending) throw GraphError("promotion sequence must list every pending tube exactly once");
  for (const auto& t : order) {
    try {
      state.promote(t);
    } catch (const InconsistencyError& e) {
      TruncationCertificate cert;
      cert.log = state.log();
      cert.detail = e.what();
      return cert;
    }
  }
  return compare(g, state);
}

}  // namespace pseudoassoc
