#include "pseudoassoc/tubings.hpp"

#include <algorithm>
#include <functional>

#include <boost/dynamic_bitset.hpp>

namespace pseudoassoc {

namespace {

constexpr std::size_t kMaxEnumerationNodes = 26;

bool connected_nodes(const Pseudograph& g, std::uint64_t nodes) {
  if (!nodes) return false;
  std::uint64_t reached = nodes & (~nodes + 1);
  std::uint64_t frontier = reached;
  while (frontier) {
    std::uint64_t next = 0;
    for (auto b = frontier; b; b &= b - 1) next |= g.neighbor_mask(static_cast<std::size_t>(std::countr_zero(b)));
    next &= nodes & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == nodes;
}

}  // namespace

std::vector<Tube> enumerate_tubes(const Pseudograph& g) {
  g.require_masks();
  if (g.node_count() > kMaxEnumerationNodes)
    throw GraphError("tube enumeration is limited to " + std::to_string(kMaxEnumerationNodes) + " nodes");
  auto whole = whole_graph(g);
  std::vector<Tube> out;
  for (std::uint64_t nodes = 1; nodes < (std::uint64_t{1} << g.node_count()); ++nodes) {
    if (!connected_nodes(g, nodes)) continue;
    IndexSet node_set(nodes);
    // each internal bundle contributes a nonempty subset, each internal loop in/out
    std::vector<std::vector<std::size_t>> choices;
    for (std::size_t b = 0; b < g.bundles().size(); ++b) {
      const auto& rec = g.edge(g.bundles()[b].front());
      if (node_set.contains(rec.first) && node_set.contains(rec.second)) choices.push_back(g.bundles()[b]);
    }
    std::vector<std::size_t> loops;
    for (auto l : g.loops())
      if (node_set.contains(g.edge(l).first)) loops.push_back(l);

    std::function<void(std::size_t, IndexSet)> pick = [&](std::size_t k, IndexSet edges) {
      if (k == choices.size()) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << loops.size()); ++m) {
          auto all = edges;
          for (std::size_t i = 0; i < loops.size(); ++i)
            if ((m >> i) & 1u) all.insert(loops[i]);
          Tube t{node_set, all};
          if (t != whole) out.push_back(t);
        }
        return;
      }
      const auto& bundle = choices[k];
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << bundle.size()); ++m) {
        auto next = edges;
        for (std::size_t i = 0; i < bundle.size(); ++i)
          if ((m >> i) & 1u) next.insert(bundle[i]);
        pick(k + 1, next);
      }
    };
    pick(0, IndexSet{});
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

void canonicalize(Tubing& tubes) { std::sort(tubes.begin(), tubes.end(), canonical_less); }

bool is_tubing(const Pseudograph& g, const Tubing& tubes) {
  for (std::size_t i = 0; i < tubes.size(); ++i) {
    if (!is_tube(g, tubes[i])) return false;
    for (std::size_t j = i + 1; j < tubes.size(); ++j)
      if (!compatible(g, tubes[i], tubes[j])) return false;
  }
  if (g.components().size() > 1) {
    std::size_t present = 0;
    for (const auto& comp : g.components()) {
      auto t = induced(g, IndexSet::of(comp));
      if (std::find(tubes.begin(), tubes.end(), t) != tubes.end()) ++present;
    }
    if (present == g.components().size()) return false;
  }
  return true;
}

bool excludes_all_loops(const Pseudograph& g, const Tubing& tubes) {
  for (auto l : g.loops()) {
    bool hit = std::any_of(tubes.begin(), tubes.end(), [&](const Tube& t) { return excludes(g, t, l); });
    if (!hit) return false;
  }
  return true;
}

FacePoset::FacePoset(Pseudograph graph, std::vector<Tube> tubes, std::vector<Face> faces)
    : graph_(std::move(graph)), tubes_(std::move(tubes)), faces_(std::move(faces)) {
  for (auto& f : faces_) std::sort(f.begin(), f.end());
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (std::size_t i = 0; i < tubes_.size(); ++i) tube_lookup_.emplace(tubes_[i], i);
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (!lookup_.emplace(faces_[i], i).second) throw InconsistencyError("duplicate face in face poset");
  }
  poset_.dimension = static_cast<int>(graph_.dimension());
  poset_.rank.resize(faces_.size());
  poset_.above.resize(faces_.size());
  poset_.compact.resize(faces_.size());
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const auto& f = faces_[i];
    poset_.rank[i] = static_cast<int>(f.size());
    poset_.compact[i] = excludes_all_loops(graph_, tubing(i));
    for (std::size_t k = 0; k < f.size(); ++k) {
      Face smaller;
      smaller.reserve(f.size() - 1);
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != k) smaller.push_back(f[j]);
      auto it = lookup_.find(smaller);
      if (it == lookup_.end()) throw InconsistencyError("face poset is not closed under removing a tube");
      poset_.above[i].push_back(it->second);
    }
  }
  poset_.finalize();
}

Tubing FacePoset::tubing(std::size_t face) const {
  Tubing out;
  for (auto i : faces_.at(face)) out.push_back(tubes_[i]);
  return out;
}

std::optional<std::size_t> FacePoset::tube_index(const Tube& t) const {
  auto it = tube_lookup_.find(t);
  if (it == tube_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FacePoset::find(const Tubing& tubes) const {
  Face f;
  for (const auto& t : tubes) {
    auto i = tube_index(t);
    if (!i) return std::nullopt;
    f.push_back(static_cast<std::uint32_t>(*i));
  }
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) return std::nullopt;
  auto it = lookup_.find(f);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FacePoset::vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (poset_.rank[i] == poset_.dimension) out.push_back(i);
  return out;
}

TooManyFaces::TooManyFaces(std::size_t tubes_, std::size_t limit_)
    : std::runtime_error("more than " + std::to_string(limit_) + " tubings (" + std::to_string(tubes_) +
                         " tubes); rerun with --force to enumerate anyway"),
      tubes(tubes_),
      limit(limit_) {}

namespace {

using Bits = boost::dynamic_bitset<>;

struct TubingSearch {
  const Pseudograph& g;
  std::vector<Tube> tubes;
  std::vector<Bits> compat;  // compat[i]: compatible tubes with a larger index
  std::vector<bool> component_tube;
  std::size_t component_count;

  explicit TubingSearch(const Pseudograph& graph) : g(graph), tubes(enumerate_tubes(graph)) {
    auto n = tubes.size();
    compat.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (compatible(g, tubes[i], tubes[j])) compat[i].set(j);
    component_count = g.components().size();
    component_tube.assign(n, false);
    if (component_count > 1) {
      for (const auto& comp : g.components()) {
        auto t = induced(g, IndexSet::of(comp));
        auto it = std::find(tubes.begin(), tubes.end(), t);
        if (it != tubes.end()) component_tube[static_cast<std::size_t>(it - tubes.begin())] = true;
      }
    }
  }

  // Calls visit(face) for every tubing; visit returns false to stop.
  template <class Visit>
  void run(Visit&& visit) {
    std::vector<std::uint32_t> current;
    Bits all(tubes.size());
    all.set();
    bool stop = false;
    std::function<void(const Bits&, std::size_t)> extend = [&](const Bits& allowed, std::size_t components_in) {
      if (!visit(current)) {
        stop = true;
        return;
      }
      for (auto i = allowed.find_first(); i != Bits::npos; i = allowed.find_next(i)) {
        auto in = components_in + (component_tube[i] ? 1 : 0);
        if (component_count > 1 && in == component_count) continue;
        current.push_back(static_cast<std::uint32_t>(i));
        extend(allowed & compat[i], in);
        current.pop_back();
        if (stop) return;
      }
    };
    extend(all, 0);
  }
};

}  // namespace

FacePoset enumerate_tubings(const Pseudograph& g, EnumerationLimit limit) {
  TubingSearch search(g);
  std::vector<FacePoset::Face> faces;
  search.run([&](const std::vector<std::uint32_t>& face) {
    faces.push_back(face);
    if (limit.max_faces && faces.size() > limit.max_faces) throw TooManyFaces(search.tubes.size(), limit.max_faces);
    return true;
  });
  return FacePoset(g, std::move(search.tubes), std::move(faces));
}

std::size_t count_tubings(const Pseudograph& g, std::size_t cap) {
  TubingSearch search(g);
  std::size_t n = 0;
  search.run([&](const std::vector<std::uint32_t>&) {
    ++n;
    return cap == 0 || n < cap;
  });
  return n;
}

std::vector<Tubing> maximal_tubings(const FacePoset& faces) {
  std::vector<Tubing> out;
  const auto& p = faces.poset();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (!p.below[i].empty()) continue;
    if (p.rank[i] != p.dimension)
      throw InconsistencyError("maximal tubing " + describe(faces.graph(), faces.tubing(i)) + " has " +
                               std::to_string(p.rank[i]) + " tubes, expected " + std::to_string(p.dimension));
    out.push_back(faces.tubing(i));
  }
  return out;
}

std::vector<Tubing> maximal_tubings(const Pseudograph& g) { return maximal_tubings(enumerate_tubings(g)); }

std::string describe(const Pseudograph& g, const Tubing& tubes) {
  std::string s = "[";
  for (std::size_t i = 0; i < tubes.size(); ++i) s += (i ? " " : "") + describe(g, tubes[i]);
  return s + "]";
}

}  // namespace pseudoassoc
