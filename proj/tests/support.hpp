#pragma once

// Shared helpers for the test binaries: corpus loading, a seeded random
// pseudograph generator and brute-force oracles written straight from the
// definitions (no use of the library's tube or tubing code).

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include "pseudoassoc/pseudograph.hpp"

#ifndef PSEUDOASSOC_DATA_DIR
#error "PSEUDOASSOC_DATA_DIR must point at the corpus directory"
#endif

namespace testsupport {

using pseudoassoc::Pseudograph;

inline std::string data_path(const std::string& name) { return std::string(PSEUDOASSOC_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline Pseudograph load(const std::string& name) { return pseudoassoc::parse_graph(read_text(data_path(name + ".json"))); }

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {
      "point",     "loop",        "d2",           "path3",         "path4",         "cycle3",
      "cycle4",    "complete4",   "multiedge3",   "bouquet2",      "edgeless2",     "edge-loop",
      "two-loop-edge", "doubled-path3", "doubled-path4", "double-edge-point"};
  return names;
}

inline std::vector<std::pair<std::string, Pseudograph>> corpus() {
  std::vector<std::pair<std::string, Pseudograph>> out;
  for (const auto& n : corpus_names()) out.emplace_back(n, load(n));
  return out;
}

/// Random pseudograph with up to `max_nodes` nodes and `max_edges` edges,
/// loops and parallel edges allowed.
inline Pseudograph random_graph(std::mt19937& rng, int max_nodes = 4, int max_edges = 5) {
  int n = std::uniform_int_distribution<int>(1, max_nodes)(rng);
  int m = std::uniform_int_distribution<int>(0, max_edges)(rng);
  std::vector<std::string> nodes;
  for (int i = 1; i <= n; ++i) nodes.push_back("v" + std::to_string(i));
  std::vector<pseudoassoc::EdgeSpec> edges;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 1; i <= m; ++i) edges.push_back({"e" + std::to_string(i), nodes[pick(rng)], nodes[pick(rng)]});
  return Pseudograph(nodes, edges);
}

// ---- brute-force oracle -------------------------------------------------

/// A subgraph as plain sorted index lists.
struct Sub {
  std::vector<int> nodes;
  std::vector<int> edges;
  bool operator<(const Sub& o) const { return std::tie(nodes, edges) < std::tie(o.nodes, o.edges); }
  bool operator==(const Sub& o) const { return nodes == o.nodes && edges == o.edges; }
};

inline bool has(const std::vector<int>& xs, int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

/// Tubes by the definition: nonempty, edges inside the node set, connected
/// through its own edges, every adjacent pair of nodes joined by one of its
/// edges, and not the whole graph.
inline std::vector<Sub> brute_tubes(const Pseudograph& g) {
  int n = static_cast<int>(g.node_count()), m = static_cast<int>(g.edge_count());
  std::vector<Sub> out;
  for (int nm = 1; nm < (1 << n); ++nm) {
    Sub base;
    for (int v = 0; v < n; ++v)
      if (nm >> v & 1) base.nodes.push_back(v);
    std::vector<int> inside;
    for (int e = 0; e < m; ++e) {
      const auto& r = g.edge(e);
      if (has(base.nodes, static_cast<int>(r.first)) && has(base.nodes, static_cast<int>(r.second))) inside.push_back(e);
    }
    for (int em = 0; em < (1 << inside.size()); ++em) {
      Sub s = base;
      for (std::size_t i = 0; i < inside.size(); ++i)
        if (em >> i & 1) s.edges.push_back(inside[i]);
      if (static_cast<int>(s.nodes.size()) == n && static_cast<int>(s.edges.size()) == m) continue;
      // connectivity by flood fill
      std::set<int> seen{s.nodes.front()};
      for (bool grew = true; grew;) {
        grew = false;
        for (int e : s.edges) {
          int a = static_cast<int>(g.edge(e).first), b = static_cast<int>(g.edge(e).second);
          if (seen.count(a) != seen.count(b)) {
            seen.insert(a);
            seen.insert(b);
            grew = true;
          }
        }
      }
      if (seen.size() != s.nodes.size()) continue;
      bool joined = true;
      for (int e = 0; e < m && joined; ++e) {
        int a = static_cast<int>(g.edge(e).first), b = static_cast<int>(g.edge(e).second);
        if (a == b || !has(s.nodes, a) || !has(s.nodes, b)) continue;
        bool some = false;
        for (int f : s.edges) {
          int c = static_cast<int>(g.edge(f).first), d = static_cast<int>(g.edge(f).second);
          if ((c == a && d == b) || (c == b && d == a)) some = true;
        }
        joined = some;
      }
      if (joined) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool brute_subset(const Sub& a, const Sub& b) {
  return std::includes(b.nodes.begin(), b.nodes.end(), a.nodes.begin(), a.nodes.end()) &&
         std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end());
}

inline bool brute_compatible(const Pseudograph& g, const Sub& a, const Sub& b) {
  if (a == b) return false;
  if (brute_subset(a, b) || brute_subset(b, a)) return true;
  for (int v : a.nodes)
    if (has(b.nodes, v)) return false;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    int x = static_cast<int>(g.edge(e).first), y = static_cast<int>(g.edge(e).second);
    if ((has(a.nodes, x) && has(b.nodes, y)) || (has(a.nodes, y) && has(b.nodes, x))) return false;
  }
  return true;
}

/// Component tubes: each connected component with all of its edges.
inline std::vector<Sub> brute_component_tubes(const Pseudograph& g) {
  int n = static_cast<int>(g.node_count());
  std::vector<int> label(n);
  for (int v = 0; v < n; ++v) label[v] = v;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      int a = static_cast<int>(g.edge(e).first), b = static_cast<int>(g.edge(e).second);
      int m = std::min(label[a], label[b]);
      if (label[a] != m || label[b] != m) {
        label[a] = label[b] = m;
        changed = true;
      }
    }
  }
  std::map<int, Sub> comps;
  for (int v = 0; v < n; ++v) comps[label[v]].nodes.push_back(v);
  for (std::size_t e = 0; e < g.edge_count(); ++e) comps[label[g.edge(e).first]].edges.push_back(static_cast<int>(e));
  std::vector<Sub> out;
  for (auto& [k, s] : comps) out.push_back(s);
  return out;
}

/// Number of tubings of each size (index = tube count).
inline std::vector<std::size_t> brute_tubing_sizes(const Pseudograph& g) {
  auto tubes = brute_tubes(g);
  auto comps = brute_component_tubes(g);
  std::vector<std::size_t> count(tubes.size() + 2, 0);
  std::vector<int> chosen;
  auto forbidden = [&] {
    return std::all_of(comps.begin(), comps.end(), [&](const Sub& c) {
      return std::any_of(chosen.begin(), chosen.end(), [&](int i) { return tubes[i] == c; });
    });
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!forbidden()) ++count[chosen.size()];
    for (std::size_t i = from; i < tubes.size(); ++i) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](int j) { return brute_compatible(g, tubes[i], tubes[j]); });
      if (!ok) continue;
      chosen.push_back(static_cast<int>(i));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  while (count.size() > 1 && count.back() == 0) count.pop_back();
  return count;
}

/// f-vector (f_0 .. f_{d-1}) from the brute-force tubing counts.
inline std::vector<std::size_t> brute_fvector(const Pseudograph& g) {
  auto sizes = brute_tubing_sizes(g);
  std::size_t d = g.dimension();
  std::vector<std::size_t> f(d, 0);
  for (std::size_t k = 1; k < sizes.size(); ++k)
    if (k <= d) f[d - k] = sizes[k];
  return f;
}

}  // namespace testsupport
