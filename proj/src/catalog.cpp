#include "pseudoassoc/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "pseudoassoc/tubings.hpp"

namespace pseudoassoc {

namespace {

std::string node(std::size_t i) { return "v" + std::to_string(i); }
std::string simple_edge(std::size_t i, std::size_t j) { return "e" + std::to_string(i) + "_" + std::to_string(j); }

std::vector<std::string> node_list(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(node(i));
  return out;
}

void require_positive(std::size_t n, const char* family) {
  if (n == 0) throw GraphError(std::string(family) + " needs n >= 1");
}

std::string format_vector(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Pseudograph path_graph(std::size_t n) {
  require_positive(n, "path");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({simple_edge(i, i + 1), node(i), node(i + 1)});
  return Pseudograph(node_list(n), edges);
}

Pseudograph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({simple_edge(i, i + 1), node(i), node(i + 1)});
  edges.push_back({simple_edge(1, n), node(1), node(n)});
  return Pseudograph(node_list(n), edges);
}

Pseudograph complete_graph(std::size_t n) {
  require_positive(n, "complete");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) edges.push_back({simple_edge(i, j), node(i), node(j)});
  return Pseudograph(node_list(n), edges);
}

Pseudograph edgeless_graph(std::size_t n) {
  require_positive(n, "edgeless");
  return Pseudograph(node_list(n), {});
}

Pseudograph multiedge_graph(std::size_t m) {
  require_positive(m, "multiedge");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i <= m; ++i) edges.push_back({"e" + std::to_string(i), node(1), node(2)});
  return Pseudograph(node_list(2), edges);
}

Pseudograph bouquet_graph(std::size_t m) {
  require_positive(m, "bouquet");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i <= m; ++i) edges.push_back({"l" + std::to_string(i), node(1), node(1)});
  return Pseudograph(node_list(1), edges);
}

std::vector<std::string> figure_ids() {
  return {"double-edge", "edge-loop", "double-edge-point", "doubled-path3", "doubled-path4", "two-loop-edge"};
}

Pseudograph figure_graph(std::string_view id) {
  if (id == "double-edge") return multiedge_graph(2);
  if (id == "edge-loop") return Pseudograph(node_list(2), {{"e1", "v1", "v2"}, {"l1", "v2", "v2"}});
  if (id == "double-edge-point") return Pseudograph(node_list(3), {{"e1", "v1", "v2"}, {"e2", "v1", "v2"}});
  if (id == "doubled-path3")
    return Pseudograph(node_list(3), {{"e1", "v1", "v2"}, {"e2", "v1", "v2"}, {"e3", "v2", "v3"}});
  if (id == "doubled-path4")
    return Pseudograph(node_list(4),
                       {{"e1", "v1", "v2"}, {"e2", "v1", "v2"}, {"e3", "v2", "v3"}, {"e4", "v3", "v4"}});
  if (id == "two-loop-edge")
    return Pseudograph(node_list(2), {{"e1", "v1", "v2"}, {"l1", "v1", "v1"}, {"l2", "v2", "v2"}});
  throw GraphError("unknown figure id \"" + std::string(id) + "\"");
}

FamilySpec parse_family(std::string_view family, std::string_view arg) {
  FamilySpec spec;
  std::string name(family);
  std::string param(arg);
  auto number = [](const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 6)
      throw GraphError("expected a size for " + what + ", got \"" + s + "\"");
    return static_cast<std::size_t>(std::stoul(s));
  };
  if (auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw GraphError("malformed family \"" + name + "\"");
    auto inner = name.substr(open + 1, name.size() - open - 2);
    name = name.substr(0, open);
    if (name != "multiedge" && name != "bouquet" && name != "figure")
      throw GraphError("family \"" + name + "\" takes no parameter");
    spec.family = name;
    if (name == "figure") {
      spec.figure = inner;
    } else {
      spec.n = number(inner, name);
      // the node count may be given as well and must agree
      if (!param.empty() && number(param, name) != (name == "multiedge" ? 2u : 1u))
        throw GraphError(name + " graphs have " + (name == "multiedge" ? "2 nodes" : "1 node"));
    }
  } else if (name == "figure") {
    spec.family = name;
    spec.figure = param;
  } else if (name == "path" || name == "cycle" || name == "complete" || name == "edgeless" || name == "multiedge" ||
             name == "bouquet") {
    spec.family = name;
    spec.n = number(param, name);
  } else {
    auto ids = figure_ids();
    if (std::find(ids.begin(), ids.end(), name) == ids.end()) throw GraphError("unknown family \"" + name + "\"");
    spec.family = "figure";
    spec.figure = name;
  }
  if (spec.family == "figure") figure_graph(spec.figure);  // validates the id
  return spec;
}

std::string describe(const FamilySpec& spec) {
  if (spec.family == "figure") return spec.figure;
  return spec.family + " " + std::to_string(spec.n);
}

Pseudograph standard_graph(const FamilySpec& spec) {
  const auto& f = spec.family;
  if (f == "path") return path_graph(spec.n);
  if (f == "cycle") return cycle_graph(spec.n);
  if (f == "complete") return complete_graph(spec.n);
  if (f == "edgeless") return edgeless_graph(spec.n);
  if (f == "multiedge") return multiedge_graph(spec.n);
  if (f == "bouquet") return bouquet_graph(spec.n);
  if (f == "figure") return figure_graph(spec.figure);
  throw GraphError("unknown family \"" + f + "\"");
}

std::vector<std::size_t> polygon_dissection_counts(std::size_t n) {
  require_positive(n, "dissection count");
  auto m = n + 2;
  std::vector<std::pair<std::size_t, std::size_t>> diagonals;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 2; j < m; ++j)
      if (!(i == 0 && j == m - 1)) diagonals.emplace_back(i, j);
  auto cross = [](auto a, auto b) {
    auto [i, j] = a;
    auto [k, l] = b;
    return (i < k && k < j && j < l) || (k < i && i < l && l < j);
  };
  std::vector<std::size_t> by_size(n, 0);
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    ++by_size[chosen.size()];
    for (std::size_t d = start; d < diagonals.size(); ++d) {
      bool ok = std::none_of(chosen.begin(), chosen.end(), [&](auto c) { return cross(diagonals[c], diagonals[d]); });
      if (!ok) continue;
      chosen.push_back(d);
      grow(d + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  // k diagonals cut out a face of dimension n - 1 - k
  std::vector<std::size_t> out(n, 0);
  for (std::size_t k = 0; k < n; ++k) out[n - 1 - k] = by_size[k];
  return out;
}

std::vector<std::size_t> ordered_partition_counts(std::size_t n) {
  require_positive(n, "ordered partition count");
  // count surjections [n] -> [b] by brute force over all maps
  std::vector<std::size_t> out(n, 0);
  for (std::size_t b = 1; b <= n; ++b) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= b;
    std::size_t count = 0;
    std::vector<std::size_t> digits(n);
    for (std::size_t code = 0; code < total; ++code) {
      auto c = code;
      std::uint64_t used = 0;
      for (std::size_t i = 0; i < n; ++i) {
        used |= std::uint64_t{1} << (c % b);
        c /= b;
      }
      if (used == (std::uint64_t{1} << b) - 1) ++count;
    }
    out[n - b] = count;
  }
  return out;
}

std::vector<std::size_t> cyclohedron_counts(std::size_t n) {
  require_positive(n, "cyclohedron count");
  std::vector<std::size_t> out(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) out[j] += binomial(n - 1, k) * binomial(n - 1, k) * binomial(k, j);
  return out;
}

std::vector<std::size_t> simplex_counts(std::size_t n) {
  require_positive(n, "simplex count");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(binomial(n, k + 1));
  return out;
}

std::vector<std::size_t> ray_counts() { return {1, 1}; }

std::vector<std::size_t> product_counts(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::optional<std::vector<std::size_t>> expected_fvector(const FamilySpec& spec) {
  std::vector<std::size_t> counts;
  const auto& f = spec.family;
  if (f == "path") counts = polygon_dissection_counts(spec.n);
  else if (f == "cycle") counts = cyclohedron_counts(spec.n);
  else if (f == "complete") counts = ordered_partition_counts(spec.n);
  else if (f == "edgeless") counts = simplex_counts(spec.n);
  else if (f == "multiedge") counts = product_counts(ordered_partition_counts(spec.n), simplex_counts(2));
  else if (f == "bouquet") counts = product_counts(ordered_partition_counts(spec.n), ray_counts());
  else if (f == "figure" && spec.figure == "double-edge") counts = product_counts(simplex_counts(2), simplex_counts(2));
  else if (f == "figure" && spec.figure == "double-edge-point")
    counts = product_counts(product_counts(simplex_counts(2), simplex_counts(2)), simplex_counts(2));
  else return std::nullopt;
  counts.pop_back();  // the whole polytope
  return counts;
}

GradedPoset permutohedron_poset(std::size_t n) {
  require_positive(n, "permutohedron");
  if (n > 8) throw GraphError("permutohedron poset is limited to n <= 8");
  using Blocks = std::vector<std::uint32_t>;
  std::vector<Blocks> all;
  std::uint32_t full = (1u << n) - 1;
  Blocks current;
  std::function<void(std::uint32_t)> build = [&](std::uint32_t rest) {
    if (rest == 0) {
      all.push_back(current);
      return;
    }
    for (std::uint32_t b = rest; b; b = (b - 1) & rest) {
      current.push_back(b);
      build(rest & ~b);
      current.pop_back();
    }
  };
  build(full);
  std::map<Blocks, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  GradedPoset p;
  p.dimension = static_cast<int>(n) - 1;
  for (const auto& blocks : all) {
    p.rank.push_back(static_cast<int>(blocks.size()) - 1);
    std::vector<std::size_t> above;
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
      Blocks merged(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(k));
      merged.push_back(blocks[k] | blocks[k + 1]);
      merged.insert(merged.end(), blocks.begin() + static_cast<std::ptrdiff_t>(k) + 2, blocks.end());
      above.push_back(index.at(merged));
    }
    p.above.push_back(above);
  }
  p.finalize();
  return p;
}

std::vector<FamilyCheck> verify_family_identities() {
  std::vector<FamilyCheck> out;
  std::vector<FamilySpec> specs;
  for (std::size_t n = 1; n <= 5; ++n) specs.push_back({"path", n, ""});
  for (std::size_t n = 3; n <= 5; ++n) specs.push_back({"cycle", n, ""});
  for (std::size_t n = 1; n <= 4; ++n) specs.push_back({"complete", n, ""});
  for (std::size_t n = 1; n <= 4; ++n) specs.push_back({"edgeless", n, ""});
  for (std::size_t n = 1; n <= 3; ++n) specs.push_back({"multiedge", n, ""});
  for (std::size_t n = 1; n <= 3; ++n) specs.push_back({"bouquet", n, ""});
  specs.push_back({"figure", 0, "double-edge"});
  specs.push_back({"figure", 0, "double-edge-point"});
  for (const auto& spec : specs) {
    auto expected = expected_fvector(spec);
    auto got = enumerate_tubings(standard_graph(spec)).fvector();
    out.push_back({describe(spec), expected && *expected == got, expected ? format_vector(*expected) : "no oracle",
                   format_vector(got)});
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    auto why = check_permutohedral_prism(n);
    out.push_back({"multiedge " + std::to_string(n) + " ~ P" + std::to_string(n) + " x segment", why.empty(),
                   "isomorphism", why.empty() ? "isomorphism" : why});
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    auto why = check_permutohedral_cone(n);
    out.push_back({"bouquet " + std::to_string(n) + " ~ P" + std::to_string(n) + " x ray", why.empty(),
                   "isomorphism", why.empty() ? "isomorphism" : why});
  }
  std::vector<std::pair<std::string, Pseudograph>> disconnected = {
      {"double-edge-point", figure_graph("double-edge-point")},
      {"edgeless 2", edgeless_graph(2)},
      {"edgeless 3", edgeless_graph(3)},
      {"edge-loop + path 2", Pseudograph({"v1", "v2", "v3", "v4"},
                                         {{"e1", "v1", "v2"}, {"l1", "v2", "v2"}, {"e3_4", "v3", "v4"}})},
  };
  for (const auto& [name, g] : disconnected) {
    auto why = check_component_product(g);
    out.push_back({name + " ~ components x simplex", why.empty(), "isomorphism", why.empty() ? "isomorphism" : why});
  }
  {
    auto cube = poset_product(poset_product(simplex_poset(2), simplex_poset(2)), simplex_poset(2));
    auto fp = enumerate_tubings(figure_graph("double-edge-point"));
    bool iso = find_isomorphism(fp.poset(), cube).has_value();
    out.push_back({"double-edge-point ~ cube", iso, "isomorphism", iso ? "isomorphism" : "none found"});
  }
  return out;
}

namespace {

// Faces of a product, addressed by one face per factor.
std::size_t product_position(const std::vector<const GradedPoset*>& factors, const std::vector<std::size_t>& at) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) k = k * factors[i]->size() + at[i];
  return k;
}

GradedPoset product_of(const std::vector<const GradedPoset*>& factors) {
  auto p = point_poset();
  for (auto f : factors) p = poset_product(p, *f);
  return p;
}

}  // namespace

std::string check_permutohedral_prism(std::size_t n) {
  auto g = multiedge_graph(n);
  auto kg = enumerate_tubings(g);
  auto gamma_n = enumerate_tubings(complete_graph(n));
  auto gamma_2 = enumerate_tubings(complete_graph(2));
  if (!find_isomorphism(gamma_n.poset(), permutohedron_poset(n)))
    return "complete graph on " + std::to_string(n) + " nodes is not the permutohedron";
  std::vector<const GradedPoset*> factors = {&gamma_n.poset(), &gamma_2.poset()};
  auto product = product_of(factors);
  std::vector<std::size_t> map(kg.size());
  for (std::size_t i = 0; i < kg.size(); ++i) {
    Tubing first, second;
    for (const auto& t : kg.tubing(i)) {
      if (t.edges.empty()) {
        second.push_back(Tube{t.nodes, IndexSet{}});  // node a_i -> node b_i
      } else {
        // induced on the nodes v_i with e_i in the tube
        IndexSet nodes(t.edges.bits());
        first.push_back(induced(gamma_n.graph(), nodes));
      }
    }
    auto a = gamma_n.find(first), b = gamma_2.find(second);
    if (!a || !b) return "psi image of " + describe(g, kg.tubing(i)) + " is not a pair of tubings";
    map[i] = product_position(factors, {*a, *b});
  }
  return check_isomorphism(kg.poset(), product, map);
}

std::string check_permutohedral_cone(std::size_t n) {
  auto g = bouquet_graph(n);
  auto kg = enumerate_tubings(g);
  auto gamma_n = enumerate_tubings(complete_graph(n));
  auto ray = ray_poset();
  std::vector<const GradedPoset*> factors = {&gamma_n.poset(), &ray};
  auto product = product_of(factors);
  std::vector<std::size_t> map(kg.size());
  for (std::size_t i = 0; i < kg.size(); ++i) {
    Tubing first;
    std::size_t apex = 0;
    for (const auto& t : kg.tubing(i)) {
      if (t.edges.empty()) apex = 1;
      else first.push_back(induced(gamma_n.graph(), IndexSet(t.edges.bits())));
    }
    auto a = gamma_n.find(first);
    if (!a) return "psi image of " + describe(g, kg.tubing(i)) + " is not a tubing";
    map[i] = product_position(factors, {*a, apex});
  }
  return check_isomorphism(kg.poset(), product, map, true);
}

std::string check_component_product(const Pseudograph& g) {
  if (g.connected()) return "graph is connected";
  auto kg = enumerate_tubings(g);
  std::vector<FacePoset> parts;
  std::vector<Tube> component_tubes;
  for (const auto& comp : g.components()) {
    std::vector<std::string> nodes;
    for (auto v : comp) nodes.push_back(g.node_id(v));
    std::vector<EdgeSpec> edges;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (g.component_of(g.edge(e).first) == g.component_of(comp.front())) edges.push_back(g.edge_spec(e));
    parts.push_back(enumerate_tubings(Pseudograph(nodes, edges)));
    component_tubes.push_back(induced(g, IndexSet::of(comp)));
  }
  auto simplex = simplex_poset(parts.size());
  std::vector<const GradedPoset*> factors;
  for (const auto& p : parts) factors.push_back(&p.poset());
  factors.push_back(&simplex);
  auto product = product_of(factors);
  std::vector<std::size_t> map(kg.size());
  for (std::size_t i = 0; i < kg.size(); ++i) {
    std::vector<Tubing> pieces(parts.size());
    std::size_t mask = 0;
    for (const auto& t : kg.tubing(i)) {
      auto c = g.component_of(t.nodes.items().front());
      if (t == component_tubes[c]) {
        mask |= std::size_t{1} << c;
        continue;
      }
      const auto& pg = parts[c].graph();
      Tube local;
      for (const auto& id : node_ids(g, t.nodes)) local.nodes.insert(pg.node_index(id));
      for (const auto& id : edge_ids(g, t.edges)) local.edges.insert(pg.edge_index(id));
      pieces[c].push_back(local);
    }
    std::vector<std::size_t> at;
    for (std::size_t c = 0; c < parts.size(); ++c) {
      auto k = parts[c].find(pieces[c]);
      if (!k) return "component part of " + describe(g, kg.tubing(i)) + " is not a tubing";
      at.push_back(*k);
    }
    at.push_back(mask);
    map[i] = product_position(factors, at);
  }
  return check_isomorphism(kg.poset(), product, map, true);
}

std::string format_report(const std::vector<FamilyCheck>& checks) {
  std::ostringstream out;
  for (const auto& c : checks)
    out << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (expected " << c.expected << ", got " << c.got << ")\n";
  return out.str();
}

std::string format_report_json(const std::vector<FamilyCheck>& checks) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"got", c.got}});
  return arr.dump(2) + "\n";
}

}  // namespace pseudoassoc
