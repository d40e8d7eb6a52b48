#include <doctest.h>

#include "json.hpp"
#include "pseudoassoc/catalog.hpp"
#include "pseudoassoc/io.hpp"
#include "pseudoassoc/tubings.hpp"
#include "support.hpp"

using namespace pseudoassoc;
using testsupport::Sub;

namespace {

Sub as_sub(const Tube& t) {
  Sub s;
  for (auto v : t.nodes.items()) s.nodes.push_back(static_cast<int>(v));
  for (auto e : t.edges.items()) s.edges.push_back(static_cast<int>(e));
  return s;
}

std::vector<std::string> described(const Pseudograph& g, const std::vector<Tube>& tubes) {
  std::vector<std::string> out;
  for (const auto& t : tubes) out.push_back(describe(g, t));
  return out;
}

}  // namespace

TEST_CASE("tube membership") {
  auto p = path_graph(3);
  CHECK(is_tube(p, {"v1"}, {}));
  CHECK_FALSE(is_tube(p, {"v1", "v2", "v3"}, {"e1_2", "e2_3"}));
  CHECK(is_tube(p, {"v1", "v2", "v3"}, {"e1_2"}) == false);  // not connected
  CHECK_THROWS_AS(is_tube(p, {"v9"}, {}), GraphError);

  // two nodes joined in G but no joining edge kept
  Pseudograph g({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "a", "b"}, {"z", "b", "c"}, {"w", "a", "c"}});
  CHECK_FALSE(is_tube(g, {"a", "b", "c"}, {"z", "w"}));
  CHECK(is_tube(g, {"a", "b", "c"}, {"x", "z", "w"}));
  CHECK(is_tube(g, {"a", "b"}, {"y"}));
}

TEST_CASE("tubes of small graphs") {
  auto d2 = testsupport::load("d2");
  CHECK(described(d2, enumerate_tubes(d2)) == std::vector<std::string>{"{v1}", "{v2}", "{v1,v2|e1}", "{v1,v2|e2}"});
  CHECK(enumerate_tubes(testsupport::load("two-loop-edge")).size() == 7);
  CHECK(enumerate_tubes(testsupport::load("point")).empty());
}

TEST_CASE("compatibility") {
  auto d2 = testsupport::load("d2");
  auto v1 = make_tube(d2, {"v1"});
  auto a = make_tube(d2, {"v1", "v2"}, {"e1"});
  auto b = make_tube(d2, {"v1", "v2"}, {"e2"});
  CHECK(compatible(d2, v1, a));
  CHECK_FALSE(compatible(d2, a, b));
  CHECK_FALSE(compatible(d2, make_tube(d2, {"v1"}), make_tube(d2, {"v2"})));
  auto e = edgeless_graph(2);
  CHECK(compatible(e, make_tube(e, {"v1"}), make_tube(e, {"v2"})));
  // adjacent through a single edge
  auto p = path_graph(4);
  CHECK_FALSE(compatible(p, make_tube(p, {"v1"}), make_tube(p, {"v2", "v3"}, {"e2_3"})));
  CHECK(compatible(p, make_tube(p, {"v1"}), make_tube(p, {"v3", "v4"}, {"e3_4"})));
}

TEST_CASE("face counts of small examples") {
  auto fp = enumerate_tubings(path_graph(3));
  CHECK(fp.fvector() == std::vector<std::size_t>{5, 5});

  auto el = enumerate_tubings(testsupport::load("edge-loop"));
  CHECK(el.fvector() == std::vector<std::size_t>{3, 4});
  std::size_t compact_edges = 0;
  for (std::size_t i = 0; i < el.size(); ++i)
    if (el.poset().rank[i] == 1 && el.is_compact(i)) ++compact_edges;
  CHECK(compact_edges == 2);

  auto two = enumerate_tubings(edgeless_graph(2));
  CHECK(two.size() == 3);
  CHECK(two.fvector() == std::vector<std::size_t>{2});
  auto v1 = make_tube(two.graph(), {"v1"}), v2 = make_tube(two.graph(), {"v2"});
  CHECK_FALSE(two.find({v1, v2}).has_value());
  CHECK_FALSE(is_tubing(two.graph(), {v1, v2}));
}

TEST_CASE("maximal tubings") {
  CHECK(maximal_tubings(cycle_graph(3)).size() == 6);
  auto loop = maximal_tubings(bouquet_graph(1));
  REQUIRE(loop.size() == 1);
  CHECK(describe(bouquet_graph(1), loop[0]) == "[{v1}]");
  CHECK(maximal_tubings(testsupport::load("d2")).size() == 4);
}

TEST_CASE("poset products") {
  auto pentagon = enumerate_tubings(path_graph(3)).poset();
  auto prism = poset_product(pentagon, simplex_poset(2));
  CHECK(prism.fvector().front() == 10);
  auto hexagon = enumerate_tubings(cycle_graph(3)).poset();
  CHECK(poset_product(hexagon, simplex_poset(2)).fvector() == std::vector<std::size_t>{12, 18, 8});
  auto same = poset_product(point_poset(), pentagon);
  CHECK(find_isomorphism(same, pentagon).has_value());
}

TEST_CASE("enumeration limit") {
  CHECK_THROWS_AS(enumerate_tubings(complete_graph(4), {50}), TooManyFaces);
  CHECK(count_tubings(complete_graph(4)) == 75);
  CHECK(count_tubings(complete_graph(4), 10) == 10);
}

TEST_CASE("poset exports") {
  auto fp = enumerate_tubings(testsupport::load("d2"));
  auto doc = nlohmann::json::parse(poset_to_json(fp));
  CHECK(doc["dimension"] == 2);
  CHECK(doc["faces"].size() == 9);
  CHECK(doc["covers"].size() == fp.poset().cover_count());
  CHECK(doc["faces"][0]["tubes"].empty());
  CHECK(doc["faces"][5]["tubes"][1] == nlohmann::json::parse(R"([["v1","v2"],["e1"]])"));

  auto dot = poset_to_dot(fp);
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++arrows;
  CHECK(arrows == fp.poset().cover_count());
  CHECK(dot.rfind("digraph faces {", 0) == 0);
  CHECK(format_fvector(fp) == "dim 2; f = (4, 4)");
}

TEST_CASE("property: tubes and face counts agree with brute force") {
  std::vector<Pseudograph> graphs;
  for (auto& [name, g] : testsupport::corpus())
    if (g.size() <= 10) graphs.push_back(g);
  std::mt19937 rng(5);
  for (int i = 0; i < 120; ++i) graphs.push_back(testsupport::random_graph(rng, 4, 5));
  for (const auto& g : graphs) {
    CAPTURE(to_json(g));
    std::vector<Sub> mine;
    for (const auto& t : enumerate_tubes(g)) mine.push_back(as_sub(t));
    std::sort(mine.begin(), mine.end());
    CHECK(mine == testsupport::brute_tubes(g));
    auto fp = enumerate_tubings(g);
    CHECK(fp.fvector() == testsupport::brute_fvector(g));
  }
}

TEST_CASE("property: face poset structure on the corpus") {
  for (auto& [name, g] : testsupport::corpus()) {
    CAPTURE(name);
    auto fp = enumerate_tubings(g);
    const auto& p = fp.poset();
    auto d = static_cast<int>(g.dimension());
    CHECK(p.dimension == d);
    CHECK(fp.tubing(p.top()).empty());
    for (std::size_t i = 0; i < fp.size(); ++i) {
      CHECK(p.rank[i] == static_cast<int>(fp.faces()[i].size()));
      CHECK(p.compact[i] == excludes_all_loops(g, fp.tubing(i)));
      if (g.loopless()) CHECK(p.compact[i]);
      // covers remove exactly one tube
      for (auto j : p.above[i]) {
        const auto &a = fp.faces()[i], &b = fp.faces()[j];
        CHECK(b.size() + 1 == a.size());
        CHECK(std::includes(a.begin(), a.end(), b.begin(), b.end()));
      }
      if (p.rank[i] != d) CHECK_FALSE(p.below[i].empty());
    }
    for (const auto& t : maximal_tubings(fp)) CHECK(t.size() == g.dimension());
    if (g.loopless() && g.connected() && d > 0) {
      long long alt = 0;
      auto f = fp.fvector();
      for (std::size_t k = 0; k < f.size(); ++k) alt += (k % 2 ? -1 : 1) * static_cast<long long>(f[k]);
      CHECK(alt == (d % 2 ? 2 : 0));
    }
  }
}

TEST_CASE("property: diamond property on loopless corpus graphs") {
  for (auto& [name, g] : testsupport::corpus()) {
    if (!g.loopless()) continue;
    CAPTURE(name);
    auto fp = enumerate_tubings(g);
    const auto& p = fp.poset();
    for (std::size_t x = 0; x < p.size(); ++x) {
      std::map<std::size_t, int> middle;
      for (auto z : p.above[x])
        for (auto y : p.above[z]) ++middle[y];
      for (auto& [y, c] : middle) CHECK(c == 2);
    }
  }
}

TEST_CASE("disconnected graphs are products with a simplex") {
  for (auto& [name, g] : testsupport::corpus()) {
    if (g.connected()) continue;
    CAPTURE(name);
    CHECK(check_component_product(g) == "");
  }
  CHECK(check_component_product(Pseudograph({"a", "b", "c", "d"}, {{"x", "a", "b"}, {"y", "c", "c"}})) == "");
}
