#include <doctest.h>

#include "json.hpp"
#include "pseudoassoc/catalog.hpp"
#include "pseudoassoc/io.hpp"
#include "pseudoassoc/maps.hpp"
#include "support.hpp"

using namespace pseudoassoc;

namespace {

std::string phi(const Pseudograph& g, const std::string& e, const Tube& t) {
  auto image = phi_tube(g, e, t);
  return image ? describe(contraction_target(g, g.edge_index(e)), *image) : "empty";
}

std::string theta(const Pseudograph& g, const std::string& e, const Tube& t) {
  auto target = delete_edge(g, e);
  auto images = theta_tube(g, e, t);
  if (images.empty()) return "empty";
  std::string out;
  for (const auto& u : images) out += describe(target, u);
  return out;
}

// Independent order check: whenever T contains T', image(T) contains image(T').
void check_monotone(const FaceMapTable& map) {
  const auto& src = map.source;
  for (std::size_t i = 0; i < src.size(); ++i)
    for (auto j : src.poset().above[i]) {
      auto big = map.target.tubing(map.image[i]);
      auto small = map.target.tubing(map.image[j]);
      for (const auto& t : small) CHECK(std::find(big.begin(), big.end(), t) != big.end());
    }
}

}  // namespace

TEST_CASE("contraction of single tubes") {
  auto p = path_graph(3);
  CHECK(phi(p, "e1_2", make_tube(p, {"v3"})) == "{v3}");
  CHECK(phi(p, "e1_2", make_tube(p, {"v1", "v2"}, {"e1_2"})) == "{v1v2}");
  CHECK(phi(p, "e1_2", make_tube(p, {"v1"})) == "empty");
  CHECK(phi(p, "e1_2", make_tube(p, {"v2", "v3"}, {"e2_3"})) == "empty");  // collapses onto the whole target

  auto d2 = testsupport::load("d2");
  CHECK(phi(d2, "e1", make_tube(d2, {"v1", "v2"}, {"e1"})) == "{v1v2}");
  CHECK(phi(d2, "e1", make_tube(d2, {"v1", "v2"}, {"e2"})) == "empty");
  CHECK(phi(d2, "e1", make_tube(d2, {"v1"})) == "empty");
}

TEST_CASE("contraction of the square lands on the ray") {
  auto map = contract_map(testsupport::load("d2"), "e1");
  CHECK(map.target.graph().node_count() == 1);
  CHECK(map.target.graph().loop_count() == 1);
  CHECK(map.target.fvector() == std::vector<std::size_t>{1});
  CHECK(check_order_preserving(map) == "");
  // every face whose tubing holds {v1,v2|e1} goes to the vertex
  for (std::size_t i = 0; i < map.source.size(); ++i) {
    auto tubing = map.source.tubing(i);
    bool holds = false;
    for (const auto& t : tubing) holds = holds || describe(map.source.graph(), t) == "{v1,v2|e1}";
    if (holds) CHECK(map.target.tubing(map.image[i]).size() == 1);
  }
}

TEST_CASE("contraction of the pentagon onto a segment") {
  auto map = contract_map(path_graph(3), "e1_2");
  CHECK(map.target.fvector() == std::vector<std::size_t>{2});
  check_monotone(map);
  CHECK(check_surjective(map) == "");
}

TEST_CASE("deletion of single tubes") {
  auto p = path_graph(3);
  CHECK(theta(p, "e1_2", make_tube(p, {"v1", "v2"}, {"e1_2"})) == "{v1}{v2}");
  CHECK(theta(p, "e1_2", make_tube(p, {"v3"})) == "{v3}");
  auto d2 = testsupport::load("d2");
  CHECK(theta(d2, "e2", make_tube(d2, {"v1", "v2"}, {"e2"})) == "empty");
  CHECK(theta(d2, "e2", make_tube(d2, {"v1", "v2"}, {"e1"})) == "empty");  // the whole of G - e2
  auto loop = bouquet_graph(1);
  CHECK(theta(loop, "l1", make_tube(loop, {"v1"})) == "empty");  // the whole single node
}

TEST_CASE("loop deletion equals loop contraction") {
  for (auto& [name, g] : testsupport::corpus())
    for (auto l : g.loops()) {
      CAPTURE(name);
      CHECK(check_loop_agreement(g, g.edge(l).id) == "");
    }
  auto two = testsupport::load("two-loop-edge");
  auto t = make_tube(two, {"v1"}, {"l1"});
  CHECK(theta(two, "l1", t) == "{v1}");
  CHECK(phi(two, "l1", t) == "{v1}");
  CHECK_THROWS_AS(check_loop_agreement(two, "e1"), GraphError);
}

TEST_CASE("hexagon projects onto the pentagon") {
  auto map = delete_map(cycle_graph(3), "e1_3");
  CHECK(map.source.vertices().size() == 6);
  CHECK(map.target.vertices().size() == 5);
  CHECK(check_surjective(map) == "");
  CHECK(check_order_preserving(map) == "");
  CHECK(check_deletion_dimension(cycle_graph(3), map) == "");
  std::set<std::size_t> hit;
  for (auto v : map.source.vertices()) hit.insert(map.image[v]);
  CHECK(hit.size() == 5);
}

TEST_CASE("deleting a parallel edge projects onto one facet") {
  auto g = testsupport::load("doubled-path3");
  for (const auto& e : {"e1", "e2"}) {
    auto map = delete_map(g, e);
    CHECK(check_deletion_dimension(g, map) == "");
    CHECK(map.target.fvector() == std::vector<std::size_t>{5, 5});
  }
}

TEST_CASE("property: maps on the corpus") {
  for (auto& [name, g] : testsupport::corpus()) {
    for (const auto& e : g.edges()) {
      CAPTURE(name);
      CAPTURE(e.id);
      if (!e.is_loop()) {
        auto c = contract_map(g, e.id);
        CHECK(check_order_preserving(c) == "");
        check_monotone(c);
        for (std::size_t i = 0; i < c.source.size(); ++i) CHECK(is_tubing(c.target.graph(), c.target.tubing(c.image[i])));
      }
      auto d = delete_map(g, e.id);
      CHECK(check_order_preserving(d) == "");
      check_monotone(d);
      CHECK(check_surjective(d) == "");
      CHECK(check_deletion_dimension(g, d) == "");
      // constructive preimages map back exactly
      for (std::size_t j = 0; j < d.target.size(); ++j) {
        auto pre = preimage(g, g.edge_index(e.id), d.target.tubing(j), d.target.graph());
        REQUIRE(pre);
        auto back = theta_tubing(g, g.edge_index(e.id), *pre, d.target.graph());
        CHECK(back == d.target.tubing(j));
      }
    }
  }
}

TEST_CASE("contractions commute on every corpus graph with at most four edges") {
  for (auto& [name, g] : testsupport::corpus()) {
    if (g.edge_count() > 4) continue;
    for (std::size_t a = 0; a < g.edge_count(); ++a)
      for (std::size_t b = a + 1; b < g.edge_count(); ++b) {
        CAPTURE(name);
        CHECK(check_contract_commutes(g, g.edge(a).id, g.edge(b).id) == "");
      }
  }
  auto tri = cycle_graph(3);
  CHECK(check_contract_commutes(tri, "e1_2", "e2_3") == "");
  CHECK(check_contract_commutes(tri, "e1_2", "e1_3") == "");
  CHECK(check_contract_commutes(tri, "e2_3", "e1_3") == "");
}

TEST_CASE("deletions commute on simple graphs") {
  for (auto g : {path_graph(4), cycle_graph(3), cycle_graph(4), edgeless_graph(3), path_graph(3)}) {
    for (std::size_t a = 0; a < g.edge_count(); ++a)
      for (std::size_t b = a + 1; b < g.edge_count(); ++b) CHECK(check_delete_commutes(g, g.edge(a).id, g.edge(b).id) == "");
  }
  auto k4 = complete_graph(4);
  CHECK(check_delete_commutes(k4, "e1_3", "e2_4") == "");
  CHECK(check_delete_commutes(k4, "e1_4", "e2_3") == "");
}

TEST_CASE("deletion order matters once a split meets a parallel edge or a loop") {
  // Frozen counterexamples. In one order the split tube must drop the
  // parallel edge to stay a tube, in the other it must keep it to reach
  // every target face.
  auto g = testsupport::load("doubled-path3");
  CHECK(check_delete_commutes(g, "e1", "e3") != "");
  CHECK(check_delete_commutes(testsupport::load("edge-loop"), "e1", "l1") != "");
  // the simple part of the same graph still commutes
  CHECK(check_delete_commutes(path_graph(3), "e1_2", "e2_3") == "");
}

TEST_CASE("Tonks projection") {
  auto three = tonks(3);
  CHECK(three.source.vertices().size() == 6);
  CHECK(three.target.vertices().size() == 5);
  auto four = tonks(4);
  CHECK(four.source.vertices().size() == 24);
  CHECK(four.target.vertices().size() == 14);
  CHECK(check_surjective(four) == "");
  CHECK(check_order_preserving(four) == "");
  CHECK(four.target.graph().edge_specs() == path_graph(4).edge_specs());

  std::mt19937 rng(11);
  for (int k = 0; k < 2; ++k) {
    auto order = tonks_edges(4);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(tonks(4, order).image == four.image);
  }
  CHECK_THROWS_AS(tonks(4, {"e1_3"}), GraphError);
  CHECK_THROWS_AS(tonks(1), GraphError);
}

TEST_CASE("facet decomposition") {
  auto tri = cycle_graph(3);
  auto f = facet_decomposition(tri, make_tube(tri, {"v1", "v2"}, {"e1_2"}));
  CHECK_MESSAGE(f.ok, f.detail);
  CHECK(f.facet.poset.fvector() == std::vector<std::size_t>{2});

  auto p = path_graph(4);
  auto g = facet_decomposition(p, make_tube(p, {"v2", "v3"}, {"e2_3"}));
  CHECK_MESSAGE(g.ok, g.detail);

  auto fig = testsupport::load("doubled-path4");
  auto h = facet_decomposition(fig, make_tube(fig, {"v1", "v2", "v3"}, {"e1", "e3"}));
  CHECK_MESSAGE(h.ok, h.detail);

  // the underlying simple tube of a triple edge: K(G_s) x P_r
  auto m = multiedge_graph(3);
  auto s = facet_decomposition(m, make_tube(m, {"v1", "v2"}, {"e1"}));
  CHECK_MESSAGE(s.ok, s.detail);
  auto expected = poset_product(enumerate_tubings(path_graph(2)).poset(), permutohedron_poset(2));
  CHECK(find_isomorphism(s.facet.poset, expected).has_value());

  CHECK_THROWS_AS(facet_decomposition(tri, whole_graph(tri)), GraphError);
}

TEST_CASE("map exports") {
  auto map = delete_map(testsupport::load("d2"), "e1");
  auto doc = nlohmann::json::parse(map_report_json(map));
  CHECK(doc["kind"] == "deletion");
  CHECK(doc["source_faces"] == 9);
  CHECK(doc["target_faces"] == 3);
  CHECK(doc["surjective"] == true);
  CHECK(doc["order_preserving"] == true);
  CHECK(doc["map"].size() == 9);
  auto table = nlohmann::json::parse(map_table_to_json(map));
  CHECK(table[0]["from"] == 0);
  CHECK(table[0]["to"] == 0);
}
