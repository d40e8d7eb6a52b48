#include <doctest.h>

#include "json.hpp"
#include "pseudoassoc/catalog.hpp"
#include "pseudoassoc/io.hpp"
#include "pseudoassoc/realization.hpp"
#include "support.hpp"

using namespace pseudoassoc;

namespace {

Integer power(const Integer& base, std::size_t k) {
  Integer out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= base;
  return out;
}

// Lambda written out by hand: c^|V(t)| + c^|E(i,t)| for each bundle the tube
// touches + (elements outside t)^2.
Integer lambda_oracle(const Pseudograph& g, const Tube& t) {
  Integer c = Integer(g.size()) * g.size();
  Integer out = power(c, t.nodes.size());
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> inside;
  for (auto e : t.edges.items()) {
    const auto& r = g.edge(e);
    ++inside[{std::min(r.first, r.second), std::max(r.first, r.second)}];
  }
  for (const auto& [k, count] : inside) out += power(c, count);
  Integer outside = g.size() - t.element_count();
  return out + outside * outside;
}

std::map<std::string, Integer> by_id(const Realization& r, const RealizedVertex& v) {
  std::map<std::string, Integer> out;
  for (std::size_t i = 0; i < r.coordinate_order.size(); ++i) out[r.coordinate_order[i]] = v.coords[i];
  return out;
}

const RealizedVertex& vertex_with(const Realization& r, const std::string& tubing) {
  for (const auto& v : r.vertices)
    if (describe(r.graph, v.tubing) == tubing) return v;
  throw std::runtime_error("no vertex " + tubing);
}

Integer sum_over(const Pseudograph& g, const Tube& t, const std::vector<Integer>& coords) {
  Integer s = 0;
  for (auto v : t.nodes.items()) s += coords[v];
  for (auto e : t.edges.items()) s += coords[g.node_count() + e];
  return s;
}

std::vector<Pseudograph> loopless_connected() {
  std::vector<Pseudograph> out;
  for (auto& [name, g] : testsupport::corpus())
    if (g.loopless() && g.connected() && g.node_count() > 1) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("realization constant") {
  CHECK(realization_constant(testsupport::load("d2")) == 16);
  CHECK(realization_constant(path_graph(3)) == 25);
  CHECK(realization_constant(testsupport::load("doubled-path3")) == 36);
}

TEST_CASE("lambda values") {
  auto d2 = testsupport::load("d2");
  CHECK(lambda_value(d2, make_tube(d2, {"v1"})) == 25);
  CHECK(lambda_value(d2, make_tube(d2, {"v1", "v2"}, {"e1"})) == 273);
  for (const auto& g : loopless_connected())
    for (const auto& t : enumerate_tubes(g)) CHECK(lambda_value(g, t) == lambda_oracle(g, t));
}

TEST_CASE("edge order in a bundle") {
  auto d2 = testsupport::load("d2");
  Tubing t{make_tube(d2, {"v1"}), make_tube(d2, {"v1", "v2"}, {"e1"})};
  auto order = edge_order(d2, t, 0);
  CHECK(edge_ids(d2, IndexSet::of(order.edges)) == std::vector<std::string>{"e1", "e2"});
  REQUIRE(order.witness.size() == 2);
  CHECK(describe(d2, order.witness[0]) == "{v1,v2|e1}");
  CHECK(order.witness[1] == whole_graph(d2));
}

TEST_CASE("square coordinates") {
  auto r = realize(testsupport::load("d2"));
  CHECK(r.c == 16);
  CHECK(r.coordinate_order == std::vector<std::string>{"v1", "v2", "e1", "e2"});
  REQUIRE(r.vertices.size() == 4);
  auto x = by_id(r, vertex_with(r, "[{v1} {v1,v2|e1}]"));
  CHECK(x["v1"] == 25);
  CHECK(x["v2"] == 231);
  CHECK(x["e1"] == 17);
  CHECK(x["e2"] == 239);
  std::set<std::vector<Integer>> points, golden;
  for (const auto& v : r.vertices) points.insert(v.coords);
  for (Integer a : {25, 231})
    for (Integer b : {17, 239}) golden.insert({a, 256 - a, b, 256 - b});
  CHECK(points == golden);
}

TEST_CASE("pentagon and doubled path coordinates") {
  auto r = realize(path_graph(3));
  CHECK(r.vertices.size() == 5);
  auto x = by_id(r, vertex_with(r, "[{v1} {v3}]"));
  CHECK(x["v1"] == 41);
  CHECK(x["v2"] == 15543);
  CHECK(x["v3"] == 41);
  CHECK(x["e1_2"] == 25);

  auto g = testsupport::load("doubled-path3");
  auto fig = realize(g);
  auto y = by_id(fig, vertex_with(fig, "[{v1} {v1,v2|e1} {v1,v2|e1,e2}]"));
  CHECK(y["e1"] == 41);
  CHECK(y["e2"] == 1255);
  CHECK(y["e3"] == 36);
  auto big = make_tube(g, {"v1", "v2"}, {"e1", "e2"}), small = make_tube(g, {"v1", "v2"}, {"e1"});
  CHECK(lambda_value(g, big) - lambda_value(g, small) == 1255);

  auto edge = realize(path_graph(2));
  CHECK(edge.vertices.size() == 2);
}

TEST_CASE("property: hyperplane sums and incidence on loopless graphs") {
  for (const auto& g : loopless_connected()) {
    CAPTURE(to_json(g));
    auto r = realize(g);
    auto fp = enumerate_tubings(g);
    Integer c = Integer(g.size()) * g.size();
    CHECK(r.vertices.size() == fp.vertices().size());
    auto tubes = enumerate_tubes(g);
    for (const auto& v : r.vertices) {
      Integer nodes = 0;
      for (std::size_t i = 0; i < g.node_count(); ++i) nodes += v.coords[i];
      CHECK(nodes == power(c, g.node_count()));
      for (const auto& bundle : bundle_ids(g)) {
        Integer s = 0;
        for (const auto& id : bundle) s += v.coords[g.node_count() + g.edge_index(id)];
        CHECK(s == power(c, bundle.size()));
      }
      for (const auto& t : tubes) {
        auto lhs = sum_over(g, t, v.coords);
        auto rhs = lambda_oracle(g, t);
        bool in = std::find(v.tubing.begin(), v.tubing.end(), t) != v.tubing.end();
        CHECK(lhs >= rhs);
        CHECK((lhs == rhs) == in);
      }
    }
    auto cert = verify_incidence(r, fp);
    CHECK_MESSAGE(cert.ok, cert.detail);
    CHECK(cert.lattice_size == fp.size());
  }
}

TEST_CASE("perturbing one coordinate breaks an equality") {
  auto r = realize(testsupport::load("doubled-path3"));
  auto fp = enumerate_tubings(r.graph);
  for (std::size_t k = 0; k < r.coordinate_order.size(); ++k) {
    auto bent = r;
    bent.vertices[0].coords[k] += 1;
    CHECK_FALSE(verify_incidence(bent, fp).ok);
  }
}

TEST_CASE("join inequality") {
  for (const auto& g : loopless_connected()) {
    auto check = check_join_inequality(g, 2000);
    CHECK(check.failure == "");
  }
  CHECK(check_join_inequality(testsupport::load("d2")).instances > 0);
}

TEST_CASE("cone realizations") {
  struct Case {
    const char* name;
    std::size_t kept, total;
  };
  for (auto [name, kept, total] : {Case{"loop", 1, 2}, Case{"edge-loop", 3, 5}, Case{"two-loop-edge", 6, 14},
                                   Case{"bouquet2", 2, 4}}) {
    CAPTURE(name);
    auto g = testsupport::load(name);
    auto cone = cone_realization(g);
    CHECK(cone.kept.size() == kept);
    CHECK(cone.realization.vertices.size() == total);
    CHECK(cone.removed_tubes.size() == cone.loop_free.ghost_nodes.size());
    CHECK(check_cone(g, cone) == "");
    // survivors are exactly the ghost images of the maximal tubings
    std::set<Tubing> images, survivors;
    for (const auto& t : maximal_tubings(g)) {
      auto img = ghost_image(g, cone.loop_free, t);
      canonicalize(img);
      images.insert(img);
    }
    for (auto k : cone.kept) survivors.insert(cone.realization.vertices[k].tubing);
    CHECK(images == survivors);
  }
  auto el = cone_realization(testsupport::load("edge-loop"));
  CHECK(el.removed_tubes.size() == 1);
  CHECK(describe(el.loop_free.graph, el.removed_tubes[0]) == "{v2'}");
  auto two = cone_realization(testsupport::load("two-loop-edge"));
  CHECK(two.removed_tubes.size() == 2);
  CHECK_THROWS(realize(testsupport::load("edge-loop")));
}

TEST_CASE("realization export") {
  auto r = realize(testsupport::load("d2"));
  auto doc = nlohmann::json::parse(realization_to_json(r, true));
  CHECK(doc["c"] == "16");
  CHECK(doc["vertices"].size() == 4);
  CHECK(doc.contains("hyperplanes"));
  auto cone = nlohmann::json::parse(cone_to_json(cone_realization(testsupport::load("edge-loop")), false));
  CHECK(cone["vertices"].size() == 3);
}
