#include <doctest.h>

#include "json.hpp"
#include "pseudoassoc/catalog.hpp"
#include "pseudoassoc/tubings.hpp"
#include "support.hpp"

using namespace pseudoassoc;

namespace {

std::size_t choose(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::size_t catalan(std::size_t n) { return choose(2 * n, n) / (n + 1); }

std::size_t vertex_count(const Pseudograph& g) { return enumerate_tubings(g).vertices().size(); }

}  // namespace

TEST_CASE("vertex counts of the classical families") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(vertex_count(path_graph(n)) == catalan(n));
    CHECK(vertex_count(complete_graph(n)) == factorial(n));
    if (n >= 3) CHECK(vertex_count(cycle_graph(n)) == choose(2 * n - 2, n - 1));
  }
  CHECK(vertex_count(edgeless_graph(3)) == 3);
  for (std::size_t m = 1; m <= 4; ++m) {
    CHECK(vertex_count(multiedge_graph(m)) == 2 * factorial(m));
    CHECK(vertex_count(bouquet_graph(m)) == factorial(m));
  }
}

TEST_CASE("oracle counts") {
  CHECK(polygon_dissection_counts(3) == std::vector<std::size_t>{5, 5, 1});
  CHECK(polygon_dissection_counts(4) == std::vector<std::size_t>{14, 21, 9, 1});
  CHECK(ordered_partition_counts(3) == std::vector<std::size_t>{6, 6, 1});
  CHECK(ordered_partition_counts(4) == std::vector<std::size_t>{24, 36, 14, 1});
  CHECK(cyclohedron_counts(3) == std::vector<std::size_t>{6, 6, 1});
  CHECK(simplex_counts(3) == std::vector<std::size_t>{3, 3, 1});
  CHECK(product_counts({2, 1}, {2, 1}) == std::vector<std::size_t>{4, 4, 1});
  CHECK(ray_counts() == std::vector<std::size_t>{1, 1});
  CHECK(permutohedron_poset(3).fvector() == std::vector<std::size_t>{6, 6});
}

TEST_CASE("property: enumeration agrees with every oracle") {
  for (const auto& family : {"path", "cycle", "complete", "edgeless", "multiedge", "bouquet"}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      FamilySpec spec;
      try {
        spec = parse_family(family, std::to_string(n));
      } catch (const GraphError&) {
        continue;
      }
      auto expected = expected_fvector(spec);
      if (!expected || (spec.family == "cycle" && n < 3)) continue;
      CAPTURE(describe(spec));
      CHECK(enumerate_tubings(standard_graph(spec)).fvector() == *expected);
    }
  }
}

TEST_CASE("family specs") {
  auto a = parse_family("multiedge(3)", "");
  CHECK(a.family == "multiedge");
  CHECK(a.n == 3);
  auto b = parse_family("figure", "edge-loop");
  CHECK(standard_graph(b) == testsupport::load("edge-loop"));
  CHECK_THROWS_AS(parse_family("tree", "3"), GraphError);
  CHECK_THROWS_AS(parse_family("figure", "nope"), GraphError);
  for (const auto& id : figure_ids()) CHECK(figure_graph(id).node_count() > 0);
}

TEST_CASE("corpus files match the generators") {
  CHECK(testsupport::load("path3") == path_graph(3));
  CHECK(testsupport::load("cycle4") == cycle_graph(4));
  CHECK(testsupport::load("complete4") == complete_graph(4));
  CHECK(testsupport::load("bouquet2") == bouquet_graph(2));
  CHECK(testsupport::load("d2") == multiedge_graph(2));
  CHECK(testsupport::load("doubled-path4") == figure_graph("doubled-path4"));
}

TEST_CASE("product identities") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(check_permutohedral_prism(n) == "");
    CHECK(check_permutohedral_cone(n) == "");
  }
  CHECK(check_component_product(testsupport::load("double-edge-point")) == "");
}

TEST_CASE("identity report") {
  auto checks = verify_family_identities();
  CHECK(checks.size() > 10);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  auto text = format_report(checks);
  CHECK(text.find("FAIL") == std::string::npos);
  auto doc = nlohmann::json::parse(format_report_json(checks));
  CHECK(doc.size() == checks.size());
}
