#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoassoc/poset.hpp"
#include "pseudoassoc/pseudograph.hpp"

namespace pseudoassoc {

/// Nodes are v1..vn. Simple-graph edges are named e{i}_{j} (i < j),
/// parallel edges e1..em, loops l1..lm.
Pseudograph path_graph(std::size_t n);
Pseudograph cycle_graph(std::size_t n);  // n >= 3
Pseudograph complete_graph(std::size_t n);
Pseudograph edgeless_graph(std::size_t n);
Pseudograph multiedge_graph(std::size_t m);  // two nodes, m parallel edges
Pseudograph bouquet_graph(std::size_t m);    // one node, m loops

/// Small named graphs:
///   double-edge        two nodes, two parallel edges
///   edge-loop          edge v1-v2 with a loop at v2
///   double-edge-point  double-edge plus an isolated node v3
///   doubled-path3      e1, e2 between v1 and v2, e3 between v2 and v3
///   doubled-path4      doubled-path3 plus e4 between v3 and v4
///   two-loop-edge      edge v1-v2 with a loop at each end
Pseudograph figure_graph(std::string_view id);
std::vector<std::string> figure_ids();

struct FamilySpec {
  std::string family;  // path, cycle, complete, edgeless, multiedge, bouquet, figure
  std::size_t n = 0;   // node count, or edge/loop count for multiedge and bouquet
  std::string figure;  // figure id
};

/// Parses "<family> <n>" or "figure <id>"; also accepts "multiedge(3)".
FamilySpec parse_family(std::string_view family, std::string_view arg);
std::string describe(const FamilySpec& spec);

Pseudograph standard_graph(const FamilySpec& spec);

/// f-vector from a classical formula that does not touch tubings; nullopt
/// when the family has no oracle.
std::optional<std::vector<std::size_t>> expected_fvector(const FamilySpec& spec);

/// Independent oracles.
/// Non-crossing diagonal sets of a convex (n+2)-gon, counted by brute force
/// and indexed by face dimension (the polygon itself last).
std::vector<std::size_t> polygon_dissection_counts(std::size_t n);
/// Ordered set partitions of an n-set by block count, as face counts of the
/// permutohedron indexed by dimension.
std::vector<std::size_t> ordered_partition_counts(std::size_t n);
/// Cyclohedron face counts from its h-vector C(n-1, k)^2.
std::vector<std::size_t> cyclohedron_counts(std::size_t n);
/// Simplex with n vertices: C(n, k+1) faces of dimension k.
std::vector<std::size_t> simplex_counts(std::size_t n);
/// Face counts of a product: convolution of the two count vectors.
std::vector<std::size_t> product_counts(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);
/// Face counts of the ray (vertex, ray).
std::vector<std::size_t> ray_counts();

/// Face poset of the permutohedron P_n built from ordered set partitions.
GradedPoset permutohedron_poset(std::size_t n);

/// Explicit isomorphisms; each returns an empty string on success.
/// Multi-edge graph with n edges onto P_n x segment.
std::string check_permutohedral_prism(std::size_t n);
/// Bouquet of n loops onto P_n x ray.
std::string check_permutohedral_cone(std::size_t n);
/// Disconnected graph onto the product of its components' posets times the
/// simplex spanned by the component tubes.
std::string check_component_product(const Pseudograph& g);

struct FamilyCheck {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string got;
};

/// f-vector agreement for every family instance with an oracle, plus the
/// product identities checked by explicit isomorphisms.
std::vector<FamilyCheck> verify_family_identities();
std::string format_report(const std::vector<FamilyCheck>& checks);
std::string format_report_json(const std::vector<FamilyCheck>& checks);

}  // namespace pseudoassoc
