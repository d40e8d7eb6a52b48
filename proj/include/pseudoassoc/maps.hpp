#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pseudoassoc/poset.hpp"
#include "pseudoassoc/pseudograph.hpp"
#include "pseudoassoc/tube.hpp"
#include "pseudoassoc/tubings.hpp"

namespace pseudoassoc {

/// Target graph of the contraction map: G/e for an edge, G - l for a loop
/// (contracting a loop is deleting it).
Pseudograph contraction_target(const Pseudograph& g, std::size_t e);

/// Image of one tube under contraction of e, as a tube of `target`
/// (which must be contraction_target(g, e)). Empty when the case split gives
/// nothing or the image would be the whole target graph.
std::optional<Tube> phi_tube(const Pseudograph& g, std::size_t e, const Tube& t, const Pseudograph& target);
std::optional<Tube> phi_tube(const Pseudograph& g, std::string_view edge_id, const Tube& t);

/// Image of one tube under deletion of e, as tubes of `target` = G - e:
/// nothing, the tube itself, the tube minus e, or the two halves of a split.
std::vector<Tube> theta_tube(const Pseudograph& g, std::size_t e, const Tube& t, const Pseudograph& target);
std::vector<Tube> theta_tube(const Pseudograph& g, std::string_view edge_id, const Tube& t);

/// Tubing-wise maps; images are merged, sorted and checked to be tubings of
/// the target (InconsistencyError otherwise).
Tubing phi_tubing(const Pseudograph& g, std::size_t e, const Tubing& tubes, const Pseudograph& target);
Tubing theta_tubing(const Pseudograph& g, std::size_t e, const Tubing& tubes, const Pseudograph& target);

/// A map between two face posets, given face index to face index.
struct FaceMapTable {
  enum class Kind { contraction, deletion };
  Kind kind = Kind::contraction;
  /// Edges applied, in order (more than one for composites such as Tonks).
  std::vector<std::string> edges;
  FacePoset source;
  FacePoset target;
  std::vector<std::size_t> image;
};

FaceMapTable contract_map(const Pseudograph& g, std::string_view edge_id);
/// Also certifies surjectivity through preimage(); throws InconsistencyError
/// if some target tubing has no preimage.
FaceMapTable delete_map(const Pseudograph& g, std::string_view edge_id);

/// Tubing T of g with theta(T) = target tubing, built by lifting the target
/// tubes and merging pairs joined by e; nullopt if the merge gets stuck.
std::optional<Tubing> preimage(const Pseudograph& g, std::size_t e, const Tubing& target_tubing,
                               const Pseudograph& target);

/// Empty string when every cover of the source maps to a weakly ordered pair.
std::string check_order_preserving(const FaceMapTable& map);
/// Empty string when every target face is hit.
std::string check_surjective(const FaceMapTable& map);
/// Deletion of a single-bundle edge never raises dimension (tube count of
/// the image is at least that of the source); deletion of a bundle-mate or a
/// loop lands inside the facet of (component of e) - e.
std::string check_deletion_dimension(const Pseudograph& g, const FaceMapTable& map);

/// Compares the two orders of contracting (or deleting) e1 and e2 on every
/// tubing. Contracted nodes are matched by the original nodes they absorb.
std::string check_contract_commutes(const Pseudograph& g, std::string_view e1, std::string_view e2);
std::string check_delete_commutes(const Pseudograph& g, std::string_view e1, std::string_view e2);
/// Loop contraction and loop deletion agree tubing-wise.
std::string check_loop_agreement(const Pseudograph& g, std::string_view loop_id);

/// Quotient G/t used for the facet of tube t: t becomes one node v, edges
/// among t's nodes outside t (and loops at t's nodes outside t) become loops
/// at v, and an outside node joined to several nodes of t by single edges
/// keeps one representative edge. Throws GraphError when such a node is
/// joined to t through a multi-edge bundle and several t nodes at once.
struct TubeQuotient {
  Pseudograph graph;
  std::size_t node = 0;  // index of v
  /// For each quotient edge, the original edges it stands for.
  std::vector<std::vector<std::size_t>> origin;
};
TubeQuotient tube_quotient(const Pseudograph& g, const Tube& t);

/// The subgraph G_t as a graph in its own right (ids kept).
Pseudograph tube_graph(const Pseudograph& g, const Tube& t);

/// Faces of a face poset containing one tube, as a graded poset of one
/// dimension less. `faces[i]` is the face index in the parent.
struct FacetPoset {
  GradedPoset poset;
  std::vector<std::size_t> faces;
};
FacetPoset facet_poset(const FacePoset& fp, std::size_t tube_index);

struct FacetDecomposition {
  bool ok = false;
  std::string detail;
  TubeQuotient quotient;
  FacePoset tube_faces;      // tubings of G_t
  FacetPoset quotient_star;  // tubings of G/t containing {v}
  FacetPoset facet;          // tubings of G containing t
  /// product element (i, j) at product_index -> element of `facet`
  std::vector<std::size_t> isomorphism;
};

/// Builds rho(T, T') = T + {t} + {t' avoiding v} + {(t' - v) + t} and checks
/// it is a poset isomorphism from tubings(G_t) x star({v}) onto the facet.
FacetDecomposition facet_decomposition(const Pseudograph& g, const Tube& t);

/// Composite deletion of every edge of the complete graph on n nodes except
/// the path v1 - v2 - ... - vn, in the order given (ids of the complete
/// graph's edges); an empty order means edge order.
FaceMapTable tonks(std::size_t n, const std::vector<std::string>& order = {});
/// Edges tonks() deletes, in edge order.
std::vector<std::string> tonks_edges(std::size_t n);

}  // namespace pseudoassoc
