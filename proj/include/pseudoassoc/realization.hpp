#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pseudoassoc/poset.hpp"
#include "pseudoassoc/pseudograph.hpp"
#include "pseudoassoc/tube.hpp"
#include "pseudoassoc/tubings.hpp"

namespace pseudoassoc {

using Integer = boost::multiprecision::cpp_int;

/// A structural assumption of the coordinate construction failed: a tie in
/// a bundle order, or a tube bringing in two unsolved nodes at once.
class RealizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c = |G|^2.
Integer realization_constant(const Pseudograph& g);

/// Edges of one bundle ordered by how many tubes of T avoid them (fewest
/// first). witness[j] is the largest tube of T holding edges[j] but not
/// edges[j+1]; the last witness is the whole graph.
struct BundleOrder {
  std::vector<std::size_t> edges;
  std::vector<Tube> witness;
};
BundleOrder edge_order(const Pseudograph& g, const Tubing& maximal, std::size_t bundle);

/// f_T on edges, indexed by edge (loops are not allowed).
std::vector<Integer> edge_values(const Pseudograph& g, const Tubing& maximal);
/// f_T on nodes, solved tube by tube in increasing size, the remaining node
/// pinned by the node-sum hyperplane.
std::vector<Integer> node_values(const Pseudograph& g, const Tubing& maximal, const std::vector<Integer>& edges);

/// c^|V(t)| + sum over bundles meeting t of c^|E(i,t)| + |G - t|^2.
Integer lambda_value(const Pseudograph& g, const Tube& t);
/// Sum of coordinates over the nodes and edges of t.
Integer tube_sum(const Pseudograph& g, const Tube& t, const std::vector<Integer>& coords);

struct RealizedVertex {
  Tubing tubing;
  std::vector<Integer> coords;  // nodes, then edges, in graph order
};

struct Hyperplane {
  std::vector<std::string> support;
  Integer rhs;
};

struct Halfspace {
  Tube tube;
  Integer lambda;
  bool removed = false;
};

struct HRepresentation {
  std::vector<Hyperplane> hyperplanes;  // node sum first, then one per bundle
  std::vector<Halfspace> halfspaces;    // one per tube, canonical tube order
};

struct Realization {
  Pseudograph graph;
  Integer c;
  std::vector<std::string> coordinate_order;
  std::vector<RealizedVertex> vertices;  // maximal tubings in face order
  HRepresentation hrep;
};

/// Loopless connected graphs only.
Realization realize(const Pseudograph& g);

struct IncidenceCertificate {
  bool ok = false;
  std::string detail;
  std::size_t pairs_checked = 0;
  std::size_t lattice_size = 0;
};

/// Every vertex sits on every hyperplane; for every (vertex, tube) the
/// halfspace holds with equality exactly when the tube is in the vertex's
/// tubing; the lattice of vertex sets cut out by tight halfspaces is
/// isomorphic to the tubing poset.
IncidenceCertificate verify_incidence(const Realization& r, const FacePoset& fp);
IncidenceCertificate verify_incidence(const Pseudograph& g);

/// Closure under intersection of the tight vertex sets of all halfspaces,
/// with the full vertex set on top, as a graded poset. members[i] lists the
/// vertex indices of element i.
struct IncidenceLattice {
  GradedPoset poset;
  std::vector<std::vector<std::size_t>> members;
};
IncidenceLattice incidence_lattice(const Realization& r);

/// Tubes of G carried into the loop-free graph: each loop becomes its edge
/// and brings the ghost node along.
Tube ghost_image(const Pseudograph& g, const GhostMap& lf, const Tube& t);
Tubing ghost_image(const Pseudograph& g, const GhostMap& lf, const Tubing& tubes);

struct ConeRealization {
  GhostMap loop_free;
  /// Realization of the loop-free graph with the ghost singleton halfspaces
  /// flagged as removed.
  Realization realization;
  /// Vertices that survive (their tubing has no ghost singleton).
  std::vector<std::size_t> kept;
  std::vector<Tube> removed_tubes;
};
ConeRealization cone_realization(const Pseudograph& g);

/// Checks the cone against the tubings of G: the surviving vertices are the
/// images of the maximal tubings, and a face is compact exactly when no ghost
/// singleton can join its image.
std::string check_cone(const Pseudograph& g, const ConeRealization& cone);

struct InequalityCheck {
  std::size_t instances = 0;
  std::string failure;  // empty when every instance holds
};
/// Strict inequality Lambda(a) < Lambda(join) - Lambda(b) + sum Lambda(meets)
/// - sum f_T(e over join-only edges) for adjacent or properly intersecting
/// bundle compatible tubes a, b and every maximal tubing T holding a minimal
/// join. Stops after `limit` instances when limit > 0.
InequalityCheck check_join_inequality(const Pseudograph& g, std::size_t limit = 0);

std::string to_string(const Integer& x);

}  // namespace pseudoassoc
