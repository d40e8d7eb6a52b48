#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pseudoassoc/poset.hpp"
#include "pseudoassoc/pseudograph.hpp"
#include "pseudoassoc/tube.hpp"
#include "pseudoassoc/tubings.hpp"

namespace pseudoassoc {

/// Tubes that are induced subgraphs (whole bundles, every incident loop).
std::vector<Tube> full_tubes(const Pseudograph& g);

/// A face of the base complex: a tubing of full tubes together with the set
/// S of kept edges (at least one edge of every bundle; any loops).
struct BaseFace {
  Tubing full;
  IndexSet kept;
};

/// Tubing labelling a base face: each full tube cut down to the kept edges,
/// plus G_S itself when S drops something.
Tubing derived_tubing(const Pseudograph& g, const BaseFace& face);

/// Facets of the base complex are either full tubes or "exclusion" facets,
/// one per edge of a multi-edge bundle and one per loop; the exclusion facet
/// of x becomes the tube G - x. Promotion adds facets labelled by the
/// promoted tube.
struct FacetLabel {
  enum class Kind { full, exclusion, promoted };
  Kind kind = Kind::full;
  Tube tube;
  std::size_t edge = Pseudograph::npos;  // exclusion facets only
};

/// Faces as sorted facet-index sets; the empty set is the whole polyhedron.
using FacetSet = std::vector<std::uint32_t>;

/// Base complex of a connected graph: full-tube tubings of the underlying
/// simple graph times one simplex per multi-edge bundle times one ray per
/// loop, stored as the sets of facets meeting in each face.
class BaseComplex {
 public:
  explicit BaseComplex(const Pseudograph& g);

  const Pseudograph& graph() const { return graph_; }
  const std::vector<FacetLabel>& facets() const { return facets_; }
  const std::vector<BaseFace>& faces() const { return faces_; }
  const std::vector<FacetSet>& facet_sets() const { return facet_sets_; }
  /// Face poset, faces indexed as in faces().
  const GradedPoset& poset() const { return poset_; }

  FacetSet facet_set(const BaseFace& face) const;
  /// Intersection of two faces; nullopt when they do not meet.
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> find(const FacetSet& s) const;

 private:
  Pseudograph graph_;
  std::vector<FacetLabel> facets_;
  std::vector<BaseFace> faces_;
  std::vector<FacetSet> facet_sets_;
  std::map<FacetSet, std::size_t> lookup_;
  GradedPoset poset_;
};

struct PromotionStep {
  Tube tube;
  std::size_t elements = 0;
  std::size_t added = 0;
  std::size_t removed = 0;
  /// Faces present before the step whose labels are all compatible with the
  /// promoted tube and which survive the step.
  std::size_t label_compatible = 0;
  std::size_t faces_after = 0;
};

/// Iterated truncation replayed on the facet-set complex. Promoting t is a
/// stellar subdivision at the face currently associated with t: faces
/// containing it disappear and every surviving face that meets it gains the
/// new facet.
/// Where promotion starts. truncated: the base complex above, full tubes
/// already cut. raw: the bare product of simplices and rays, node facets
/// labelled by induced singletons, so full tubes must be promoted too.
enum class BaseKind { truncated, raw };

class PromotionState {
 public:
  /// strict: full tubes first with node count non-increasing, then the
  /// remaining tubes in non-decreasing element count.
  explicit PromotionState(const Pseudograph& g, bool strict = true, BaseKind base = BaseKind::truncated);

  const Pseudograph& graph() const { return graph_; }
  const std::vector<FacetLabel>& facets() const { return facets_; }
  const std::set<FacetSet>& faces() const { return faces_; }
  const std::vector<PromotionStep>& log() const { return log_; }
  /// Non-full tubes still to promote, in the prescribed order.
  std::vector<Tube> pending() const;
  /// Face currently associated with a pending tube.
  FacetSet target(const Tube& t) const;

  const PromotionStep& promote(const Tube& t);
  void promote_all();

  /// Facet labels of every face, as tubings.
  std::vector<Tubing> labelled_faces() const;
  /// The complex as a graded poset (rank = number of facets).
  GradedPoset poset() const;

 private:
  Pseudograph graph_;
  bool strict_;
  std::size_t last_full_nodes_ = 0;  // 0 before any full promotion
  std::size_t last_elements_ = 0;    // of the last non-full promotion
  std::vector<FacetLabel> facets_;
  std::set<FacetSet> faces_;
  std::map<Tube, FacetSet> targets_;  // pending tubes
  std::vector<PromotionStep> log_;
};

/// Non-full tubes other than the G - x exclusion facets, ordered by element
/// count then canonically. These are the tubes promotion has to add.
std::vector<Tube> promotion_order(const Pseudograph& g);

/// Full tubes with two or more nodes, largest node count first (increasing
/// dimension of their faces), followed by promotion_order(g).
std::vector<Tube> raw_promotion_order(const Pseudograph& g);

/// Base complex followed by every promotion in order, returned as the face
/// poset of tubings read off the facet labels.
FacePoset construct_by_promotion(const Pseudograph& g);

struct TruncationCertificate {
  bool ok = false;
  bool isomorphic = false;
  /// construction face index -> enumerated face index
  std::vector<std::size_t> isomorphism;
  std::string detail;
  std::vector<PromotionStep> log;
};

/// Replays the construction and compares it with enumerate_tubings: the
/// label sets must agree and an explicit poset isomorphism must be found.
TruncationCertificate verify_truncation(const Pseudograph& g);

/// Same comparison for an arbitrary promotion sequence (connected graphs).
/// The sequence must list every pending tube exactly once; a step whose face
/// has already been cut away ends the replay with ok = false.
TruncationCertificate verify_promotion_sequence(const Pseudograph& g, const std::vector<Tube>& order,
                                                BaseKind base);

}  // namespace pseudoassoc
