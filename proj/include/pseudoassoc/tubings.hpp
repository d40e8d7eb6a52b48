#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pseudoassoc/poset.hpp"
#include "pseudoassoc/pseudograph.hpp"
#include "pseudoassoc/tube.hpp"

namespace pseudoassoc {

/// A tubing as explicit tubes, kept in canonical tube order.
using Tubing = std::vector<Tube>;

/// Every tube of g in canonical order.
std::vector<Tube> enumerate_tubes(const Pseudograph& g);

/// Whether a set of tubes is a tubing: pairwise compatible and not the full
/// set of component tubes.
bool is_tubing(const Pseudograph& g, const Tubing& tubes);

/// Canonical order for a tubing (sorts in place).
void canonicalize(Tubing& tubes);

/// Whether every loop of g is excluded by some tube of the tubing.
bool excludes_all_loops(const Pseudograph& g, const Tubing& tubes);

/// Face poset of the pseudograph associahedron: every tubing, ordered by
/// reverse containment. Face 0 is the empty tubing (the top).
class FacePoset {
 public:
  using Face = std::vector<std::uint32_t>;  // sorted indices into tubes()

  FacePoset() = default;
  FacePoset(Pseudograph graph, std::vector<Tube> tubes, std::vector<Face> faces);

  const Pseudograph& graph() const { return graph_; }
  const std::vector<Tube>& tubes() const { return tubes_; }
  const std::vector<Face>& faces() const { return faces_; }
  const GradedPoset& poset() const { return poset_; }
  int dimension() const { return poset_.dimension; }
  std::size_t size() const { return faces_.size(); }

  Tubing tubing(std::size_t face) const;
  std::optional<std::size_t> find(const Tubing& tubes) const;
  std::optional<std::size_t> tube_index(const Tube& t) const;
  bool is_compact(std::size_t face) const { return poset_.compact[face]; }
  std::vector<std::size_t> fvector() const { return poset_.fvector(); }
  /// Faces of maximal rank (vertices).
  std::vector<std::size_t> vertices() const;

 private:
  Pseudograph graph_;
  std::vector<Tube> tubes_;
  std::vector<Face> faces_;
  std::map<Face, std::size_t> lookup_;
  std::map<Tube, std::size_t> tube_lookup_;
  GradedPoset poset_;
};

struct EnumerationLimit {
  std::size_t max_faces = 0;  ///< 0 = unlimited
};

/// Thrown by enumerate_tubings when a limit is exceeded.
class TooManyFaces : public std::runtime_error {
 public:
  TooManyFaces(std::size_t tubes, std::size_t limit);
  std::size_t tubes;
  std::size_t limit;
};

FacePoset enumerate_tubings(const Pseudograph& g, EnumerationLimit limit = {});

/// Counts tubings without building the poset; stops counting at `cap` when nonzero.
std::size_t count_tubings(const Pseudograph& g, std::size_t cap = 0);

/// All tubings with d = n - 1 + r tubes. Throws InconsistencyError if some
/// tubing is maximal by inclusion but has a different size.
std::vector<Tubing> maximal_tubings(const Pseudograph& g);
std::vector<Tubing> maximal_tubings(const FacePoset& faces);

/// Human-readable form of a tubing, e.g. [{v1} {v1,v2|e1}].
std::string describe(const Pseudograph& g, const Tubing& tubes);

}  // namespace pseudoassoc
