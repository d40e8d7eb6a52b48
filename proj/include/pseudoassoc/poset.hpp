#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pseudoassoc {

/// Graded face poset stored as a Hasse diagram. Rank is codimension: the
/// unique top element (the whole polytope or cone) has rank 0 and a face of
/// rank k has dimension `dimension - k`.
struct GradedPoset {
  int dimension = 0;
  std::vector<int> rank;
  /// above[i]: elements covering i (one rank smaller, larger faces)
  std::vector<std::vector<std::size_t>> above;
  /// below[i]: elements covered by i
  std::vector<std::vector<std::size_t>> below;
  std::vector<bool> compact;

  std::size_t size() const { return rank.size(); }
  std::size_t cover_count() const;
  std::size_t top() const;
  /// f-vector (f_0, ..., f_{d-1}); the top element is not counted.
  std::vector<std::size_t> fvector() const;
  /// Face counts indexed by dimension 0..d, top included.
  std::vector<std::size_t> face_counts() const;
  /// Rebuilds `below` from `above` and sorts both.
  void finalize();
};

/// Componentwise product; ranks and dimensions add, compact iff both are.
GradedPoset poset_product(const GradedPoset& p, const GradedPoset& q);
/// Index of the pair (i, j) inside poset_product(p, q).
inline std::size_t product_index(const GradedPoset& q, std::size_t i, std::size_t j) {
  return i * q.size() + j;
}

/// Face poset of the (k-1)-simplex: all subsets of k facets except the full one.
GradedPoset simplex_poset(std::size_t k);
/// Face poset of a ray: the ray itself and its apex (compact).
GradedPoset ray_poset();
/// Single point.
GradedPoset point_poset();

struct IsoOptions {
  bool respect_compact = false;
  /// Search steps before giving up (0 = unlimited).
  std::size_t step_limit = 0;
};

/// Backtracking search for a rank- and cover-preserving bijection a -> b.
/// Candidates are pruned by rank, cover degrees and, for rank-1 elements,
/// by the counts of elements below them.
std::optional<std::vector<std::size_t>> find_isomorphism(const GradedPoset& a, const GradedPoset& b,
                                                         const IsoOptions& options = {});

/// Checks that `map` is a bijection preserving rank and covers in both
/// directions. Returns an empty string on success, otherwise a description of
/// the first failure.
std::string check_isomorphism(const GradedPoset& a, const GradedPoset& b,
                              const std::vector<std::size_t>& map, bool respect_compact = false);

}  // namespace pseudoassoc
