#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pseudoassoc/pseudograph.hpp"

namespace pseudoassoc {

/// Set of node or edge indices of one graph, stored as a 64-bit mask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static IndexSet single(std::size_t i) { return IndexSet(std::uint64_t{1} << i); }
  static IndexSet of(const std::vector<std::size_t>& items);

  constexpr std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool contains(std::size_t i) const { return i < 64 && (bits_ >> i) & 1u; }
  bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }

  void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  friend IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

  std::vector<std::size_t> items() const;

 private:
  std::uint64_t bits_ = 0;
};

/// A subgraph given by explicit node and edge sets. Parallel edges mean the
/// node set alone does not identify a tube, so edges are always stored.
struct Tube {
  IndexSet nodes;
  IndexSet edges;

  std::size_t element_count() const { return nodes.size() + edges.size(); }
  bool subset_of(const Tube& o) const { return nodes.subset_of(o.nodes) && edges.subset_of(o.edges); }
  bool proper_subset_of(const Tube& o) const { return subset_of(o) && *this != o; }

  friend constexpr auto operator<=>(const Tube&, const Tube&) = default;
};

/// Canonical tube order: element count, then node indices, then edge
/// indices, both compared lexicographically as sorted lists.
bool canonical_less(const Tube& a, const Tube& b);

/// The whole graph as a subgraph (never a tube).
Tube whole_graph(const Pseudograph& g);

/// Induced subgraph on a node set: all edges and loops with both ends inside.
Tube induced(const Pseudograph& g, IndexSet nodes);

/// Nodes of `nodes` reachable from its lowest member along `edges`.
bool connected_subgraph(const Pseudograph& g, IndexSet nodes, IndexSet edges);

/// Tube test for raw index sets (ids assumed valid).
bool is_tube(const Pseudograph& g, const Tube& t);
/// Tube test by identifiers; throws GraphError on unknown ids.
bool is_tube(const Pseudograph& g, const std::vector<std::string>& nodes,
             const std::vector<std::string>& edges);

/// Pairwise compatibility: proper nesting, or disjoint and not joined by any
/// single edge of g.
bool compatible(const Pseudograph& g, const Tube& a, const Tube& b);

/// Whether t holds the endpoint(s) of edge e but not e itself.
bool excludes(const Pseudograph& g, const Tube& t, std::size_t e);

/// Full tube: the induced subgraph on its own node set.
bool is_full(const Pseudograph& g, const Tube& t);

/// Nodes adjacent (through a non-loop edge) to some node of the set, minus
/// the set itself.
IndexSet neighborhood(const Pseudograph& g, IndexSet nodes);

/// Tube built from ids; no validity check.
Tube make_tube(const Pseudograph& g, const std::vector<std::string>& nodes,
               const std::vector<std::string>& edges = {});

std::vector<std::string> node_ids(const Pseudograph& g, IndexSet nodes);
std::vector<std::string> edge_ids(const Pseudograph& g, IndexSet edges);
/// Human-readable form, e.g. {v1,v2|e1}.
std::string describe(const Pseudograph& g, const Tube& t);

}  // namespace pseudoassoc
