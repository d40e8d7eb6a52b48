#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pseudoassoc {

/// Raised for invalid graph input or an operation applied to an unknown or
/// unsuitable node/edge.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by parse_graph; the message names the offending token.
class ParseError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Raised when an internal consistency check fails. Seeing one means a bug
/// (or a falsified structural assumption), not bad user input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Ghost nodes created by loop_free() are named `<node><kGhostMarker>`.
/// Input identifiers may not contain the marker.
inline constexpr char kGhostMarker = '\'';

/// Graph input record: endpoints given by node identifier.
struct EdgeSpec {
  std::string id;
  std::string first;
  std::string second;
};

/// Stored edge: endpoints as node indices, in the order they were given.
struct EdgeRecord {
  std::string id;
  std::size_t first = 0;
  std::size_t second = 0;

  bool is_loop() const { return first == second; }
  bool touches(std::size_t v) const { return first == v || second == v; }
};

/// Finite pseudograph: parallel edges, loops and disconnected pieces are all
/// allowed. Immutable after construction; every derived quantity is computed
/// once in the constructor.
class Pseudograph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Pseudograph() = default;
  Pseudograph(std::vector<std::string> nodes, const std::vector<EdgeSpec>& edges);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const std::string& node_id(std::size_t v) const { return nodes_.at(v); }
  const EdgeRecord& edge(std::size_t e) const { return edges_.at(e); }

  std::size_t node_count() const { return nodes_.size(); }
  /// Number of edge records, loops included.
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t loop_count() const { return loops_.size(); }
  /// |G|: nodes plus edges (loops included).
  std::size_t size() const { return nodes_.size() + edges_.size(); }
  /// r = sum over bundles of (b_i - 1), plus the loop count.
  std::size_t redundant_edges() const { return redundant_; }
  /// n - 1 + r.
  std::size_t dimension() const { return nodes_.size() - 1 + redundant_; }

  std::size_t find_node(std::string_view id) const;
  std::size_t find_edge(std::string_view id) const;
  std::size_t node_index(std::string_view id) const;  // throws GraphError
  std::size_t edge_index(std::string_view id) const;  // throws GraphError

  /// Non-loop edges grouped by endpoint pair, ordered by smallest member.
  const std::vector<std::vector<std::size_t>>& bundles() const { return bundles_; }
  /// Bundle index of an edge, npos for loops.
  std::size_t bundle_of(std::size_t e) const { return bundle_of_.at(e); }
  const std::vector<std::size_t>& loops() const { return loops_; }
  /// Node indices per connected component, ordered by smallest node.
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  bool connected() const { return components_.size() == 1; }
  bool loopless() const { return loops_.empty(); }
  bool simple() const { return redundant_ == 0; }

  /// Mask view, only available when node_count() <= 64 and edge_count() <= 64.
  bool fits_masks() const { return nodes_.size() <= 64 && edges_.size() <= 64; }
  void require_masks() const;
  std::uint64_t neighbor_mask(std::size_t v) const { return neighbors_.at(v); }
  std::uint64_t incident_mask(std::size_t v) const { return incident_.at(v); }
  std::uint64_t bundle_mask(std::size_t b) const { return bundle_masks_.at(b); }
  std::uint64_t all_nodes_mask() const;
  std::uint64_t all_edges_mask() const;

  /// Component index of a node.
  std::size_t component_of(std::size_t v) const { return component_of_.at(v); }

  EdgeSpec edge_spec(std::size_t e) const;
  std::vector<EdgeSpec> edge_specs() const;

  friend bool operator==(const Pseudograph& a, const Pseudograph& b) {
    return a.nodes_ == b.nodes_ && a.edge_specs() == b.edge_specs();
  }

 private:
  std::vector<std::string> nodes_;
  std::vector<EdgeRecord> edges_;
  std::map<std::string, std::size_t, std::less<>> node_lookup_;
  std::map<std::string, std::size_t, std::less<>> edge_lookup_;

  std::vector<std::vector<std::size_t>> bundles_;
  std::vector<std::size_t> bundle_of_;
  std::vector<std::size_t> loops_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> component_of_;
  std::size_t redundant_ = 0;

  std::vector<std::uint64_t> neighbors_;
  std::vector<std::uint64_t> incident_;
  std::vector<std::uint64_t> bundle_masks_;
};

inline bool operator==(const EdgeSpec& a, const EdgeSpec& b) {
  return a.id == b.id && a.first == b.first && a.second == b.second;
}

/// Loop-free transform: every loop at v becomes an edge v -- v' to a fresh
/// ghost node v'. Loop ids are kept, so loop_to_edge is the identity on ids;
/// it is stored anyway so callers do not rely on that.
struct GhostMap {
  Pseudograph graph;
  std::vector<std::string> ghost_nodes;
  std::map<std::string, std::string> loop_to_edge;
  /// ghost node id -> node it was split from
  std::map<std::string, std::string> ghost_parent;
};

/// Reads the JSON graph format: {"nodes":[...],"edges":[{"id":..,"ends":[a,b]}]}.
Pseudograph parse_graph(std::string_view text);
/// Canonical serialisation; parse_graph(to_json(g)) == g and the text is stable.
std::string to_json(const Pseudograph& g);

/// Bundle partition as edge ids.
std::vector<std::vector<std::string>> bundle_ids(const Pseudograph& g);

/// Drops loops and keeps the lowest-index edge of every bundle.
Pseudograph underlying_simple(const Pseudograph& g);

/// G/e for a non-loop edge. The merged node is named by concatenating the
/// endpoint ids in node order and sits at the position of the earlier one.
/// Bundle-mates of e become loops.
Pseudograph contract(const Pseudograph& g, std::string_view edge_id);

/// G - e. Works for loops too; the node set is unchanged.
Pseudograph delete_edge(const Pseudograph& g, std::string_view edge_id);

GhostMap loop_free(const Pseudograph& g);

/// Node id used for the merge of two nodes under contraction.
std::string merged_node_id(const Pseudograph& g, std::size_t a, std::size_t b);

}  // namespace pseudoassoc
