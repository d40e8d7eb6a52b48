#pragma once

#include <string>
#include <vector>

#include "pseudoassoc/construction.hpp"
#include "pseudoassoc/maps.hpp"
#include "pseudoassoc/realization.hpp"
#include "pseudoassoc/tubings.hpp"

namespace pseudoassoc {

/// "dim 2; f = (4, 4)"
std::string format_fvector(const FacePoset& fp);

/// One line per tube: index, element count, tube.
std::string format_tubes(const Pseudograph& g, const std::vector<Tube>& tubes);
/// One line per face: index, rank, compact flag, tubing.
std::string format_faces(const FacePoset& fp);

/// {"dimension", "faces":[{"tubes":[[[nodes],[edges]],...],"rank","compact"}], "covers":[[i,j]]}
/// where [i,j] means face j covers face i (j is one rank closer to the top).
std::string poset_to_json(const FacePoset& fp);
/// Hasse diagram; nodes are face indices labelled by tube count.
std::string poset_to_dot(const FacePoset& fp);

std::string realization_to_json(const Realization& r, bool with_hrep);
/// Same layout as a realization of the loop-free graph, restricted to the
/// surviving vertices, plus the ghost nodes; removed halfspaces stay listed
/// with "removed": true.
std::string cone_to_json(const ConeRealization& cone, bool with_hrep);

/// [{"from": i, "to": j}]
std::string map_table_to_json(const FaceMapTable& map);
/// Target graph, face and vertex counts, the order/surjectivity report and
/// the map table.
std::string map_report_json(const FaceMapTable& map);

std::string promotion_log_to_json(const Pseudograph& g, const std::vector<PromotionStep>& log);

}  // namespace pseudoassoc
