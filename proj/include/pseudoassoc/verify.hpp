#pragma once

#include <string>
#include <vector>

#include "pseudoassoc/pseudograph.hpp"

namespace pseudoassoc {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

/// Maximal tubing size, extension to vertices, grading, diamond property and
/// Euler relation (polytopes), component product (disconnected graphs).
std::vector<CheckResult> verify_poset(const Pseudograph& g);
/// Promotion replay against enumeration (from both bases), and agreement of
/// two tie orders.
std::vector<CheckResult> verify_construction(const Pseudograph& g);
/// Incidence certificate and join inequality (loopless), cone checks (loops).
std::vector<CheckResult> verify_realization(const Pseudograph& g);
/// Contraction and deletion of every edge; pairwise commutativity when the
/// graph has at most `commute_limit` edges.
std::vector<CheckResult> verify_maps(const Pseudograph& g, std::size_t commute_limit = 4);
std::vector<CheckResult> verify_all(const Pseudograph& g);

bool all_pass(const std::vector<CheckResult>& results);
/// "suite/name: PASS" lines, with the detail after failures.
std::string format_results(const std::vector<CheckResult>& results);
std::string format_results_json(const std::vector<CheckResult>& results);

}  // namespace pseudoassoc
