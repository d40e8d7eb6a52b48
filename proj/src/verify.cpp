#include "pseudoassoc/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pseudoassoc/catalog.hpp"
#include "pseudoassoc/construction.hpp"
#include "pseudoassoc/maps.hpp"
#include "pseudoassoc/realization.hpp"
#include "pseudoassoc/tubings.hpp"

namespace pseudoassoc {

namespace {

CheckResult result(const char* suite, std::string name, const std::string& failure) {
  return {suite, std::move(name), failure.empty(), false, failure};
}

CheckResult skipped(const char* suite, std::string name, std::string why) {
  return {suite, std::move(name), true, true, std::move(why)};
}

// Runs a check, turning library exceptions into failures.
template <class F>
CheckResult guarded(const char* suite, std::string name, F&& check) {
  try {
    return result(suite, std::move(name), check());
  } catch (const std::exception& e) {
    return result(suite, std::move(name), std::string("exception: ") + e.what());
  }
}

std::string check_grading(const GradedPoset& p) {
  std::size_t tops = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.rank[i] == 0) ++tops;
    for (auto j : p.above[i])
      if (p.rank[j] + 1 != p.rank[i]) return "cover " + std::to_string(i) + " -> " + std::to_string(j) + " skips a rank";
  }
  return tops == 1 ? "" : std::to_string(tops) + " top elements";
}

std::string check_extension(const FacePoset& fp) {
  const auto& p = fp.poset();
  auto d = static_cast<int>(fp.graph().dimension());
  for (std::size_t i = 0; i < fp.size(); ++i) {
    if (p.rank[i] == d) {
      if (fp.faces()[i].size() != static_cast<std::size_t>(d))
        return "vertex " + describe(fp.graph(), fp.tubing(i)) + " has the wrong size";
    } else if (p.below[i].empty()) {
      return "tubing " + describe(fp.graph(), fp.tubing(i)) + " does not extend to a vertex";
    }
  }
  return {};
}

std::string check_diamond(const GradedPoset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::map<std::size_t, std::size_t> middle;
    for (auto z : p.above[x])
      for (auto y : p.above[z]) ++middle[y];
    for (const auto& [y, count] : middle)
      if (count != 2)
        return "interval between " + std::to_string(x) + " and " + std::to_string(y) + " has " +
               std::to_string(count) + " middle elements";
  }
  return {};
}

std::string check_euler(const GradedPoset& p) {
  long long chi = 0;
  auto counts = p.face_counts();
  for (std::size_t i = 0; i < counts.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(counts[i]);
  return chi == 1 ? "" : "alternating face count sum is " + std::to_string(chi);
}

}  // namespace

std::vector<CheckResult> verify_poset(const Pseudograph& g) {
  const char* suite = "poset";
  std::vector<CheckResult> out;
  FacePoset fp;
  try {
    fp = enumerate_tubings(g);
  } catch (const std::exception& e) {
    out.push_back(result(suite, "enumerate", e.what()));
    return out;
  }
  out.push_back(guarded(suite, "maximal tubings have n-1+r tubes", [&] {
    auto maximal = maximal_tubings(fp);
    return maximal.size() == fp.vertices().size() ? std::string{} : std::string("vertex count mismatch");
  }));
  out.push_back(result(suite, "every tubing extends to a vertex", check_extension(fp)));
  out.push_back(result(suite, "graded with a single top", check_grading(fp.poset())));
  out.push_back(guarded(suite, "vertices are compact", [&] {
    for (auto v : fp.vertices())
      if (!fp.is_compact(v)) return "vertex " + describe(g, fp.tubing(v)) + " is not compact";
    return std::string{};
  }));
  if (g.loopless()) {
    out.push_back(result(suite, "diamond property", check_diamond(fp.poset())));
    out.push_back(result(suite, "Euler relation", check_euler(fp.poset())));
  } else {
    out.push_back(skipped(suite, "diamond property", "cone"));
    out.push_back(skipped(suite, "Euler relation", "cone"));
  }
  if (!g.connected())
    out.push_back(guarded(suite, "component product times simplex", [&] { return check_component_product(g); }));
  return out;
}

std::vector<CheckResult> verify_construction(const Pseudograph& g) {
  const char* suite = "construction";
  std::vector<CheckResult> out;
  out.push_back(guarded(suite, "promotion replay matches enumeration", [&] {
    auto cert = verify_truncation(g);
    return cert.ok ? std::string{} : cert.detail;
  }));
  if (!g.connected()) {
    out.push_back(skipped(suite, "replay from the raw base", "disconnected graph; built per component"));
    out.push_back(skipped(suite, "tie order independence", "disconnected graph; built per component"));
    return out;
  }
  out.push_back(guarded(suite, "replay from the raw base", [&] {
    auto cert = verify_promotion_sequence(g, raw_promotion_order(g), BaseKind::raw);
    return cert.ok ? std::string{} : cert.detail;
  }));
  out.push_back(guarded(suite, "tie order independence", [&] {
    auto order = promotion_order(g);
    // reverse every run of equal element count
    for (std::size_t i = 0; i < order.size();) {
      auto j = i;
      while (j < order.size() && order[j].element_count() == order[i].element_count()) ++j;
      std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i), order.begin() + static_cast<std::ptrdiff_t>(j));
      i = j;
    }
    PromotionState state(g);
    for (const auto& t : order) state.promote(t);
    auto fp = enumerate_tubings(g);
    std::set<Tubing> built, expected;
    for (auto t : state.labelled_faces()) {
      canonicalize(t);
      built.insert(t);
    }
    for (std::size_t i = 0; i < fp.size(); ++i) expected.insert(fp.tubing(i));
    if (built != expected) return std::string("label sets differ");
    IsoOptions opt;
    opt.respect_compact = true;
    return find_isomorphism(state.poset(), fp.poset(), opt) ? std::string{} : std::string("no isomorphism");
  }));
  return out;
}

std::vector<CheckResult> verify_realization(const Pseudograph& g) {
  const char* suite = "realization";
  std::vector<CheckResult> out;
  if (!g.connected()) {
    out.push_back(skipped(suite, "realization", "disconnected graph"));
    return out;
  }
  if (g.loopless()) {
    out.push_back(guarded(suite, "incidence and face lattice", [&] {
      auto cert = verify_incidence(g);
      return cert.ok ? std::string{} : cert.detail;
    }));
    out.push_back(guarded(suite, "join inequality", [&] { return check_join_inequality(g).failure; }));
  } else {
    out.push_back(guarded(suite, "cone from the loop-free graph", [&] {
      auto cone = cone_realization(g);
      auto why = check_cone(g, cone);
      if (!why.empty()) return why;
      auto full = cone.realization;
      for (auto& h : full.hrep.halfspaces) h.removed = false;
      auto cert = verify_incidence(full, enumerate_tubings(cone.loop_free.graph));
      return cert.ok ? std::string{} : "loop-free graph: " + cert.detail;
    }));
  }
  return out;
}

std::vector<CheckResult> verify_maps(const Pseudograph& g, std::size_t commute_limit) {
  const char* suite = "maps";
  std::vector<CheckResult> out;
  for (const auto& e : g.edges()) {
    if (!e.is_loop()) {
      out.push_back(guarded(suite, "contract " + e.id + " preserves order",
                            [&] { return check_order_preserving(contract_map(g, e.id)); }));
    } else {
      out.push_back(guarded(suite, "loop " + e.id + " contraction equals deletion",
                            [&] { return check_loop_agreement(g, e.id); }));
    }
    out.push_back(guarded(suite, "delete " + e.id + " is a cellular surjection", [&] {
      auto map = delete_map(g, e.id);
      auto why = check_order_preserving(map);
      if (why.empty()) why = check_surjective(map);
      if (why.empty()) why = check_deletion_dimension(g, map);
      return why;
    }));
  }
  if (g.edge_count() <= commute_limit) {
    for (std::size_t a = 0; a < g.edge_count(); ++a)
      for (std::size_t b = a + 1; b < g.edge_count(); ++b) {
        const auto &x = g.edge(a).id, &y = g.edge(b).id;
        out.push_back(guarded(suite, "contractions of " + x + ", " + y + " commute",
                              [&] { return check_contract_commutes(g, x, y); }));
        out.push_back(guarded(suite, "deletions of " + x + ", " + y + " commute",
                              [&] { return check_delete_commutes(g, x, y); }));
      }
  }
  return out;
}

std::vector<CheckResult> verify_all(const Pseudograph& g) {
  std::vector<CheckResult> out;
  for (auto part : {verify_poset(g), verify_construction(g), verify_realization(g), verify_maps(g)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << r.suite << "/" << r.name << ": " << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL");
    if (!r.pass || r.skipped) out << " (" << r.detail << ")";
    out << "\n";
  }
  return out.str();
}

std::string format_results_json(const std::vector<CheckResult>& results) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : results)
    rows.push_back({{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"skipped", r.skipped}, {"detail", r.detail}});
  return rows.dump(2) + "\n";
}

}  // namespace pseudoassoc
