#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "pseudoassoc/catalog.hpp"
#include "pseudoassoc/construction.hpp"
#include "pseudoassoc/io.hpp"
#include "pseudoassoc/maps.hpp"
#include "pseudoassoc/realization.hpp"
#include "pseudoassoc/tubings.hpp"
#include "pseudoassoc/verify.hpp"

namespace pseudoassoc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Pseudograph load_graph(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read graph file " + path);
    text << in.rdbuf();
  }
  try {
    return parse_graph(text.str());
  } catch (const GraphError& e) {
    throw GraphError(path + ": " + e.what());
  }
}

// Refuses large enumerations unless forced.
void guard_size(const Pseudograph& g, bool force) {
  if (force) return;
  auto count = count_tubings(g, kFaceGuard + 1);
  if (count > kFaceGuard)
    throw UsageError("graph has more than " + std::to_string(kFaceGuard) + " faces (" + std::to_string(g.node_count()) +
                     " nodes, " + std::to_string(g.edge_count()) + " edges); pass --force to enumerate anyway");
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

void print_info(const Pseudograph& g, std::ostream& out) {
  std::size_t total = g.node_count() + g.edge_count();
  out << "nodes: " << g.node_count() << "\n";
  out << "edges: " << g.edge_count() << "\n";
  out << "bundles:";
  for (const auto& b : bundle_ids(g)) out << " {" << join(b, ",") << "}";
  out << "\n";
  std::vector<std::string> loops;
  for (auto l : g.loops()) loops.push_back(g.edge(l).id);
  out << "loops: " << loops.size();
  if (!loops.empty()) out << " (" << join(loops, ",") << ")";
  out << "\n";
  out << "redundant edges: " << g.redundant_edges() << "\n";
  out << "size: " << total << "\n";
  out << "dimension: " << g.dimension() << "\n";
  out << "components: " << g.components().size() << "\n";
  out << "kind: " << (g.loopless() ? "polytope" : "cone") << "\n";
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int report_map(const FaceMapTable& map, std::ostream& out) {
  out << map_report_json(map);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudograph associahedra: tubings, face posets, maps and realizations", "pseudoassoc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string graph_path;
  bool force = false;

  auto* info = app.add_subcommand("info", "Counts and invariants of a graph");
  info->add_option("graph", graph_path, "graph file (- for stdin)")->required();

  auto* tubes = app.add_subcommand("tubes", "List every tube in canonical order");
  tubes->add_option("graph", graph_path)->required();

  bool fvector_only = false;
  auto* faces = app.add_subcommand("faces", "List every tubing (face) and the f-vector");
  faces->add_option("graph", graph_path)->required();
  faces->add_flag("--fvector", fvector_only, "print only the f-vector");
  faces->add_flag("--force", force, "enumerate beyond the size guard");

  bool as_json = false, as_dot = false;
  auto* poset = app.add_subcommand("poset", "Face poset as DOT (default) or JSON");
  poset->add_option("graph", graph_path)->required();
  auto* json_flag = poset->add_flag("--json", as_json, "JSON output");
  poset->add_flag("--dot", as_dot, "DOT output")->excludes(json_flag);
  poset->add_flag("--force", force, "enumerate beyond the size guard");

  bool with_hrep = false;
  auto* realize_cmd = app.add_subcommand("realize", "Integer realization (cone for graphs with loops)");
  realize_cmd->add_option("graph", graph_path)->required();
  realize_cmd->add_flag("--hrep", with_hrep, "include hyperplanes and halfspaces");

  std::string edge_id;
  auto* contract_cmd = app.add_subcommand("contract", "Contraction map to G/e");
  contract_cmd->add_option("graph", graph_path)->required();
  contract_cmd->add_option("edge", edge_id)->required();
  auto* delete_cmd = app.add_subcommand("delete", "Deletion map to G-e");
  delete_cmd->add_option("graph", graph_path)->required();
  delete_cmd->add_option("edge", edge_id)->required();

  std::size_t tonks_n = 0;
  std::string order_list;
  std::optional<unsigned> seed;
  auto* tonks_cmd = app.add_subcommand("tonks", "Permutohedron to associahedron by deleting non-path edges");
  tonks_cmd->add_option("n", tonks_n, "node count")->required()->check(CLI::Range(2, 6));
  auto* order_opt = tonks_cmd->add_option("--order", order_list, "comma-separated deletion order");
  tonks_cmd->add_option("--seed", seed, "shuffle the deletion order with this seed")->excludes(order_opt);

  bool v_poset = false, v_real = false, v_cons = false, v_maps = false, v_all = false, v_json = false;
  auto* verify = app.add_subcommand("verify", "Run invariant suites; exit 0 iff all pass");
  verify->add_option("graph", graph_path)->required();
  verify->add_flag("--poset", v_poset);
  verify->add_flag("--realization", v_real);
  verify->add_flag("--construction", v_cons);
  verify->add_flag("--maps", v_maps);
  verify->add_flag("--all", v_all);
  verify->add_flag("--json", v_json, "JSON report");

  std::string family, family_arg;
  bool identities = false, list = false;
  auto* catalog = app.add_subcommand("catalog", "Emit a standard graph file");
  catalog->add_option("family", family, "path, cycle, complete, edgeless, multiedge, bouquet or figure");
  catalog->add_option("n", family_arg, "size, or figure id");
  catalog->add_flag("--identities", identities, "check the classical family identities");
  catalog->add_flag("--list", list, "list figure ids");
  catalog->add_flag("--json", v_json, "JSON report for --identities");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    auto code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (info->parsed()) {
      print_info(load_graph(graph_path), out);
      return kOk;
    }
    if (tubes->parsed()) {
      auto g = load_graph(graph_path);
      out << format_tubes(g, enumerate_tubes(g));
      return kOk;
    }
    if (faces->parsed()) {
      auto g = load_graph(graph_path);
      guard_size(g, force);
      auto fp = enumerate_tubings(g);
      if (!fvector_only) out << format_faces(fp);
      out << format_fvector(fp) << "\n";
      return kOk;
    }
    if (poset->parsed()) {
      auto g = load_graph(graph_path);
      guard_size(g, force);
      auto fp = enumerate_tubings(g);
      out << (as_json ? poset_to_json(fp) : poset_to_dot(fp));
      return kOk;
    }
    if (realize_cmd->parsed()) {
      auto g = load_graph(graph_path);
      if (!g.connected()) throw GraphError("realize needs a connected graph; " + graph_path + " has " +
                                           std::to_string(g.components().size()) + " components");
      if (g.loopless())
        out << realization_to_json(realize(g), with_hrep);
      else
        out << cone_to_json(cone_realization(g), with_hrep);
      return kOk;
    }
    if (contract_cmd->parsed()) {
      auto g = load_graph(graph_path);
      auto e = g.edge_index(edge_id);
      if (g.edge(e).is_loop()) throw GraphError("edge " + edge_id + " is a loop; contracting it is deletion, use delete");
      return report_map(contract_map(g, edge_id), out);
    }
    if (delete_cmd->parsed()) {
      auto g = load_graph(graph_path);
      return report_map(delete_map(g, edge_id), out);
    }
    if (tonks_cmd->parsed()) {
      auto order = split_ids(order_list);
      if (seed) {
        order = tonks_edges(tonks_n);
        std::mt19937 rng(*seed);
        // Fisher-Yates with the engine directly, so output does not depend on the library's shuffle
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
      }
      return report_map(tonks(tonks_n, order), out);
    }
    if (verify->parsed()) {
      auto g = load_graph(graph_path);
      if (!(v_poset || v_real || v_cons || v_maps)) v_all = true;
      std::vector<CheckResult> results;
      auto add = [&](std::vector<CheckResult> part) { results.insert(results.end(), part.begin(), part.end()); };
      if (v_all || v_poset) add(verify_poset(g));
      if (v_all || v_cons) add(verify_construction(g));
      if (v_all || v_real) add(verify_realization(g));
      if (v_all || v_maps) add(verify_maps(g));
      out << (v_json ? format_results_json(results) : format_results(results));
      return all_pass(results) ? kOk : kFailed;
    }
    if (catalog->parsed()) {
      if (list) {
        for (const auto& id : figure_ids()) out << id << "\n";
        return kOk;
      }
      if (identities) {
        auto checks = verify_family_identities();
        out << (v_json ? format_report_json(checks) : format_report(checks));
        bool ok = std::all_of(checks.begin(), checks.end(), [](const FamilyCheck& c) { return c.pass; });
        return ok ? kOk : kFailed;
      }
      if (family.empty()) throw UsageError("catalog needs a family, --list or --identities");
      out << to_json(standard_graph(parse_family(family, family_arg)));
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TooManyFaces& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kFailed;
  } catch (const RealizationError& e) {
    err << "realization failed: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace pseudoassoc::cli
