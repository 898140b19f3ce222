// Command-line front end: decompose a graph document into its k-edge-blocks,
// build nested bond sets and tree-cut decompositions, and run the verifier
// and oracle suites. Exit codes: 0 all checks pass, 1 a verification failed,
// 2 input/config error, 3 internal invariant violated.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "edgeblocks/distinguishers.hpp"
#include "edgeblocks/edge_blocks.hpp"
#include "edgeblocks/errors.hpp"
#include "edgeblocks/generation.hpp"
#include "edgeblocks/mincut.hpp"
#include "edgeblocks/multigraph.hpp"
#include "edgeblocks/oracles.hpp"
#include "edgeblocks/reports.hpp"
#include "edgeblocks/treecut.hpp"

namespace {

using namespace edgeblocks;

struct RunConfig {
  std::string command;
  std::string input;
  std::string output = "-";
  std::string format = "json";
  std::optional<long long> k;
  int root = 0;
  long long cap = kDefaultEnumerationCap;
  std::string nested_input;  // verify: external set instead of the built one
};

void write_output(const RunConfig& config, const std::string& text) {
  if (config.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out) throw graph_format_error("cannot open output file: " + config.output);
  out << text;
}

std::string render_blocks_text(const Multigraph& g, const EdgeBlockHierarchy& h) {
  std::ostringstream out;
  out << "k-edge-blocks (max level " << h.max_level << ")\n";
  for (long long k = 1; k <= h.max_level; ++k) {
    out << "k=" << k << ":";
    for (const VertexSet& block : h.k_blocks(k)) out << " " << block.to_string();
    out << "\n";
  }
  (void)g;
  return out.str();
}

std::string render_nested_text(const NestedBondSet& set) {
  std::ostringstream out;
  out << "nested bond set: " << set.members.size() << " members, phase-1 core "
      << set.phase1_count << ", " << set.pairs.size() << " block pairs\n";
  for (const NestedBondMember& m : set.members)
    out << "  " << m.separation.to_string() << " [" << member_origin_name(m.origin) << ", distinguishes "
        << m.distinguishes.size() << " pairs]\n";
  return out.str();
}

int run_blocks(const RunConfig& config, const Multigraph& g) {
  EdgeBlockHierarchy h = block_hierarchy(g);
  if (config.format == "json")
    write_output(config, hierarchy_to_json(h).dump(2) + "\n");
  else if (config.format == "text")
    write_output(config, render_blocks_text(g, h));
  else
    throw graph_format_error("blocks supports formats: json, text");
  return 0;
}

int run_nested(const RunConfig& config, const Multigraph& g) {
  NestedBondSet set = build_nested_set(g, config.cap);
  if (config.k) {
    // restrict the report to orders below k
    NestedBondSet restricted;
    restricted.pairs = set.pairs;
    restricted.phase1_count = 0;
    restricted.stats = set.stats;
    for (const NestedBondMember& m : set.members) {
      if (m.separation.order() >= *config.k) continue;
      if (m.origin == MemberOrigin::kPhase1Core) ++restricted.phase1_count;
      restricted.members.push_back(m);
    }
    set = std::move(restricted);
  }
  if (config.format == "json")
    write_output(config, nested_set_to_json(set).dump(2) + "\n");
  else if (config.format == "text")
    write_output(config, render_nested_text(set));
  else
    throw graph_format_error("nested supports formats: json, text");
  return 0;
}

int run_treecut(const RunConfig& config, const Multigraph& g) {
  NestedBondSet set = build_nested_set(g, config.cap);
  long long k;
  if (config.k) {
    k = *config.k;
  } else {
    k = 1;
    for (const BlockPair& pair : set.pairs) k = std::max(k, pair.order + 1);
  }
  TreeCutDecomposition d = build_tree_cut(g, set.separations_below(k), config.root);
  if (config.format == "json")
    write_output(config, tree_cut_to_json(d).dump(2) + "\n");
  else if (config.format == "dot")
    write_output(config, tree_cut_to_dot(g, d));
  else if (config.format == "text")
    write_output(config, tree_cut_to_dot(g, d));
  else
    throw graph_format_error("treecut supports formats: json, dot, text");
  return 0;
}

int run_verify(const RunConfig& config, const Multigraph& g) {
  std::vector<CutSeparation> set;
  if (config.nested_input.empty()) {
    set = build_nested_set(g, config.cap).separations();
  } else {
    std::ifstream in(config.nested_input);
    if (!in) throw graph_format_error("cannot open nested set file: " + config.nested_input);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
      throw graph_format_error(std::string("nested set file is not valid JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("members")) doc = doc["members"];
    set = separations_from_json(g, doc);
  }

  EquivalenceReport report = check_generation_equivalence(g, set, config.k);
  nlohmann::json out = equivalence_report_to_json(report);
  bool pass = report.distinguishing.all_ok() && report.distinguishing_pass && report.generation_pass;
  out["pass"] = pass;
  if (config.format == "json") {
    write_output(config, out.dump(2) + "\n");
  } else if (config.format == "text") {
    std::ostringstream text;
    text << "(i) efficient distinguishing: " << (report.distinguishing_pass ? "pass" : "FAIL") << "\n"
         << "(ii) generation up to k_max=" << report.k_max << ": "
         << (report.generation_pass ? "pass" : "FAIL") << "\n"
         << "equivalence agrees: " << (report.equivalence_agrees ? "yes" : "NO") << "\n";
    write_output(config, text.str());
  } else {
    throw graph_format_error("verify supports formats: json, text");
  }
  return pass ? 0 : 1;
}

int run_oracle_check(const RunConfig& config, const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > kOracleGuard)
    throw precondition_error("oracle-check limited to " + std::to_string(kOracleGuard) +
                             " vertices");
  nlohmann::json out;
  bool pass = true;

  GomoryHuTree tree = gomory_hu(g);
  long long lambda_checked = 0, lambda_bad = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      ++lambda_checked;
      if (brute_lambda(g, u, v) != tree.lambda(u, v)) ++lambda_bad;
    }
  }
  out["lambda"] = {{"pairs", lambda_checked}, {"disagreements", lambda_bad}};
  pass = pass && lambda_bad == 0;

  EdgeBlockHierarchy h = block_hierarchy(g, tree);
  long long block_levels_bad = 0;
  for (long long k = 1; k <= h.max_level; ++k)
    if (h.k_blocks(k) != brute_blocks(g, k)) ++block_levels_bad;
  out["blocks"] = {{"levels", h.max_level}, {"disagreements", block_levels_bad}};
  pass = pass && block_levels_bad == 0;

  std::vector<BlockPair> pairs = block_pairs(h, g, tree);
  long long family_bad = 0;
  for (const BlockPair& pair : pairs) {
    std::vector<CutSeparation> fast = efficient_distinguishers(g, pair, config.cap);
    std::vector<CutSeparation> brute = brute_efficient_distinguishers(g, pair.beta1, pair.beta2);
    if (fast != brute) ++family_bad;
  }
  out["distinguishers"] = {{"pairs", pairs.size()}, {"disagreements", family_bad}};
  pass = pass && family_bad == 0;

  out["pass"] = pass;
  if (config.format == "json")
    write_output(config, out.dump(2) + "\n");
  else if (config.format == "text")
    write_output(config, std::string("oracle agreement: ") + (pass ? "pass" : "FAIL") + "\n");
  else
    throw graph_format_error("oracle-check supports formats: json, text");
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-edge-block decompositions, nested bond sets and tree-cut decompositions"};
  app.require_subcommand(1);

  RunConfig config;
  auto add_common = [&](CLI::App* cmd, bool with_k, bool with_root) {
    cmd->add_option("--input", config.input, "graph document (JSON)")->required();
    cmd->add_option("--output", config.output, "output path, - for stdout");
    cmd->add_option("--format", config.format, "json|text|dot");
    cmd->add_option("--cap", config.cap, "minimum-separation enumeration cap")
        ->check(CLI::PositiveNumber);
    if (with_k)
      cmd->add_option("--k", config.k, "level k (>= 1)")->check(CLI::PositiveNumber);
    if (with_root)
      cmd->add_option("--root", config.root, "root vertex for the decomposition tree");
  };

  CLI::App* blocks = app.add_subcommand("blocks", "k-edge-block hierarchy for all k");
  add_common(blocks, false, false);
  CLI::App* nested = app.add_subcommand("nested", "nested bond set distinguishing all edge-blocks");
  add_common(nested, true, false);
  CLI::App* treecut = app.add_subcommand("treecut", "tree-cut decomposition from the nested set");
  add_common(treecut, true, true);
  CLI::App* verify = app.add_subcommand("verify", "run the distinguishing/generation checkers");
  add_common(verify, true, false);
  verify->add_option("--nested-input", config.nested_input,
                     "verify this separation list instead of the built one");
  CLI::App* oracle = app.add_subcommand("oracle-check", "compare fast paths with brute force");
  add_common(oracle, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Multigraph g = load_graph_file(config.input);
    if (config.root < 0 || config.root >= g.vertex_count())
      throw precondition_error("root vertex out of range");
    if (blocks->parsed()) return run_blocks(config, g);
    if (nested->parsed()) return run_nested(config, g);
    if (treecut->parsed()) return run_treecut(config, g);
    if (verify->parsed()) return run_verify(config, g);
    if (oracle->parsed()) return run_oracle_check(config, g);
    return 2;
  } catch (const internal_invariant_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const graph_format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const enumeration_cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
