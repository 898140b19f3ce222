#include "edgeblocks/reports.hpp"

#include "edgeblocks/errors.hpp"

namespace edgeblocks {

nlohmann::json to_json(const VertexSet& set) { return set.members(); }

nlohmann::json separation_to_json(const CutSeparation& sep) {
  return {{"side", sep.ref_side().members()}, {"order", sep.order()}};
}

namespace {

nlohmann::json hierarchy_node_to_json(const EdgeBlockHierarchy& h, int index) {
  const EdgeBlockNode& node = h.nodes[index];
  nlohmann::json out;
  out["set"] = to_json(node.set);
  out["k_lo"] = node.k_lo;
  if (node.k_hi.has_value())
    out["k_hi"] = *node.k_hi;
  else
    out["k_hi"] = "inf";
  auto children = nlohmann::json::array();
  for (int child : node.children) children.push_back(hierarchy_node_to_json(h, child));
  out["children"] = std::move(children);
  return out;
}

}  // namespace

nlohmann::json hierarchy_to_json(const EdgeBlockHierarchy& h) {
  nlohmann::json out;
  out["max_level"] = h.max_level;
  out["root"] = hierarchy_node_to_json(h, 0);
  return out;
}

nlohmann::json pair_to_json(const BlockPair& pair) {
  return {{"blocks", {to_json(pair.beta1), to_json(pair.beta2)}}, {"order", pair.order}};
}

nlohmann::json nested_set_to_json(const NestedBondSet& set) {
  nlohmann::json out;
  auto members = nlohmann::json::array();
  for (const NestedBondMember& m : set.members) {
    nlohmann::json member = separation_to_json(m.separation);
    member["provenance"] = member_origin_name(m.origin);
    member["lineage"] = m.lineage;
    auto distinguishes = nlohmann::json::array();
    for (int pi : m.distinguishes) distinguishes.push_back(pair_to_json(set.pairs[pi]));
    member["distinguishes"] = std::move(distinguishes);
    members.push_back(std::move(member));
  }
  out["members"] = std::move(members);
  out["phase1_count"] = set.phase1_count;
  out["pair_count"] = set.pairs.size();
  return out;
}

nlohmann::json verify_report_to_json(const VerifyReport& report) {
  nlohmann::json out;
  out["nested"]["pass"] = report.nested_ok;
  if (report.nested_witness)
    out["nested"]["witness"] = {report.nested_witness->first, report.nested_witness->second};
  out["bonds"]["pass"] = report.bonds_ok;
  out["bonds"]["failures"] = report.non_bond_members;
  out["distinguishes"]["pass"] = report.distinguish_ok;
  {
    auto failures = nlohmann::json::array();
    for (int pi : report.undistinguished_pairs) failures.push_back(pair_to_json(report.pairs[pi]));
    out["distinguishes"]["failures"] = std::move(failures);
  }
  out["efficiency"]["pass"] = report.efficiency_ok;
  {
    auto failures = nlohmann::json::array();
    for (int pi : report.inefficient_pairs) {
      nlohmann::json f = pair_to_json(report.pairs[pi]);
      f["cited_order"] = report.citations[pi].member_order;
      failures.push_back(std::move(f));
    }
    out["efficiency"]["failures"] = std::move(failures);
  }
  out["pass"] = report.all_ok();
  return out;
}

nlohmann::json equivalence_report_to_json(const EquivalenceReport& report) {
  nlohmann::json out;
  out["distinguishing_pass"] = report.distinguishing_pass;
  out["generation_pass"] = report.generation_pass;
  out["equivalence_agrees"] = report.equivalence_agrees;
  out["k_max"] = report.k_max;
  auto per_k = nlohmann::json::array();
  for (const auto& bucket : report.per_k)
    per_k.push_back({{"k", bucket.k}, {"cuts", bucket.cut_count}, {"generated", bucket.generated}});
  out["per_k"] = std::move(per_k);
  auto failures = nlohmann::json::array();
  for (const auto& failure : report.failures) {
    failures.push_back({{"target", separation_to_json(failure.target)},
                        {"uncovered", to_json(failure.uncovered)}});
  }
  out["failures"] = std::move(failures);
  out["distinguishing"] = verify_report_to_json(report.distinguishing);
  return out;
}

nlohmann::json tree_cut_to_json(const TreeCutDecomposition& d) {
  nlohmann::json out;
  auto nodes = nlohmann::json::array();
  for (size_t t = 0; t < d.parts.size(); ++t)
    nodes.push_back({{"id", t}, {"part", to_json(d.parts[t])}});
  out["nodes"] = std::move(nodes);
  auto edges = nlohmann::json::array();
  for (const auto& e : d.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"separation", separation_to_json(e.separation)}});
  out["edges"] = std::move(edges);
  out["root_node"] = d.root_node;
  return out;
}

std::vector<CutSeparation> separations_from_json(const Multigraph& g,
                                                 const nlohmann::json& doc) {
  if (!doc.is_array()) throw graph_format_error("separation list must be a JSON array");
  std::vector<CutSeparation> out;
  for (const auto& item : doc) {
    const nlohmann::json* side = nullptr;
    if (item.is_array()) {
      side = &item;
    } else if (item.is_object() && item.contains("side")) {
      side = &item["side"];
    } else {
      throw graph_format_error("separation must be a vertex array or an object with \"side\"");
    }
    if (!side->is_array()) throw graph_format_error("separation side must be an array");
    std::vector<int> members;
    for (const auto& v : *side) {
      if (!v.is_number_integer()) throw graph_format_error("separation side entries must be integers");
      members.push_back(v.get<int>());
    }
    out.emplace_back(g, VertexSet(g.vertex_count(), std::move(members)));
  }
  return out;
}

}  // namespace edgeblocks
