#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "edgeblocks/distinguishers.hpp"
#include "edgeblocks/edge_blocks.hpp"
#include "edgeblocks/generation.hpp"
#include "edgeblocks/treecut.hpp"

namespace edgeblocks {

// All report emitters produce deterministic JSON: object keys are sorted by
// nlohmann::json and every list is in canonical order.

nlohmann::json to_json(const VertexSet& set);
nlohmann::json separation_to_json(const CutSeparation& sep);
nlohmann::json hierarchy_to_json(const EdgeBlockHierarchy& h);
nlohmann::json pair_to_json(const BlockPair& pair);
nlohmann::json nested_set_to_json(const NestedBondSet& set);
nlohmann::json verify_report_to_json(const VerifyReport& report);
nlohmann::json equivalence_report_to_json(const EquivalenceReport& report);
nlohmann::json tree_cut_to_json(const TreeCutDecomposition& d);

// Accepts [{"side": [...]}, ...] or plain [[...], ...].
std::vector<CutSeparation> separations_from_json(const Multigraph& g,
                                                 const nlohmann::json& doc);

}  // namespace edgeblocks
