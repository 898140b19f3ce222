#pragma once

#include <optional>
#include <vector>

#include "edgeblocks/distinguishers.hpp"
#include "edgeblocks/multigraph.hpp"
#include "edgeblocks/separation.hpp"

namespace edgeblocks {

inline constexpr int kEnumerationGuard = 16;

// Evidence that a target cut is generated: oriented members combined by one
// infimum per group and a supremum across groups. Each group's first sides
// intersect to a subset of the target side containing the group's anchor
// vertex; the union over groups is that side exactly. A flat union witness
// is the special case of singleton groups. On failure, `uncovered` holds
// the target-side vertices whose every enclosing member side leaks out.
struct GenerationWitness {
  struct Group {
    int anchor = -1;
    std::vector<OrientedSeparation> members;
  };

  bool success = false;
  CutSeparation target;
  std::vector<Group> groups;
  VertexSet uncovered;
};

// Generation test over the members of order <= max_order. A cut {X,Y} is
// generated when the target orientation is reachable from oriented members
// by suprema and infima; for bipartitions that holds exactly when, for every
// v in X, the intersection I(v) of all member sides containing v stays
// inside X (then X = union of the I(v), an infimum per vertex and one
// supremum). Checking one orientation suffices: the inverse expression is
// the involution image.
GenerationWitness is_generated(const CutSeparation& target,
                               const std::vector<CutSeparation>& M, long long max_order);

// Every cut-separation of order <= max_size (sides need not be connected).
// Guarded to 16 vertices.
std::vector<CutSeparation> enumerate_cuts(const Multigraph& g, long long max_size);

struct EquivalenceReport {
  struct PerK {
    long long k = 0;
    long long cut_count = 0;
    long long generated = 0;
  };
  struct Failure {
    CutSeparation target;
    VertexSet uncovered;
  };

  VerifyReport distinguishing;  // direction (i)
  bool distinguishing_pass = false;          // distinguishing + efficiency
  bool generation_pass = false;         // every cut of order k generated by the <=k members
  bool equivalence_agrees = false;
  long long k_max = 0;
  std::vector<PerK> per_k;
  std::vector<Failure> failures;
  std::vector<GenerationWitness> witnesses;  // one per generated cut
};

// Runs both directions of the equivalence: (i) does M efficiently
// distinguish all edge-blocks, (ii) do the <=k-sized members generate every
// k-sized cut for k <= k_max. k_max defaults to the maximum pair order + 1.
EquivalenceReport check_generation_equivalence(const Multigraph& g, const std::vector<CutSeparation>& M,
                              std::optional<long long> k_max = std::nullopt);

// Folds each group through infima and the groups through suprema; true when
// the result reproduces the target exactly.
bool replay_witness(const GenerationWitness& witness);

}  // namespace edgeblocks
