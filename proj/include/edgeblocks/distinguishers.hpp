#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgeblocks/edge_blocks.hpp"
#include "edgeblocks/mincut.hpp"
#include "edgeblocks/multigraph.hpp"
#include "edgeblocks/separation.hpp"

namespace edgeblocks {

// 𝒜_i for every disjoint block pair i, plus the pooled ground set 𝒜.
// Every member of a pair's family is a bond-separation of order exactly
// |i| with the two blocks on opposite sides; a separation of order k can
// only distinguish pairs of order k, so its order doubles as its tag.
struct DistinguisherFamily {
  std::vector<BlockPair> pairs;                      // ascending (order, beta1, beta2)
  std::vector<std::vector<CutSeparation>> per_pair;  // aligned with pairs, canonical order
  std::vector<CutSeparation> pool;                   // deduped union, ascending (order, canonical)

  // Contiguous view of all pool members of the given order.
  std::span<const CutSeparation> level_slice(long long k) const;
  std::vector<long long> levels() const;  // distinct pair orders, ascending
};

// 𝒜_i for one pair: the complete set of minimum separations between the two
// blocks, filtered to connected sides. Throws enumeration_cap_error past cap.
std::vector<CutSeparation> efficient_distinguishers(const Multigraph& g, const BlockPair& pair,
                                                    long long cap = kDefaultEnumerationCap);

DistinguisherFamily build_distinguisher_family(const Multigraph& g, const EdgeBlockHierarchy& h,
                                               const GomoryHuTree& tree,
                                               long long cap = kDefaultEnumerationCap);

struct UncrossCrossLevelResult {
  CutSeparation replacement;  // in 𝒜_j, nested with the low-order input
  CornerRole role;            // which corner, relative to (a_low, a_high) reference sides
};

// Cross-level corner step: a_low crosses a_high, order(a_low) < |j| where
// a_high distinguishes pair_high (= j). Returns a corner of the two that
// lies in 𝒜_j and is nested with a_low; ties go to the canonically smaller
// candidate. Raises internal_invariant_error if no candidate qualifies.
UncrossCrossLevelResult uncross_cross_level(const Multigraph& g, const CutSeparation& a_low,
                                            const CutSeparation& a_high,
                                            const BlockPair& pair_high);

struct UncrossSameLevelResult {
  CutSeparation replacement;
  bool replaces_first;    // replacement stands in for the first argument
  long long cn_replaced;  // k-crossing number of the replaced input
  long long cn_new;       // k-crossing number of the replacement (strictly smaller)
  CornerRole role;
};

// Same-level corner step: two crossing distinguishers of the same order k.
// Evaluates the two proof-ordered corner candidates, checks order exactly k,
// bond, family membership and a strictly smaller k-crossing number against
// the pool, and returns the best qualifying one (smaller crossing number,
// ties by canonical order).
UncrossSameLevelResult uncross_same_level(const Multigraph& g, const CutSeparation& a_i,
                                          const BlockPair& pair_i, const CutSeparation& a_j,
                                          const BlockPair& pair_j,
                                          std::span<const CutSeparation> level_pool);

enum class MemberOrigin { kPhase1Core, kSelected, kRepaired };

std::string member_origin_name(MemberOrigin origin);

struct NestedBondMember {
  CutSeparation separation;
  MemberOrigin origin = MemberOrigin::kPhase1Core;
  std::vector<std::string> lineage;  // corner steps taken to reach this member
  std::vector<int> distinguishes;    // indices into NestedBondSet::pairs
};

struct EngineStats {
  long long selections = 0;
  long long same_level_repairs = 0;
  long long cross_level_repairs = 0;
  long long member_evictions = 0;
  // per-step monotones, asserted during the run and reported here
  bool same_level_potential_strict = true;
  bool cross_level_crossers_strict = true;
};

struct NestedBondSet {
  std::vector<NestedBondMember> members;  // canonical order
  std::vector<BlockPair> pairs;
  int phase1_count = 0;
  EngineStats stats;

  std::vector<CutSeparation> separations() const;
  // Members of order < k (the set the tree-cut decomposition for level k uses).
  std::vector<CutSeparation> separations_below(long long k) const;
  std::vector<CutSeparation> phase1_core() const;
};

// Builds a nested bond set meeting every family. Phase 1 keeps every pool
// member nested with the
// whole pool (isomorphism-invariant by construction); phase 2 completes the
// set pair by pair in ascending order, repairing crossings with the two
// corner steps. All postconditions are asserted before returning.
NestedBondSet build_nested_set(const Multigraph& g, long long cap = kDefaultEnumerationCap);

// True when removing the separation's cut edges leaves X and Y in different
// components (works for non-bond separations too).
bool cut_distinguishes(const Multigraph& g, const CutSeparation& sep, const VertexSet& x,
                       const VertexSet& y);

struct VerifyReport {
  struct Citation {
    int pair_index = -1;
    int member_index = -1;  // -1: no distinguishing member
    long long member_order = -1;
  };

  std::vector<BlockPair> pairs;

  bool nested_ok = true;
  std::optional<std::pair<int, int>> nested_witness;  // member indices
  bool bonds_ok = true;
  std::vector<int> non_bond_members;
  bool distinguish_ok = true;
  std::vector<int> undistinguished_pairs;
  bool efficiency_ok = true;
  std::vector<int> inefficient_pairs;
  std::vector<Citation> citations;  // one per pair, best distinguisher

  bool all_ok() const { return nested_ok && bonds_ok && distinguish_ok && efficiency_ok; }
};

// Checks an arbitrary separation set against the nested-distinguisher
// requirements:
// (a) pairwise nested, (b) all bonds, (c) every disjoint block pair
// distinguished, (d) the best distinguisher per pair has order |i|.
VerifyReport verify_nested_set(const Multigraph& g, const std::vector<CutSeparation>& N);

}  // namespace edgeblocks
