#include "edgeblocks/distinguishers.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "edgeblocks/errors.hpp"

namespace edgeblocks {

std::span<const CutSeparation> DistinguisherFamily::level_slice(long long k) const {
  auto first = std::partition_point(pool.begin(), pool.end(),
                                    [k](const CutSeparation& s) { return s.order() < k; });
  auto last = std::partition_point(first, pool.end(),
                                   [k](const CutSeparation& s) { return s.order() <= k; });
  return std::span<const CutSeparation>(pool.data() + (first - pool.begin()), last - first);
}

std::vector<long long> DistinguisherFamily::levels() const {
  std::vector<long long> out;
  for (const BlockPair& p : pairs)
    if (out.empty() || out.back() != p.order) out.push_back(p.order);
  return out;
}

std::vector<CutSeparation> efficient_distinguishers(const Multigraph& g, const BlockPair& pair,
                                                    long long cap) {
  std::vector<CutSeparation> out = enumerate_min_separations(g, pair.beta1, pair.beta2, cap);
  if (out.empty())
    throw internal_invariant_error("empty distinguisher family for " + pair.to_string());
  for (const CutSeparation& s : out)
    if (s.order() != pair.order)
      throw internal_invariant_error("distinguisher order " + std::to_string(s.order()) +
                                     " does not match pair order for " + pair.to_string());
  return out;
}

DistinguisherFamily build_distinguisher_family(const Multigraph& g, const EdgeBlockHierarchy& h,
                                               const GomoryHuTree& tree, long long cap) {
  DistinguisherFamily family;
  family.pairs = block_pairs(h, g, tree);
  family.per_pair.reserve(family.pairs.size());
  for (const BlockPair& pair : family.pairs) {
    family.per_pair.push_back(efficient_distinguishers(g, pair, cap));
    for (const CutSeparation& s : family.per_pair.back()) family.pool.push_back(s);
  }
  std::sort(family.pool.begin(), family.pool.end(), [](const CutSeparation& a,
                                                       const CutSeparation& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a < b;
  });
  family.pool.erase(std::unique(family.pool.begin(), family.pool.end()), family.pool.end());
  return family;
}

namespace {

// Which of the four set-algebra corners `built_side` is, relative to the
// reference orientations of the parents.
CornerRole role_of(const CutSeparation& p1, const CutSeparation& p2,
                   const VertexSet& built_side) {
  if (built_side == p1.ref_side().set_intersection(p2.ref_side())) return CornerRole::AC;
  if (built_side == p1.ref_side().set_intersection(p2.other_side())) return CornerRole::AD;
  if (built_side == p1.other_side().set_intersection(p2.ref_side())) return CornerRole::BC;
  if (built_side == p1.other_side().set_intersection(p2.other_side())) return CornerRole::BD;
  throw internal_invariant_error("corner side does not match any parent intersection");
}

const VertexSet& side_holding(const CutSeparation& s, const VertexSet& block,
                              const char* what) {
  const VertexSet& side = s.side_containing(block.members().front());
  if (!block.is_subset_of(side))
    throw internal_invariant_error(std::string("separation splits an edge-block (") + what +
                                   "): " + s.to_string() + " vs " + block.to_string());
  return side;
}

}  // namespace

UncrossCrossLevelResult uncross_cross_level(const Multigraph& g, const CutSeparation& a_low,
                                            const CutSeparation& a_high,
                                            const BlockPair& pair_high) {
  if (nested(a_low, a_high))
    throw precondition_error("uncross_cross_level called on nested separations");
  if (a_low.order() >= pair_high.order)
    throw precondition_error("uncross_cross_level needs a strictly lower-order first input");
  if (!a_high.separates(pair_high.beta1, pair_high.beta2))
    throw precondition_error("second input does not distinguish its block pair");

  const VertexSet& beta = pair_high.beta1;
  const VertexSet& beta_prime = pair_high.beta2;

  // a_low is too small to split or distinguish the pair, so both blocks sit
  // on one of its sides.
  const VertexSet& a = side_holding(a_low, beta, "low");
  if (!beta_prime.is_subset_of(a))
    throw internal_invariant_error("low-order separation distinguishes a higher pair: " +
                                   a_low.to_string() + " vs " + pair_high.to_string());
  const VertexSet& c = side_holding(a_high, beta, "high");
  const VertexSet& d = side_holding(a_high, beta_prime, "high");

  struct Candidate {
    CutSeparation sep;
    CornerRole role;
  };
  std::vector<Candidate> qualifying;
  for (const VertexSet* cross_side : {&c, &d}) {
    VertexSet built = a.set_intersection(*cross_side);
    CutSeparation cand(g, built);
    if (cand.order() > pair_high.order) continue;
    if (cand.order() < pair_high.order)
      throw internal_invariant_error("corner separates an order-" +
                                     std::to_string(pair_high.order) + " pair with order " +
                                     std::to_string(cand.order()));
    if (!cand.separates(beta, beta_prime))
      throw internal_invariant_error("corner lost the block pair it was built for");
    if (!cand.is_bond(g))
      throw internal_invariant_error("efficient corner is not a bond: " + cand.to_string());
    if (!nested(cand, a_low))
      throw internal_invariant_error("corner is not nested with the low-order input");
    qualifying.push_back({std::move(cand), role_of(a_low, a_high, built)});
  }
  if (qualifying.empty())
    throw internal_invariant_error("no qualifying cross-level corner for " + a_low.to_string() +
                                   " x " + a_high.to_string() + " over " + pair_high.to_string());
  const Candidate* best = &qualifying.front();
  for (const Candidate& cand : qualifying)
    if (cand.sep < best->sep) best = &cand;
  return {best->sep, best->role};
}

UncrossSameLevelResult uncross_same_level(const Multigraph& g, const CutSeparation& a_i,
                                          const BlockPair& pair_i, const CutSeparation& a_j,
                                          const BlockPair& pair_j,
                                          std::span<const CutSeparation> level_pool) {
  if (nested(a_i, a_j))
    throw precondition_error("uncross_same_level called on nested separations");
  const long long k = pair_i.order;
  if (pair_j.order != k || a_i.order() != k || a_j.order() != k)
    throw precondition_error("uncross_same_level needs two distinguishers of one order");
  if (!a_i.separates(pair_i.beta1, pair_i.beta2) || !a_j.separates(pair_j.beta1, pair_j.beta2))
    throw precondition_error("input does not distinguish its block pair");

  long long cn_i = k_crossing_number(a_i, level_pool, k);
  long long cn_j = k_crossing_number(a_j, level_pool, k);

  // Proof ordering: the input with the smaller crossing number plays {A,B}.
  const bool swapped = cn_i > cn_j;
  const CutSeparation& f = swapped ? a_j : a_i;
  const CutSeparation& s = swapped ? a_i : a_j;
  const BlockPair& pair_f = swapped ? pair_j : pair_i;
  const BlockPair& pair_s = swapped ? pair_i : pair_j;
  const long long cn_f = swapped ? cn_j : cn_i;
  const long long cn_s = swapped ? cn_i : cn_j;

  const VertexSet& beta = pair_s.beta1;
  const VertexSet& beta_prime = pair_s.beta2;

  struct Candidate {
    VertexSet built;
    bool targets_second;  // replaces s rather than f
  };
  std::vector<Candidate> candidates;

  if (f.separates(beta, beta_prime)) {
    // f also distinguishes s's pair: both corners land in 𝒜 of that pair.
    const VertexSet& a = side_holding(f, beta, "first");
    const VertexSet& b = side_holding(f, beta_prime, "first");
    const VertexSet& c = side_holding(s, beta, "second");
    const VertexSet& d = side_holding(s, beta_prime, "second");
    candidates.push_back({a.set_intersection(c), true});
    candidates.push_back({b.set_intersection(d), true});
  } else {
    const VertexSet& a = side_holding(f, beta, "first");
    if (!beta_prime.is_subset_of(a))
      throw internal_invariant_error("undistinguished pair is split across a separation");
    const VertexSet& b = f.side_not_containing(beta.members().front());
    // f's own pair has one block on each of f's sides; gamma is the one in b.
    const VertexSet& gamma = pair_f.beta1.is_subset_of(b) ? pair_f.beta1 : pair_f.beta2;
    if (!gamma.is_subset_of(b))
      throw internal_invariant_error("first input does not distinguish its own pair");
    const VertexSet& d = side_holding(s, gamma, "second");
    const VertexSet& c = s.side_not_containing(gamma.members().front());
    // name s's blocks so the one in c is "beta_c"
    const VertexSet& beta_c = beta.is_subset_of(c) ? beta : beta_prime;
    const VertexSet& beta_d = (&beta_c == &beta) ? beta_prime : beta;
    if (!beta_c.is_subset_of(c) || !beta_d.is_subset_of(d))
      throw internal_invariant_error("second input does not split its pair across c/d");
    candidates.push_back({a.set_intersection(c), true});   // distinguishes s's pair
    candidates.push_back({b.set_intersection(d), false});  // distinguishes f's pair
  }

  struct Qualified {
    CutSeparation sep;
    bool targets_second;
    long long cn;
    CornerRole role;
  };
  std::vector<Qualified> qualifying;
  for (const Candidate& cand : candidates) {
    CutSeparation corner(g, cand.built);
    const BlockPair& target_pair = cand.targets_second ? pair_s : pair_f;
    // display (1): the two corner orders sum to at most 2k while each is at
    // least k, so exact order k is forced
    if (corner.order() != k)
      throw internal_invariant_error("same-level corner has order " +
                                     std::to_string(corner.order()) + ", expected " +
                                     std::to_string(k));
    if (!corner.separates(target_pair.beta1, target_pair.beta2))
      throw internal_invariant_error("same-level corner misses its target pair");
    if (!corner.is_bond(g))
      throw internal_invariant_error("same-level corner is not a bond: " + corner.to_string());
    long long corner_cn = k_crossing_number(corner, level_pool, k);
    long long target_cn = cand.targets_second ? cn_s : cn_f;
    if (corner_cn < target_cn)
      qualifying.push_back({std::move(corner), cand.targets_second, corner_cn,
                            role_of(a_i, a_j, cand.built)});
  }
  if (qualifying.empty())
    throw internal_invariant_error(
        "no qualifying same-level corner for " + a_i.to_string() + " x " + a_j.to_string() +
        " (crossing numbers " + std::to_string(cn_i) + ", " + std::to_string(cn_j) + ")");

  const Qualified* best = &qualifying.front();
  for (const Qualified& q : qualifying) {
    if (std::make_tuple(q.cn, std::cref(q.sep)) <
        std::make_tuple(best->cn, std::cref(best->sep)))
      best = &q;
  }
  UncrossSameLevelResult out;
  out.replacement = best->sep;
  out.replaces_first = best->targets_second ? swapped : !swapped;
  out.cn_replaced = best->targets_second ? cn_s : cn_f;
  out.cn_new = best->cn;
  out.role = best->role;
  return out;
}

std::string member_origin_name(MemberOrigin origin) {
  switch (origin) {
    case MemberOrigin::kPhase1Core: return "core";
    case MemberOrigin::kSelected: return "selected";
    case MemberOrigin::kRepaired: return "repaired";
  }
  return "?";
}

std::vector<CutSeparation> NestedBondSet::separations() const {
  std::vector<CutSeparation> out;
  out.reserve(members.size());
  for (const NestedBondMember& m : members) out.push_back(m.separation);
  return out;
}

std::vector<CutSeparation> NestedBondSet::separations_below(long long k) const {
  std::vector<CutSeparation> out;
  for (const NestedBondMember& m : members)
    if (m.separation.order() < k) out.push_back(m.separation);
  return out;
}

std::vector<CutSeparation> NestedBondSet::phase1_core() const {
  std::vector<CutSeparation> out;
  for (const NestedBondMember& m : members)
    if (m.origin == MemberOrigin::kPhase1Core) out.push_back(m.separation);
  return out;
}

namespace {

struct Working {
  CutSeparation sep;
  MemberOrigin origin;
  std::vector<std::string> lineage;
  int committed_for;  // pair index, -1 for the phase-1 core
};

}  // namespace

NestedBondSet build_nested_set(const Multigraph& g, long long cap) {
  if (!is_connected(g)) throw precondition_error("build_nested_set needs a connected graph");
  GomoryHuTree tree = gomory_hu(g);
  EdgeBlockHierarchy h = block_hierarchy(g, tree);
  DistinguisherFamily family = build_distinguisher_family(g, h, tree, cap);

  NestedBondSet out;
  out.pairs = family.pairs;
  EngineStats& stats = out.stats;

  std::vector<Working> working;

  // Phase 1: every pool member nested with the whole pool. This fragment is
  // isomorphism-invariant because the pool is.
  for (const CutSeparation& cand : family.pool) {
    bool with_all = true;
    for (const CutSeparation& other : family.pool) {
      if (!nested(cand, other)) {
        with_all = false;
        break;
      }
    }
    if (with_all) working.push_back({cand, MemberOrigin::kPhase1Core, {}, -1});
  }
  out.phase1_count = static_cast<int>(working.size());

  auto distinguished = [&](const BlockPair& pair) {
    for (const Working& w : working)
      if (w.sep.order() == pair.order && w.sep.separates(pair.beta1, pair.beta2)) return true;
    return false;
  };
  auto nested_with_all = [&](const CutSeparation& cand) {
    for (const Working& w : working)
      if (!nested(cand, w.sep)) return false;
    return true;
  };

  long long budget = 10000 + 100LL * static_cast<long long>(family.pool.size() + 1) *
                                 static_cast<long long>(family.pairs.size() + 1);
  auto spend = [&](const char* where) {
    if (--budget < 0)
      throw internal_invariant_error(std::string("uncrossing engine exceeded its budget at ") +
                                     where);
  };

  // Phase 2: pairs in ascending order; level by level.
  for (long long level : family.levels()) {
    auto slice = family.level_slice(level);
    auto cn = [&](const CutSeparation& sep) {
      return static_cast<long long>(k_crossing_number(sep, slice, level));
    };
    auto level_potential = [&]() {
      long long phi = 0;
      for (const Working& w : working)
        if (w.sep.order() == level) phi += cn(w.sep);
      return phi;
    };

    std::deque<int> queue;
    for (size_t i = 0; i < family.pairs.size(); ++i)
      if (family.pairs[i].order == level) queue.push_back(static_cast<int>(i));

    for (;;) {
      while (!queue.empty()) {
        int pi = queue.front();
        queue.pop_front();
        const BlockPair& pair = family.pairs[pi];
        spend("pair scan");
        if (distinguished(pair)) continue;
        const std::vector<CutSeparation>& a_i = family.per_pair[pi];

        // members already nested with everything chosen
        const CutSeparation* best = nullptr;
        long long best_cn = 0;
        for (const CutSeparation& a : a_i) {
          if (!nested_with_all(a)) continue;
          long long c = cn(a);
          if (!best || c < best_cn || (c == best_cn && a < *best)) {
            best = &a;
            best_cn = c;
          }
        }
        if (best) {
          working.push_back({*best, MemberOrigin::kSelected, {}, pi});
          ++stats.selections;
          continue;
        }

        // repair loop, starting from the member with minimal crossing number
        const CutSeparation* seed = nullptr;
        long long seed_cn = 0;
        for (const CutSeparation& a : a_i) {
          long long c = cn(a);
          if (!seed || c < seed_cn || (c == seed_cn && a < *seed)) {
            seed = &a;
            seed_cn = c;
          }
        }
        CutSeparation candidate = *seed;
        std::vector<std::string> lineage;
        for (;;) {
          spend("repair step");
          std::vector<size_t> crossers;
          for (size_t w = 0; w < working.size(); ++w)
            if (crosses(candidate, working[w].sep)) crossers.push_back(w);
          if (crossers.empty()) {
            working.push_back({candidate, MemberOrigin::kRepaired, lineage, pi});
            break;
          }
          // same-level witnesses first, then smallest canonical
          size_t pick = crossers.front();
          for (size_t w : crossers) {
            bool w_same = working[w].sep.order() == level;
            bool p_same = working[pick].sep.order() == level;
            if (w_same != p_same) {
              if (w_same) pick = w;
            } else if (working[w].sep < working[pick].sep) {
              pick = w;
            }
          }
          const Working& witness = working[pick];

          if (witness.sep.order() == level) {
            if (witness.committed_for < 0)
              throw internal_invariant_error("phase-1 member crossed by a pool member");
            const BlockPair& wpair = family.pairs[witness.committed_for];
            long long phi_before = level_potential() + cn(candidate);
            UncrossSameLevelResult res =
                uncross_same_level(g, candidate, pair, witness.sep, wpair, slice);
            ++stats.same_level_repairs;
            if (res.replaces_first) {
              lineage.push_back("same-level corner " + corner_role_name(res.role) + " vs " +
                                witness.sep.to_string() + ": crossing number " +
                                std::to_string(res.cn_replaced) + " -> " +
                                std::to_string(res.cn_new));
              candidate = res.replacement;
            } else {
              // the witness itself is the improvable one: evict it and let
              // the level rescan re-satisfy whatever it was serving
              working.erase(working.begin() + pick);
              ++stats.member_evictions;
            }
            long long phi_after = level_potential() + cn(candidate);
            if (phi_after >= phi_before) stats.same_level_potential_strict = false;
          } else {
            long long crossers_before = static_cast<long long>(crossers.size());
            UncrossCrossLevelResult res = uncross_cross_level(g, witness.sep, candidate, pair);
            ++stats.cross_level_repairs;
            lineage.push_back("cross-level corner " + corner_role_name(res.role) +
                              " nested with " + witness.sep.to_string());
            candidate = res.replacement;
            long long crossers_after = 0;
            for (const Working& w : working)
              if (crosses(candidate, w.sep)) ++crossers_after;
            if (crossers_after >= crossers_before) stats.cross_level_crossers_strict = false;
          }
        }
      }
      // evictions may have left earlier pairs of this level unserved
      std::deque<int> requeue;
      for (size_t i = 0; i < family.pairs.size(); ++i)
        if (family.pairs[i].order == level && !distinguished(family.pairs[i]))
          requeue.push_back(static_cast<int>(i));
      if (requeue.empty()) break;
      queue = std::move(requeue);
    }
  }

  // postconditions
  for (size_t a = 0; a < working.size(); ++a) {
    for (size_t b = a + 1; b < working.size(); ++b) {
      if (working[a].sep == working[b].sep)
        throw internal_invariant_error("duplicate member in the built set");
      if (!nested(working[a].sep, working[b].sep))
        throw internal_invariant_error("built set is not nested: " + working[a].sep.to_string() +
                                       " x " + working[b].sep.to_string());
    }
  }
  for (const Working& w : working)
    if (!w.sep.is_bond(g))
      throw internal_invariant_error("built member is not a bond: " + w.sep.to_string());
  for (const BlockPair& pair : family.pairs)
    if (!distinguished(pair))
      throw internal_invariant_error("pair left undistinguished: " + pair.to_string());

  std::sort(working.begin(), working.end(),
            [](const Working& x, const Working& y) { return x.sep < y.sep; });
  for (Working& w : working) {
    NestedBondMember member{std::move(w.sep), w.origin, std::move(w.lineage), {}};
    for (size_t i = 0; i < family.pairs.size(); ++i) {
      const BlockPair& pair = family.pairs[i];
      if (member.separation.order() == pair.order &&
          member.separation.separates(pair.beta1, pair.beta2))
        member.distinguishes.push_back(static_cast<int>(i));
    }
    out.members.push_back(std::move(member));
  }
  return out;
}

bool cut_distinguishes(const Multigraph& g, const CutSeparation& sep, const VertexSet& x,
                       const VertexSet& y) {
  std::vector<VertexSet> comps = components_within(g, sep.ref_side());
  std::vector<VertexSet> other = components_within(g, sep.other_side());
  comps.insert(comps.end(), other.begin(), other.end());
  int cx = -1, cy = -1;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (x.is_subset_of(comps[i])) cx = static_cast<int>(i);
    if (y.is_subset_of(comps[i])) cy = static_cast<int>(i);
  }
  return cx != -1 && cy != -1 && cx != cy;
}

VerifyReport verify_nested_set(const Multigraph& g, const std::vector<CutSeparation>& N) {
  if (!is_connected(g)) throw precondition_error("verify_nested_set needs a connected graph");
  for (const CutSeparation& sep : N)
    if (sep.universe() != g.vertex_count())
      throw precondition_error("separation built for a different graph");

  VerifyReport report;
  GomoryHuTree tree = gomory_hu(g);
  EdgeBlockHierarchy h = block_hierarchy(g, tree);
  report.pairs = block_pairs(h, g, tree);

  for (size_t a = 0; a < N.size() && report.nested_ok; ++a) {
    for (size_t b = a + 1; b < N.size(); ++b) {
      if (!nested(N[a], N[b])) {
        report.nested_ok = false;
        report.nested_witness = {static_cast<int>(a), static_cast<int>(b)};
        break;
      }
    }
  }

  for (size_t i = 0; i < N.size(); ++i)
    if (!N[i].is_bond(g)) report.non_bond_members.push_back(static_cast<int>(i));
  report.bonds_ok = report.non_bond_members.empty();

  for (size_t pi = 0; pi < report.pairs.size(); ++pi) {
    const BlockPair& pair = report.pairs[pi];
    int best = -1;
    for (size_t mi = 0; mi < N.size(); ++mi) {
      if (!cut_distinguishes(g, N[mi], pair.beta1, pair.beta2)) continue;
      if (best == -1 || N[mi].order() < N[best].order() ||
          (N[mi].order() == N[best].order() && N[mi] < N[best]))
        best = static_cast<int>(mi);
    }
    VerifyReport::Citation citation{static_cast<int>(pi), best,
                                    best == -1 ? -1 : N[best].order()};
    report.citations.push_back(citation);
    if (best == -1) {
      report.distinguish_ok = false;
      report.undistinguished_pairs.push_back(static_cast<int>(pi));
    } else if (N[best].order() != pair.order) {
      report.efficiency_ok = false;
      report.inefficient_pairs.push_back(static_cast<int>(pi));
    }
  }
  return report;
}

}  // namespace edgeblocks
