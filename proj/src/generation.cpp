#include "edgeblocks/generation.hpp"

#include <algorithm>

#include "edgeblocks/errors.hpp"

namespace edgeblocks {

GenerationWitness is_generated(const CutSeparation& target, const std::vector<CutSeparation>& M,
                               long long max_order) {
  GenerationWitness witness;
  witness.target = target;
  witness.uncovered = VertexSet(target.universe());

  std::vector<const CutSeparation*> usable;
  for (const CutSeparation& m : M)
    if (m.order() <= max_order) usable.push_back(&m);

  const VertexSet& x = target.ref_side();
  if (usable.empty()) {
    witness.uncovered = x;
    return witness;
  }

  std::vector<VertexSet> seen_infima;
  for (int v : x.members()) {
    VertexSet inf = usable.front()->side_containing(v);
    std::vector<OrientedSeparation> group;
    for (const CutSeparation* m : usable) {
      const VertexSet& side = m->side_containing(v);
      inf = inf.set_intersection(side);
      group.emplace_back(*m, &side == &m->ref_side());
    }
    if (!inf.is_subset_of(x)) {
      witness.uncovered.add(v);
      continue;
    }
    if (std::find(seen_infima.begin(), seen_infima.end(), inf) != seen_infima.end()) continue;
    seen_infima.push_back(inf);
    witness.groups.push_back({v, std::move(group)});
  }

  if (witness.uncovered.empty()) {
    witness.success = true;
  } else {
    witness.groups.clear();
  }
  return witness;
}

std::vector<CutSeparation> enumerate_cuts(const Multigraph& g, long long max_size) {
  const int n = g.vertex_count();
  if (n > kEnumerationGuard)
    throw precondition_error("cut enumeration limited to " + std::to_string(kEnumerationGuard) +
                             " vertices, got " + std::to_string(n));
  std::vector<CutSeparation> out;
  if (n < 2) return out;
  const unsigned long long limit = 1ULL << (n - 1);
  for (unsigned long long mask = 0; mask + 1 < limit; ++mask) {
    std::vector<int> side{0};
    for (int v = 1; v < n; ++v)
      if (mask & (1ULL << (v - 1))) side.push_back(v);
    CutSeparation sep(g, VertexSet(n, std::move(side)));
    if (sep.order() <= max_size) out.push_back(std::move(sep));
  }
  std::sort(out.begin(), out.end(), [](const CutSeparation& a, const CutSeparation& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a < b;
  });
  return out;
}

EquivalenceReport check_generation_equivalence(const Multigraph& g, const std::vector<CutSeparation>& M,
                              std::optional<long long> k_max) {
  EquivalenceReport report;
  report.distinguishing = verify_nested_set(g, M);
  report.distinguishing_pass = report.distinguishing.distinguish_ok && report.distinguishing.efficiency_ok;

  long long limit = 0;
  if (k_max.has_value()) {
    limit = *k_max;
  } else {
    for (const BlockPair& pair : report.distinguishing.pairs)
      limit = std::max(limit, pair.order);
    limit += 1;
  }
  report.k_max = limit;

  std::vector<CutSeparation> cuts = enumerate_cuts(g, limit);
  report.generation_pass = true;
  long long current_k = -1;
  for (const CutSeparation& cut : cuts) {
    if (cut.order() != current_k) {
      current_k = cut.order();
      report.per_k.push_back({current_k, 0, 0});
    }
    auto& bucket = report.per_k.back();
    ++bucket.cut_count;
    GenerationWitness witness = is_generated(cut, M, cut.order());
    if (witness.success) {
      ++bucket.generated;
      report.witnesses.push_back(std::move(witness));
    } else {
      report.generation_pass = false;
      report.failures.push_back({cut, witness.uncovered});
    }
  }
  report.equivalence_agrees = report.distinguishing_pass == report.generation_pass;
  return report;
}

bool replay_witness(const GenerationWitness& witness) {
  if (!witness.success || witness.groups.empty()) return false;
  bool have_sup = false;
  OrientedSides sup;
  for (const GenerationWitness::Group& group : witness.groups) {
    if (group.members.empty()) return false;
    OrientedSides inf{group.members.front().first(), group.members.front().second()};
    for (size_t i = 1; i < group.members.size(); ++i) {
      inf.first = inf.first.set_intersection(group.members[i].first());
      inf.second = inf.second.set_union(group.members[i].second());
    }
    if (!inf.valid()) return false;
    if (!have_sup) {
      sup = inf;
      have_sup = true;
    } else {
      sup.first = sup.first.set_union(inf.first);
      sup.second = sup.second.set_intersection(inf.second);
    }
  }
  bool matches_ref =
      sup.first == witness.target.ref_side() && sup.second == witness.target.other_side();
  bool matches_other =
      sup.first == witness.target.other_side() && sup.second == witness.target.ref_side();
  return matches_ref || matches_other;
}

}  // namespace edgeblocks
