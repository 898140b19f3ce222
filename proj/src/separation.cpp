#include "edgeblocks/separation.hpp"

#include "edgeblocks/errors.hpp"

namespace edgeblocks {

CutSeparation::CutSeparation(const Multigraph& g, const VertexSet& side) {
  if (side.universe() != g.vertex_count())
    throw precondition_error("separation side built for a different graph");
  if (side.empty() || side.full())
    throw precondition_error("separation side must be a non-empty proper subset");
  VertexSet comp = side.complement();
  if (side.contains(0)) {
    ref_side_ = side;
    other_side_ = std::move(comp);
  } else {
    ref_side_ = std::move(comp);
    other_side_ = side;
  }
  order_ = cut_order(g, ref_side_);
}

const VertexSet& CutSeparation::small_side() const {
  return ref_side_ < other_side_ ? ref_side_ : other_side_;
}

const VertexSet& CutSeparation::side_containing(int v) const {
  return ref_side_.contains(v) ? ref_side_ : other_side_;
}

const VertexSet& CutSeparation::side_not_containing(int v) const {
  return ref_side_.contains(v) ? other_side_ : ref_side_;
}

bool CutSeparation::separates(const VertexSet& x, const VertexSet& y) const {
  return (x.is_subset_of(ref_side_) && y.is_subset_of(other_side_)) ||
         (x.is_subset_of(other_side_) && y.is_subset_of(ref_side_));
}

bool CutSeparation::is_bond(const Multigraph& g) const {
  return components_within(g, ref_side_).size() == 1 &&
         components_within(g, other_side_).size() == 1;
}

std::strong_ordering CutSeparation::operator<=>(const CutSeparation& other) const {
  if (universe() != other.universe())
    throw precondition_error("comparing separations over different vertex ranges");
  return small_side() <=> other.small_side();
}

bool CutSeparation::operator==(const CutSeparation& other) const {
  return ref_side_ == other.ref_side_;
}

std::string CutSeparation::to_string() const {
  return small_side().to_string() + "|" + small_side().complement().to_string() + " (order " +
         std::to_string(order_) + ")";
}

bool nested(const CutSeparation& s1, const CutSeparation& s2) {
  if (s1.universe() != s2.universe())
    throw precondition_error("nestedness of separations over different vertex ranges");
  const VertexSet& a = s1.ref_side();
  const VertexSet& b = s1.other_side();
  const VertexSet& c = s2.ref_side();
  const VertexSet& d = s2.other_side();
  return a.is_subset_of(c) || a.is_subset_of(d) || b.is_subset_of(c) || b.is_subset_of(d);
}

std::string corner_role_name(CornerRole role) {
  switch (role) {
    case CornerRole::AC: return "A∩C";
    case CornerRole::AD: return "A∩D";
    case CornerRole::BC: return "B∩C";
    case CornerRole::BD: return "B∩D";
  }
  return "?";
}

std::vector<Corner> corners(const Multigraph& g, const CutSeparation& s1,
                            const CutSeparation& s2) {
  if (nested(s1, s2)) throw precondition_error("corners of a nested pair are not defined");
  const VertexSet& a = s1.ref_side();
  const VertexSet& b = s1.other_side();
  const VertexSet& c = s2.ref_side();
  const VertexSet& d = s2.other_side();
  std::vector<Corner> out;
  auto push = [&](CornerRole role, const VertexSet& x, const VertexSet& y) {
    VertexSet small = x.set_intersection(y);
    if (small.empty() || small.full()) return;  // not a cut-separation
    out.push_back({role, CutSeparation(g, small)});
  };
  push(CornerRole::AC, a, c);
  push(CornerRole::AD, a, d);
  push(CornerRole::BC, b, c);
  push(CornerRole::BD, b, d);
  return out;
}

int k_crossing_number(const CutSeparation& s, std::span<const CutSeparation> pool, long long k) {
  int count = 0;
  for (const CutSeparation& member : pool)
    if (member.order() == k && crosses(s, member)) ++count;
  return count;
}

bool oriented_leq(const OrientedSeparation& o1, const OrientedSeparation& o2) {
  return o1.first().is_subset_of(o2.first());
}

SupInf sup_inf(const OrientedSeparation& o1, const OrientedSeparation& o2) {
  SupInf result;
  result.supremum = {o1.first().set_union(o2.first()), o1.second().set_intersection(o2.second())};
  result.infimum = {o1.first().set_intersection(o2.first()), o1.second().set_union(o2.second())};
  return result;
}

}  // namespace edgeblocks
