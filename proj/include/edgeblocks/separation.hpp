#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "edgeblocks/multigraph.hpp"
#include "edgeblocks/vertex_set.hpp"

namespace edgeblocks {

// A bipartition {A,B} of the vertex set together with the total multiplicity
// of its induced cut. The bipartition is stored via the side containing
// vertex 0 (the reference side); equality and the canonical total order
// depend only on the bipartition itself.
//
// Canonical order: compare the smaller sides (VertexSet order). This is the
// tie-break order used everywhere: reports, selections, corner choices.
class CutSeparation {
 public:
  CutSeparation() = default;
  // Builds the separation with the given side; the other side is the
  // complement. Side must be a non-empty proper subset.
  CutSeparation(const Multigraph& g, const VertexSet& side);

  int universe() const { return ref_side_.universe(); }
  long long order() const { return order_; }

  // The side containing vertex 0 / its complement.
  const VertexSet& ref_side() const { return ref_side_; }
  const VertexSet& other_side() const { return other_side_; }

  // The canonically smaller of the two sides.
  const VertexSet& small_side() const;

  const VertexSet& side_containing(int v) const;
  const VertexSet& side_not_containing(int v) const;

  // True when X lies entirely in one side and Y entirely in the other.
  bool separates(const VertexSet& x, const VertexSet& y) const;

  // Both sides induce connected subgraphs (bond-separation test).
  bool is_bond(const Multigraph& g) const;

  std::strong_ordering operator<=>(const CutSeparation& other) const;
  bool operator==(const CutSeparation& other) const;

  std::string to_string() const;

 private:
  VertexSet ref_side_;    // contains vertex 0
  VertexSet other_side_;  // complement
  long long order_ = 0;
};

// One of the four inclusions A⊆C, A⊆D, B⊆C, B⊆D holds. Symmetric,
// reflexive. Throws on mismatched vertex ranges.
bool nested(const CutSeparation& s1, const CutSeparation& s2);
inline bool crosses(const CutSeparation& s1, const CutSeparation& s2) { return !nested(s1, s2); }

// Which sides of the two parents form a corner's intersection side,
// relative to the parents' reference orientations (A = reference side of
// s1, C = reference side of s2).
enum class CornerRole { AC, AD, BC, BD };

std::string corner_role_name(CornerRole role);

struct Corner {
  CornerRole role;
  CutSeparation separation;
};

// The corner cut-separations of a crossing pair: every candidate
// {X∩Y, complement} with both sides non-empty, tagged by which two parent
// sides formed the intersection. For crossing bipartitions all four
// candidates are valid. Throws when the inputs are nested.
std::vector<Corner> corners(const Multigraph& g, const CutSeparation& s1,
                            const CutSeparation& s2);

// Number of pool members with order tag k that cross s. Pool members carry
// their order as the tag (an efficient distinguisher of order k can only
// distinguish pairs of order k).
int k_crossing_number(const CutSeparation& s, std::span<const CutSeparation> pool, long long k);

// An orientation (first, second) of a CutSeparation.
class OrientedSeparation {
 public:
  OrientedSeparation() = default;
  OrientedSeparation(CutSeparation sep, bool ref_side_first)
      : sep_(std::move(sep)), ref_first_(ref_side_first) {}

  const CutSeparation& separation() const { return sep_; }
  const VertexSet& first() const { return ref_first_ ? sep_.ref_side() : sep_.other_side(); }
  const VertexSet& second() const { return ref_first_ ? sep_.other_side() : sep_.ref_side(); }

  OrientedSeparation inverse() const { return OrientedSeparation(sep_, !ref_first_); }

  bool operator==(const OrientedSeparation& other) const {
    return first() == other.first();
  }

 private:
  CutSeparation sep_;
  bool ref_first_ = true;
};

// (A,B) <= (C,D) iff A ⊆ C (B ⊇ D is then automatic for bipartitions).
bool oriented_leq(const OrientedSeparation& o1, const OrientedSeparation& o2);

// Set-level supremum/infimum of orientations. Either may fail to be a valid
// cut-separation (an empty side); that is flagged, not an error.
struct OrientedSides {
  VertexSet first;
  VertexSet second;
  bool valid() const { return !first.empty() && !second.empty(); }
};

struct SupInf {
  OrientedSides supremum;  // (A ∪ A', B ∩ B')
  OrientedSides infimum;   // (A ∩ A', B ∪ B')
};

SupInf sup_inf(const OrientedSeparation& o1, const OrientedSeparation& o2);

}  // namespace edgeblocks
