#pragma once

#include <compare>
#include <string>
#include <vector>

namespace edgeblocks {

// A subset of the vertex range 0..n-1 of a fixed graph, stored sorted.
//
// Every "canonical order" in this library is derived from the total order
// defined here: compare by size first, then lexicographically by the sorted
// member list. The order depends only on the vertex identifiers, so equal
// sets built in different ways compare equal.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::vector<int> members);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool full() const { return size() == universe_; }
  bool contains(int v) const;
  const std::vector<int>& members() const { return members_; }

  void add(int v);

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_intersection(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;
  VertexSet complement() const;

  // Canonical total order: (size, lexicographic members).
  std::strong_ordering operator<=>(const VertexSet& other) const;
  bool operator==(const VertexSet& other) const;

  std::string to_string() const;

 private:
  void check_same_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<int> members_;
};

}  // namespace edgeblocks
