#include "edgeblocks/vertex_set.hpp"

#include <algorithm>
#include <sstream>

#include "edgeblocks/errors.hpp"

namespace edgeblocks {

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw precondition_error("vertex set universe must be non-negative");
}

VertexSet::VertexSet(int universe, std::vector<int> members)
    : universe_(universe), members_(std::move(members)) {
  if (universe < 0) throw precondition_error("vertex set universe must be non-negative");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int v : members_) {
    if (v < 0 || v >= universe_)
      throw precondition_error("vertex " + std::to_string(v) + " out of range 0.." +
                               std::to_string(universe_ - 1));
  }
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::add(int v) {
  if (v < 0 || v >= universe_)
    throw precondition_error("vertex " + std::to_string(v) + " out of range");
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw precondition_error("vertex sets over different vertex ranges");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  check_same_universe(other);
  std::vector<int> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  VertexSet r(universe_);
  r.members_ = std::move(out);
  return r;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
  check_same_universe(other);
  std::vector<int> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  VertexSet r(universe_);
  r.members_ = std::move(out);
  return r;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  check_same_universe(other);
  std::vector<int> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  VertexSet r(universe_);
  r.members_ = std::move(out);
  return r;
}

VertexSet VertexSet::complement() const {
  std::vector<int> out;
  out.reserve(universe_ - size());
  auto it = members_.begin();
  for (int v = 0; v < universe_; ++v) {
    if (it != members_.end() && *it == v) {
      ++it;
    } else {
      out.push_back(v);
    }
  }
  VertexSet r(universe_);
  r.members_ = std::move(out);
  return r;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  if (auto c = members_.size() <=> other.members_.size(); c != 0) return c;
  return members_ <=> other.members_;
}

bool VertexSet::operator==(const VertexSet& other) const { return members_ == other.members_; }

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

}  // namespace edgeblocks
