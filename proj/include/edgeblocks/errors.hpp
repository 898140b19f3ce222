#pragma once

#include <stdexcept>
#include <string>

namespace edgeblocks {

// Bad graph documents, out-of-range indices, loops, malformed JSON.
// CLI exit code 2.
struct graph_format_error : std::runtime_error {
  explicit graph_format_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its contract (overlapping contraction
// parts, nested inputs to an uncrossing step, disconnected graph at a
// decomposition entry point, size guard exceeded, ...). CLI exit code 2.
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// The minimum-separation enumeration hit its configured cap.
// CLI exit code 2.
struct enumeration_cap_error : std::runtime_error {
  explicit enumeration_cap_error(const std::string& what) : std::runtime_error(what) {}
};

// A guarantee that the theory makes unconditionally was observed to fail
// (an uncrossing step produced no qualifying corner, a postcondition check
// tripped, the uncrossing engine ran out of budget). Always a bug.
// CLI exit code 3.
struct internal_invariant_error : std::logic_error {
  explicit internal_invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace edgeblocks
