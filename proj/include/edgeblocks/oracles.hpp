#pragma once

#include <vector>

#include "edgeblocks/multigraph.hpp"
#include "edgeblocks/separation.hpp"
#include "edgeblocks/vertex_set.hpp"

namespace edgeblocks {

// Brute-force reference implementations. Every fast-path result is validated
// against these at desk scale; they exist to be obviously correct, not fast.
// All of them refuse graphs beyond the guard instead of degrading silently.

inline constexpr int kOracleGuard = 16;

// Minimum total crossing multiplicity over all bipartitions separating u
// from v (2^(n-2) candidates).
long long brute_lambda(const Multigraph& g, int u, int v);

// Equivalence classes of "λ(u,v) >= k", computed pairwise. Transitivity of
// the relation is validated; a violation is an internal error.
std::vector<VertexSet> brute_blocks(const Multigraph& g, long long k);

// Minimum cut value between vertex sets over all separating bipartitions.
long long brute_min_cut_value(const Multigraph& g, const VertexSet& S, const VertexSet& T);

// All bipartitions with S in one side, T in the other, order equal to the
// minimum, and optionally both sides connected. Mirrors
// enumerate_min_separations when bonds_only is set.
std::vector<CutSeparation> brute_min_separations(const Multigraph& g, const VertexSet& S,
                                                 const VertexSet& T, bool bonds_only);

// All bond-separations that efficiently distinguish β from β′: both sides
// connected, β and β′ separated, order minimal among such bipartitions.
std::vector<CutSeparation> brute_efficient_distinguishers(const Multigraph& g,
                                                          const VertexSet& beta1,
                                                          const VertexSet& beta2);

}  // namespace edgeblocks
