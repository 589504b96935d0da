#pragma once

#include <cstdint>
#include <vector>

#include "glnconverse/group.hpp"

namespace glnc {

// Height of g in 0..n-1: with ell the 1-based position of the first nonzero
// entry of the bottom row of g^{-1}, height(g) = (n - ell) mod n.  The cell
// of height i is exactly the double coset U alpha^i Q.
int height(const GroupContext& ctx, long g);

// Exhaustive double cosets U alpha^i Q as sorted element index lists,
// i = 0..n-1, built by direct triple products (the oracle the pivot rule is
// validated against).
std::vector<std::vector<int32_t>> height_cells_exhaustive(const GroupContext& ctx);

struct HeightReport {
  std::vector<long> cell_sizes;  // per height, from the exhaustive cells
  long mismatches;               // elements where the pivot rule disagrees
  bool partition_ok;             // cells are disjoint and cover the group
};
HeightReport height_partition_check(const GroupContext& ctx);

// Cover by U alpha^r Q alpha^k U for 0 <= r <= floor(n/2) and
// n - floor(n/2) <= k <= n.  Membership of g is detected through the leading
// entry of row k of (g u)^{-1} (row n for k = n), ranging over u in U.
struct RefinedCoverReport {
  int half;                                   // floor(n/2)
  int kmin;                                   // n - half
  std::vector<std::vector<long>> cell_sizes;  // [r][k - kmin]
  long uncovered;                             // elements in no cell (expect 0)
  long first_uncovered;                       // least such index, or -1
};
RefinedCoverReport refined_cover_check(const GroupContext& ctx);

// Sampled check that the height is invariant under left U- and right
// Q-translation; returns the number of violated triples (expected 0).
long height_invariance_violations(const GroupContext& ctx, long samples, uint64_t seed);

}  // namespace glnc
