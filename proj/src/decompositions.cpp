#include "glnconverse/decompositions.hpp"

#include <algorithm>

#include "glnconverse/parallel.hpp"
#include "glnconverse/rng.hpp"

namespace glnc {

namespace {

std::vector<int32_t> qsubgroup_members(const GroupContext& ctx) {
  std::vector<int32_t> out;
  for (long i = 0; i < ctx.size(); ++i)
    if (is_qsubgroup(ctx.elem(i))) out.push_back(int32_t(i));
  if (long(out.size()) != qgroup_order(ctx.n(), ctx.q()))
    throw VerificationError("Q-subgroup count does not match the closed form");
  return out;
}

int leading_index(const uint32_t* row, int n) {
  for (int l = 0; l < n; ++l)
    if (row[l] != 0) return l;
  return -1;
}

}  // namespace

int height(const GroupContext& ctx, long g) {
  int n = ctx.n();
  const uint32_t* m = ctx.elem_data(ctx.inv(g));
  int l = leading_index(m + (n - 1) * n, n);
  if (l < 0) throw VerificationError("zero bottom row in an invertible matrix");
  return (n - (l + 1)) % n;
}

std::vector<std::vector<int32_t>> height_cells_exhaustive(const GroupContext& ctx) {
  int n = ctx.n();
  auto qmem = qsubgroup_members(ctx);
  const auto& U = ctx.unipotent();
  auto cells = std::vector<std::vector<int32_t>>(size_t(n));
  auto seen = std::vector<int8_t>(size_t(ctx.size()));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), int8_t(0));
    long ai = ctx.index(alpha_power(n, i));
    for (int32_t u : U) {
      long ua = ctx.mul(u, ai);
      for (int32_t qm : qmem) seen[size_t(ctx.mul(ua, qm))] = 1;
    }
    for (long g = 0; g < ctx.size(); ++g)
      if (seen[size_t(g)]) cells[size_t(i)].push_back(int32_t(g));
  }
  return cells;
}

HeightReport height_partition_check(const GroupContext& ctx) {
  auto cells = height_cells_exhaustive(ctx);
  HeightReport rep;
  rep.mismatches = 0;
  long total = 0;
  std::vector<int8_t> covered(size_t(ctx.size()), 0);
  bool disjoint = true;
  for (int i = 0; i < ctx.n(); ++i) {
    rep.cell_sizes.push_back(long(cells[size_t(i)].size()));
    total += long(cells[size_t(i)].size());
    for (int32_t g : cells[size_t(i)]) {
      if (covered[size_t(g)]) disjoint = false;
      covered[size_t(g)] = 1;
      if (height(ctx, g) != i) ++rep.mismatches;
    }
  }
  rep.partition_ok = disjoint && total == ctx.size() && rep.mismatches == 0;
  return rep;
}

RefinedCoverReport refined_cover_check(const GroupContext& ctx) {
  int n = ctx.n();
  RefinedCoverReport rep;
  rep.half = n / 2;
  rep.kmin = n - rep.half;
  int nk = n - rep.kmin + 1;
  rep.cell_sizes.assign(size_t(rep.half + 1), std::vector<long>(size_t(nk), 0));
  rep.uncovered = 0;
  rep.first_uncovered = -1;

  const auto& U = ctx.unipotent();
  int workers = configured_threads();
  struct Local {
    std::vector<std::vector<long>> sizes;
    long uncovered = 0;
    long first = -1;
  };
  std::vector<Local> locals(size_t(std::max(workers, 1)));
  for (auto& l : locals)
    l.sizes.assign(size_t(rep.half + 1), std::vector<long>(size_t(nk), 0));

  parallel_chunks(ctx.size(), [&](int t, long b, long e) {
    Local& loc = locals[size_t(t)];
    std::vector<uint8_t> hit(size_t((rep.half + 1) * nk));
    for (long g = b; g < e; ++g) {
      std::fill(hit.begin(), hit.end(), uint8_t(0));
      for (int32_t u : U) {
        long xi = ctx.inv(ctx.mul(g, u));
        const uint32_t* m = ctx.elem_data(xi);
        for (int k = rep.kmin; k <= n; ++k) {
          int row = (k == n) ? n - 1 : k - 1;
          int l = leading_index(m + row * n, n);
          int r = (n - (l + 1)) % n;
          if (r <= rep.half) hit[size_t(r * nk + (k - rep.kmin))] = 1;
        }
      }
      bool any = false;
      for (int r = 0; r <= rep.half; ++r)
        for (int kk = 0; kk < nk; ++kk)
          if (hit[size_t(r * nk + kk)]) {
            ++loc.sizes[size_t(r)][size_t(kk)];
            any = true;
          }
      if (!any) {
        ++loc.uncovered;
        if (loc.first < 0) loc.first = g;
      }
    }
  });

  for (auto& loc : locals) {
    for (int r = 0; r <= rep.half; ++r)
      for (int kk = 0; kk < nk; ++kk) rep.cell_sizes[size_t(r)][size_t(kk)] += loc.sizes[size_t(r)][size_t(kk)];
    rep.uncovered += loc.uncovered;
    if (loc.first >= 0 && (rep.first_uncovered < 0 || loc.first < rep.first_uncovered))
      rep.first_uncovered = loc.first;
  }
  return rep;
}

long height_invariance_violations(const GroupContext& ctx, long samples, uint64_t seed) {
  auto qmem = qsubgroup_members(ctx);
  const auto& U = ctx.unipotent();
  SplitMix64 rng(mix_seed(seed, 0x6865696768747321ULL));
  long bad = 0;
  for (long s = 0; s < samples; ++s) {
    long u = U[size_t(rng.below(U.size()))];
    long g = long(rng.below(uint64_t(ctx.size())));
    long qm = qmem[size_t(rng.below(qmem.size()))];
    if (height(ctx, ctx.mul(ctx.mul(u, g), qm)) != height(ctx, g)) ++bad;
  }
  return bad;
}

}  // namespace glnc
