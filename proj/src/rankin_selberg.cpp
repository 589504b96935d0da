#include "glnconverse/rankin_selberg.hpp"

#include <algorithm>
#include <cmath>

#include "glnconverse/parallel.hpp"
#include "glnconverse/rng.hpp"

namespace glnc {

std::vector<cplx> conjugated_model_table(const GroupContext& ctx, const std::vector<cplx>& table) {
  long di = ctx.index(d_alt(ctx.field(), ctx.n()));
  std::vector<cplx> out(size_t(ctx.size()));
  for (long g = 0; g < ctx.size(); ++g)
    out[size_t(g)] = table[size_t(ctx.mul(ctx.mul(di, g), di))];
  return out;
}

WhittakerFn table_fn(const GroupContext& ctx, std::shared_ptr<const std::vector<cplx>> table) {
  const GroupContext* c = &ctx;
  return [c, table](const Mat& m) { return (*table)[size_t(c->index(m))]; };
}

WhittakerFn right_translate(const GroupContext& ctx, WhittakerFn w, long g0) {
  const Field* f = &ctx.field();
  Mat g0m = ctx.elem(g0);
  return [f, w = std::move(w), g0m](const Mat& m) { return w(mat_mul(*f, m, g0m)); };
}

WhittakerFn whittaker_tilde(const GroupContext& ctx, WhittakerFn w) {
  const Field* f = &ctx.field();
  Mat wn = w_long(ctx.n());
  return [f, w = std::move(w), wn](const Mat& m) {
    return w(mat_mul(*f, wn, transpose(mat_inv(*f, m))));
  };
}

cplx zeta_sum(const GroupContext& big, const GroupContext& small,
              const std::vector<int32_t>& small_reps, const WhittakerFn& w_pi,
              const WhittakerFn& w_tau, int j) {
  int n = big.n();
  int r = small.n();
  if (j < 0 || r + j > n) throw UsageError("zeta sum needs 0 <= j <= n - r");
  long q = big.q();
  long xcount = 1;
  for (int c = 0; c < j * r; ++c) xcount *= q;

  cplx tot = 0;
  for (int32_t rep : small_reps) {
    Mat g = small.elem(rep);
    cplx wt = w_tau(g);
    if (wt == cplx(0.0, 0.0)) continue;
    cplx inner = 0;
    for (long ctr = 0; ctr < xcount; ++ctr) {
      Mat E = identity(n);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) E.at(a, b) = g.at(a, b);
      long v = ctr;
      for (int a = 0; a < j; ++a)
        for (int b = 0; b < r; ++b) {
          E.at(r + a, b) = uint32_t(v % q);
          v /= q;
        }
      inner += w_pi(E);
    }
    tot += inner * wt;
  }
  return tot;
}

namespace {

struct Probe {
  int j;
  cplx num;
  cplx den;
};

struct Extraction {
  cplx gamma;
  double max_residual = 0.0;
  int admitted = 0;
  int walked = 0;
  bool ok = false;
  std::string note;
};

constexpr double kAdmitFloor = 1e-10;
constexpr double kVanishTol = 1e-8;
constexpr int kNeedAdmitted = 9;  // the defining probe plus eight verifiers
constexpr int kWalkCap = 400;

cplx ipow(cplx z, int e) {
  cplx out = 1;
  for (int i = 0; i < e; ++i) out *= z;
  return out;
}

// One side of the functional equation with the self-dual q-power weight.
Extraction run_extraction(const GroupContext& big, const GroupContext& small,
                          const std::vector<int32_t>& reps, const std::vector<cplx>& jp,
                          const std::vector<cplx>& jt_model, cplx sign, uint64_t seed) {
  int n = big.n();
  int r = small.n();
  int jmax = n - r - 1;
  const Field& f = big.field();
  double q = double(big.q());

  Mat wn = w_long(n);
  Mat wr = w_long(r);
  Mat wnr = w_nr(n, r);

  SplitMix64 rng(seed);
  std::vector<Probe> admitted;
  std::vector<Probe> skipped;
  std::vector<bool> jseen(size_t(jmax + 1), false);

  Extraction out;
  auto done = [&]() {
    if (int(admitted.size()) < kNeedAdmitted) return false;
    return jseen[0] && jseen[size_t(jmax)];
  };

  int t = 0;
  while (!done() && out.walked < kWalkCap) {
    int j = t % (jmax + 1);
    ++t;
    long g0 = long(rng.below(uint64_t(big.size())));
    long h0 = long(rng.below(uint64_t(small.size())));
    Mat g0m = big.elem(g0);
    Mat h0m = small.elem(h0);

    WhittakerFn wp = [&](const Mat& m) { return jp[size_t(big.index(mat_mul(f, m, g0m)))]; };
    WhittakerFn wt = [&](const Mat& m) { return jt_model[size_t(small.index(mat_mul(f, m, h0m)))]; };
    WhittakerFn wp_tw = [&](const Mat& m) {
      long x = big.index(mat_mul(f, m, wnr));
      Mat ti = transpose(big.elem(big.inv(x)));
      return jp[size_t(big.index(mat_mul(f, mat_mul(f, wn, ti), g0m)))];
    };
    WhittakerFn wt_t = [&](const Mat& m) {
      long x = small.index(m);
      Mat ti = transpose(small.elem(small.inv(x)));
      return jt_model[size_t(small.index(mat_mul(f, mat_mul(f, wr, ti), h0m)))];
    };

    cplx den = zeta_sum(big, small, reps, wp, wt, j) * std::pow(q, -0.5 * j * r);
    cplx num = zeta_sum(big, small, reps, wp_tw, wt_t, jmax - j) *
               std::pow(q, -0.5 * (jmax - j) * r);
    ++out.walked;
    if (std::abs(den) > kAdmitFloor) {
      admitted.push_back({j, num, den});
      jseen[size_t(j)] = true;
    } else {
      skipped.push_back({j, num, den});
    }
  }

  if (admitted.empty()) {
    out.note = "all probes vanished";
    return out;
  }
  out.admitted = int(admitted.size());
  out.gamma = admitted.front().num / (sign * admitted.front().den);
  for (const auto& pr : admitted) {
    double res = std::abs(pr.num - sign * out.gamma * pr.den) /
                 std::max({std::abs(pr.num), std::abs(pr.den), 1e-12});
    out.max_residual = std::max(out.max_residual, res);
  }
  for (const auto& pr : skipped)
    if (std::abs(pr.num) > kVanishTol) {
      out.max_residual = std::max(
          out.max_residual,
          std::abs(pr.num) / std::max({std::abs(pr.num), std::abs(pr.den), 1e-12}));
      out.note = "vanishing probe with a nonvanishing partner";
    }
  out.ok = done() && out.note.empty();
  if (!out.ok && out.note.empty()) out.note = "probe walk exhausted before coverage";
  return out;
}

}  // namespace

GammaRecord extract_gamma(const GammaInput& in, int pi_id, int tau_rank, int tau_id,
                          uint64_t seed, bool with_dual) {
  const GroupContext& big = *in.big;
  const GroupContext& small = *in.small;
  int n = big.n();
  int r = small.n();
  if (r < 1 || r >= n) throw UsageError("twist rank must satisfy 1 <= r <= n-1");
  if (big.q() != small.q() || big.field().p() != small.field().p())
    throw UsageError("pi and tau must live over the same field");

  GammaRecord rec;
  rec.n = n;
  rec.q = big.q();
  rec.pi_id = pi_id;
  rec.tau_rank = tau_rank;
  rec.tau_id = tau_id;

  uint64_t base = mix_seed(seed, uint64_t(n) << 40 | uint64_t(big.q()) << 20 | uint64_t(pi_id));
  base = mix_seed(base, uint64_t(tau_rank) << 32 | uint64_t(uint32_t(tau_id)));

  std::vector<cplx> jt_model = conjugated_model_table(small, *in.j_tau);
  cplx sign = ipow(in.omega_tau_m1, n - 1);
  Extraction primal =
      run_extraction(big, small, *in.small_reps, *in.j_pi, jt_model, sign, mix_seed(base, 1));

  rec.gamma = primal.gamma;
  rec.max_residual = primal.max_residual;
  rec.probes_admitted = primal.admitted;
  rec.probes_walked = primal.walked;
  rec.ok = primal.ok;
  rec.note = primal.note;

  if (with_dual && primal.ok) {
    std::vector<cplx> jp_bar(in.j_pi->size());
    for (size_t i = 0; i < jp_bar.size(); ++i) jp_bar[i] = std::conj((*in.j_pi)[i]);
    std::vector<cplx> jt_bar(jt_model.size());
    for (size_t i = 0; i < jt_bar.size(); ++i) jt_bar[i] = std::conj(jt_model[i]);
    cplx dsign = ipow(std::conj(in.omega_tau_m1), n - 1);
    Extraction dual =
        run_extraction(big, small, *in.small_reps, jp_bar, jt_bar, dsign, mix_seed(base, 2));
    if (!dual.ok) {
      rec.ok = false;
      rec.note = "dual extraction failed: " + dual.note;
    } else {
      rec.gamma_dual = dual.gamma;
      rec.dual_product_dev = std::abs(rec.gamma * rec.gamma_dual - cplx(1.0, 0.0));
      rec.max_residual = std::max(rec.max_residual, dual.max_residual);
    }
  }
  return rec;
}

std::vector<GammaRecord> gamma_table(const GroupContext& big, const Inventory& big_inv,
                                     const std::vector<const GroupContext*>& rank_ctx,
                                     const std::vector<const Inventory*>& rank_inv,
                                     int rmax, bool all_generic, uint64_t seed, bool with_dual) {
  if (rmax < 1 || rmax >= big.n()) throw UsageError("rmax must satisfy 1 <= rmax <= n-1");
  if (int(rank_ctx.size()) < rmax || int(rank_inv.size()) < rmax)
    throw UsageError("missing twist inventories");

  struct Job {
    int pi, rank, tau;
  };
  std::vector<Job> jobs;
  std::vector<std::vector<cplx>> pi_tables(big_inv.comps.size());
  for (int pi = 0; pi < int(big_inv.comps.size()); ++pi) {
    if (!big_inv.comps[size_t(pi)].cuspidal) continue;
    pi_tables[size_t(pi)] = bessel_table(big_inv, pi);
    for (int r = 1; r <= rmax; ++r)
      for (int tau = 0; tau < int(rank_inv[size_t(r - 1)]->comps.size()); ++tau) {
        const auto& tc = rank_inv[size_t(r - 1)]->comps[size_t(tau)];
        if (!all_generic && !tc.cuspidal) continue;
        jobs.push_back({pi, r, tau});
      }
  }

  auto tau_tables = std::vector<std::vector<std::vector<cplx>>>(size_t(rmax));
  for (int r = 1; r <= rmax; ++r) {
    const Inventory& ti = *rank_inv[size_t(r - 1)];
    tau_tables[size_t(r - 1)].resize(ti.comps.size());
    for (int tau = 0; tau < int(ti.comps.size()); ++tau)
      tau_tables[size_t(r - 1)][size_t(tau)] = bessel_table(ti, tau);
  }

  long minus_one = big.field().minus_one();
  std::vector<GammaRecord> records(jobs.size());
  parallel_chunks(long(jobs.size()), [&](int, long b, long e) {
    for (long k = b; k < e; ++k) {
      const Job& jb = jobs[size_t(k)];
      const Inventory& ti = *rank_inv[size_t(jb.rank - 1)];
      GammaInput gin;
      gin.big = &big;
      gin.small = rank_ctx[size_t(jb.rank - 1)];
      gin.small_reps = &ti.cosets.reps;
      gin.j_pi = &pi_tables[size_t(jb.pi)];
      gin.j_tau = &tau_tables[size_t(jb.rank - 1)][size_t(jb.tau)];
      gin.omega_tau_m1 = ti.comps[size_t(jb.tau)].omega[size_t(minus_one - 1)];
      records[size_t(k)] = extract_gamma(gin, jb.pi, jb.rank, jb.tau, seed, with_dual);
    }
  });
  return records;
}

}  // namespace glnc
