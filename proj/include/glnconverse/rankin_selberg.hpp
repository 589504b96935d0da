#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "glnconverse/gelfand_graev.hpp"

namespace glnc {

using WhittakerFn = std::function<cplx(const Mat&)>;

// psi^{-1}-model transport of a Bessel table: out[g] = table[d g d^{-1}]
// with d = diag(+1, -1, +1, ...).
std::vector<cplx> conjugated_model_table(const GroupContext& ctx,
                                         const std::vector<cplx>& table);

WhittakerFn table_fn(const GroupContext& ctx, std::shared_ptr<const std::vector<cplx>> table);
WhittakerFn right_translate(const GroupContext& ctx, WhittakerFn w, long g0);
// x -> w(w_n * transpose(x)^{-1})
WhittakerFn whittaker_tilde(const GroupContext& ctx, WhittakerFn w);

// Plain double sum Z(W_pi, W_tau; j) over the given representatives of
// U_r\G_r and all j x r coordinate matrices; the embedding places g in the
// top-left r x r corner and the coordinates in rows r..r+j-1 of the first r
// columns.  The representative list is a parameter so invariance under a
// different choice is testable.
cplx zeta_sum(const GroupContext& big, const GroupContext& small,
              const std::vector<int32_t>& small_reps, const WhittakerFn& w_pi,
              const WhittakerFn& w_tau, int j);

struct GammaRecord {
  int n = 0;
  long q = 0;
  int pi_id = -1;
  int tau_rank = 0;
  int tau_id = -1;
  cplx gamma;
  double max_residual = 0.0;
  int probes_admitted = 0;
  int probes_walked = 0;
  cplx gamma_dual;
  double dual_product_dev = 0.0;
  bool ok = false;
  std::string note;
};

struct GammaInput {
  const GroupContext* big = nullptr;
  const GroupContext* small = nullptr;
  const std::vector<int32_t>* small_reps = nullptr;  // psi-coset reps of U_r\G_r
  const std::vector<cplx>* j_pi = nullptr;           // Bessel table over G_n
  const std::vector<cplx>* j_tau = nullptr;          // Bessel table over G_r
  cplx omega_tau_m1;                                 // omega_tau(-1)
};

// Extracts gamma as the ratio in the functional equation, walking a
// deterministic schedule of translate pairs until the defining probe and at
// least eight further admitted probes (covering j = 0 and j = n-r-1) are
// found.  Probes whose denominator side vanishes are skipped from the
// residual but checked for a consistently vanishing partner.  with_dual adds
// the extraction in the conjugated model and the product deviation
// |gamma * gamma_dual - 1|.
GammaRecord extract_gamma(const GammaInput& in, int pi_id, int tau_rank, int tau_id,
                          uint64_t seed, bool with_dual = true);

// Records for every cuspidal pi of big_inv against the twist inventory of
// every rank 1..rmax: all generic tau when all_generic, otherwise the
// cuspidal tau (at rank 1 every component is a character, hence cuspidal).
// Component ids are positions in the canonical inventories.
std::vector<GammaRecord> gamma_table(const GroupContext& big, const Inventory& big_inv,
                                     const std::vector<const GroupContext*>& rank_ctx,
                                     const std::vector<const Inventory*>& rank_inv,
                                     int rmax, bool all_generic, uint64_t seed,
                                     bool with_dual = true);

}  // namespace glnc
