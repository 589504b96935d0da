#include "support/character_oracle.hpp"

#include <cmath>

namespace glnc::testing {

CharacterTable character_table(const GroupContext& ctx) {
  const long N = ctx.size();
  CharacterTable ct;
  ct.cls.assign(size_t(N), -1);
  for (long i = 0; i < N; ++i) {
    if (ct.cls[size_t(i)] >= 0) continue;
    int c = int(ct.reps.size());
    ct.reps.push_back(i);
    for (long h = 0; h < N; ++h) ct.cls[size_t(ctx.mul(ctx.mul(h, i), ctx.inv(h)))] = c;
  }
  const int k = int(ct.reps.size());
  ct.sizes.assign(size_t(k), 0);
  for (long i = 0; i < N; ++i) ++ct.sizes[size_t(ct.cls[size_t(i)])];

  // Class sums acting on the regular representation R(g) e_h = e_{gh}.
  std::vector<Eigen::MatrixXcd> ops;
  for (int c = 0; c < k; ++c) {
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N, N);
    for (long g = 0; g < N; ++g) {
      if (ct.cls[size_t(g)] != c) continue;
      for (long h = 0; h < N; ++h) S(ctx.mul(g, h), h) += 1.0;
    }
    ops.push_back(std::move(S));
  }
  auto comps = joint_eigensplit(ops, 11);
  if (int(comps.size()) != k)
    throw VerificationError("class-sum split does not match the class count");

  for (const auto& comp : comps) {
    const long m = comp.basis.cols();
    const int deg = int(std::lround(std::sqrt(double(m))));
    if (long(deg) * deg != m)
      throw VerificationError("isotypic block dimension is not a perfect square");
    auto vals = std::vector<cplx>(size_t(k));
    for (int c = 0; c < k; ++c) {
      long g = ct.reps[size_t(c)];
      cplx tr = 0;
      // tr(P R(g)) = sum_h P[gh, h]
      for (long h = 0; h < N; ++h) tr += comp.basis.row(h).dot(comp.basis.row(ctx.mul(g, h)));
      vals[size_t(c)] = tr / double(deg);
    }
    ct.degs.push_back(deg);
    ct.chi.push_back(std::move(vals));
  }
  return ct;
}

TraceBessel trace_bessel(const GroupContext& ctx, const CharacterTable& ct, int irr) {
  AdditiveCharacter psi = canonical_psi(ctx.field());
  const auto& vals = ct.chi.at(size_t(irr));
  TraceBessel out;
  out.table.resize(size_t(ctx.size()));
  for (long g = 0; g < ctx.size(); ++g) {
    cplx s = 0;
    for (int32_t u : ctx.unipotent())
      s += psi.unit(-ctx.psi_exponent(long(u))) *
           vals[size_t(ct.cls[size_t(ctx.mul(g, long(u)))])];
    out.table[size_t(g)] = s / double(ctx.unipotent_order());
  }
  cplx j1 = out.table[size_t(ctx.identity())];
  if (std::abs(j1 - cplx(1, 0)) <= 1e-8)
    out.generic = true;
  else if (std::abs(j1) <= 1e-8)
    out.generic = false;
  else
    throw VerificationError("trace sum at the identity is neither zero nor one");
  return out;
}

}  // namespace glnc::testing
