#include "glnconverse/gelfand_graev.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "glnconverse/parallel.hpp"

namespace glnc {

DoubleCosetSet relevant_double_cosets(const GroupContext& ctx) {
  long N = ctx.size();
  long p = ctx.field().p();
  const auto& U = ctx.unipotent();
  std::vector<int> uexp(U.size());
  for (size_t k = 0; k < U.size(); ++k) uexp[k] = ctx.psi_exponent(long(U[k]));

  std::vector<int32_t> exp_of(size_t(N), -1);
  std::vector<int8_t> visited(size_t(N), 0);
  DoubleCosetSet out;
  out.total = 0;

  std::vector<int32_t> scratch;
  for (long g = 0; g < N; ++g) {
    if (visited[size_t(g)]) continue;
    ++out.total;
    bool relevant = true;
    scratch.clear();
    for (size_t a = 0; a < U.size(); ++a) {
      long ug = ctx.mul(U[a], g);
      for (size_t b = 0; b < U.size(); ++b) {
        long h = ctx.mul(ug, U[b]);
        int e = int((uexp[a] + uexp[b]) % p);
        if (!visited[size_t(h)]) {
          visited[size_t(h)] = 1;
          exp_of[size_t(h)] = int32_t(e);
          scratch.push_back(int32_t(h));
        } else if (exp_of[size_t(h)] != e) {
          relevant = false;
        }
      }
    }
    if (!relevant) continue;
    DoubleCoset dc;
    dc.relevant = true;
    std::sort(scratch.begin(), scratch.end());
    dc.rep = scratch.front();
    int32_t base = exp_of[size_t(dc.rep)];
    dc.members = scratch;
    dc.exps.reserve(scratch.size());
    for (int32_t h : scratch) dc.exps.push_back(int32_t(((exp_of[size_t(h)] - base) % p + p) % p));
    out.relevant.push_back(std::move(dc));
  }
  return out;
}

std::vector<Eigen::MatrixXcd> hecke_operators(const GroupContext& ctx, const CosetIndex& ci,
                                              const DoubleCosetSet& dcs, bool conjugated) {
  long d = ci.size();
  long sgn = conjugated ? -1 : 1;
  AdditiveCharacter psi = canonical_psi(ctx.field());
  double norm = 1.0 / double(ctx.unipotent_order());

  std::vector<Eigen::MatrixXcd> ops;
  ops.reserve(dcs.relevant.size());
  for (const auto& dc : dcs.relevant) {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d, d);
    std::vector<std::pair<int32_t, int32_t>> pre;  // (g^{-1}, exponent)
    pre.reserve(dc.members.size());
    for (size_t k = 0; k < dc.members.size(); ++k)
      pre.push_back({int32_t(ctx.inv(dc.members[k])), dc.exps[k]});
    parallel_chunks(d, [&](int, long b, long e) {
      for (long i = b; i < e; ++i) {
        long xi = ci.reps[size_t(i)];
        for (auto [ginv, ex] : pre) {
          long h = ctx.mul(ginv, xi);
          long j = ci.rep_of[size_t(h)];
          long t = ci.cocycle[size_t(h)];
          M(i, j) += psi.unit(sgn * (ex + t));
        }
      }
    });
    M *= norm;
    ops.push_back(std::move(M));
  }
  return ops;
}

namespace {

// Averaging operator over N_a = { I + X : X in the a x (n-a) corner }, acting
// on the induced module by right translation.
Eigen::MatrixXcd corner_average(const GroupContext& ctx, const CosetIndex& ci, int a,
                                bool conjugated) {
  int n = ctx.n();
  long q = ctx.q();
  long d = ci.size();
  long sgn = conjugated ? -1 : 1;
  AdditiveCharacter psi = canonical_psi(ctx.field());
  int cells = a * (n - a);
  long count = 1;
  for (int c = 0; c < cells; ++c) count *= q;

  Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(d, d);
  std::vector<long> xidx;
  xidx.reserve(size_t(count));
  for (long ctr = 0; ctr < count; ++ctr) {
    Mat X = identity(n);
    long v = ctr;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < n - a; ++j) {
        X.at(i, a + j) = uint32_t(v % q);
        v /= q;
      }
    xidx.push_back(ctx.index(X));
  }
  parallel_chunks(d, [&](int, long b, long e) {
    for (long i = b; i < e; ++i) {
      long rep = ci.reps[size_t(i)];
      for (long x : xidx) {
        long h = ctx.mul(rep, x);
        avg(i, ci.rep_of[size_t(h)]) += psi.unit(sgn * ci.cocycle[size_t(h)]);
      }
    }
  });
  avg /= double(count);
  return avg;
}

long long round_micro(double x) { return llround(x * 1e6); }

}  // namespace

Inventory build_inventory(const GroupContext& ctx, bool conjugated, uint64_t seed) {
  Inventory inv;
  inv.ctx = &ctx;
  inv.conjugated = conjugated;
  inv.cosets = build_psi_cosets(ctx);
  long d = inv.cosets.size();
  if (d > kMaxModuleDim)
    throw UsageError("induced module dimension " + std::to_string(d) +
                     " exceeds the spectral bound " + std::to_string(kMaxModuleDim));
  inv.dcosets = relevant_double_cosets(ctx);

  auto ops = hecke_operators(ctx, inv.cosets, inv.dcosets, conjugated);

  // The trivial double coset U must act as the identity.
  bool found_unit = false;
  for (size_t k = 0; k < inv.dcosets.relevant.size(); ++k)
    if (inv.dcosets.relevant[k].rep == int32_t(ctx.identity())) {
      found_unit = true;
      double dev = (ops[k] - Eigen::MatrixXcd::Identity(d, d)).norm();
      if (dev > 1e-12)
        throw VerificationError("normalized operator of the trivial coset is not the identity");
    }
  if (!found_unit) throw VerificationError("trivial double coset missing from the relevant list");

  inv.max_commutator = max_commutator_norm(ops);
  if (inv.max_commutator > 1e-8)
    throw VerificationError("Hecke family is not commutative within tolerance");

  auto split = joint_eigensplit(ops, seed);
  if (split.size() != inv.dcosets.relevant.size())
    throw VerificationError("component count does not match the relevant coset count");

  long sgn = conjugated ? -1 : 1;
  AdditiveCharacter psi = canonical_psi(ctx.field());
  long j0 = inv.cosets.identity_coset;

  std::vector<Eigen::MatrixXcd> corner;
  for (int a = 1; a < ctx.n(); ++a)
    corner.push_back(corner_average(ctx, inv.cosets, a, conjugated));

  for (auto& sc : split) {
    GenericComponent c;
    c.dim = int(sc.basis.cols());
    c.fingerprint = sc.eigenvalues;
    c.basis = std::move(sc.basis);

    Eigen::VectorXcd raw = c.basis * c.basis.row(j0).adjoint();
    cplx denom = psi.unit(sgn * inv.cosets.cocycle[size_t(ctx.identity())]) * raw(j0);
    if (std::abs(denom) < 1e-10)
      throw VerificationError("component admits no normalization at the identity");
    c.bessel = raw / denom;

    c.cuspidal = true;
    for (const auto& avg : corner)
      if ((avg * c.basis).norm() > 1e-8) {
        c.cuspidal = false;
        break;
      }

    long q = ctx.q();
    for (long z = 1; z < q; ++z) {
      long zi = scalar_index(ctx, z);
      c.omega.push_back(psi.unit(sgn * inv.cosets.cocycle[size_t(zi)]) *
                        c.bessel(inv.cosets.rep_of[size_t(zi)]));
    }
    c.omega_exponent = -1;
    for (const auto& chi : mult_characters(ctx.field())) {
      double dev = 0;
      for (long z = 1; z < q; ++z) dev = std::max(dev, std::abs(c.omega[size_t(z - 1)] - chi.value(z)));
      if (dev <= 1e-8) {
        c.omega_exponent = chi.exponent();
        break;
      }
    }
    if (c.omega_exponent < 0)
      throw VerificationError("central character does not match any character of the field");

    inv.comps.push_back(std::move(c));
  }

  std::sort(inv.comps.begin(), inv.comps.end(), [](const GenericComponent& a, const GenericComponent& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    for (size_t i = 0; i < a.fingerprint.size(); ++i) {
      long long ar = round_micro(a.fingerprint[i].real()), br = round_micro(b.fingerprint[i].real());
      if (ar != br) return ar < br;
      long long ai = round_micro(a.fingerprint[i].imag()), bi = round_micro(b.fingerprint[i].imag());
      if (ai != bi) return ai < bi;
    }
    return false;
  });

  long total = 0;
  for (const auto& c : inv.comps) total += c.dim;
  if (total != d) throw VerificationError("component dimensions do not exhaust the module");
  return inv;
}

cplx bessel_value(const Inventory& inv, int comp, long g) {
  const GroupContext& ctx = *inv.ctx;
  long sgn = inv.conjugated ? -1 : 1;
  AdditiveCharacter psi = canonical_psi(ctx.field());
  const GenericComponent& c = inv.comps[size_t(comp)];
  return psi.unit(sgn * inv.cosets.cocycle[size_t(g)]) * c.bessel(inv.cosets.rep_of[size_t(g)]);
}

std::vector<cplx> bessel_table(const Inventory& inv, int comp) {
  const GroupContext& ctx = *inv.ctx;
  long sgn = inv.conjugated ? -1 : 1;
  AdditiveCharacter psi = canonical_psi(ctx.field());
  const GenericComponent& c = inv.comps[size_t(comp)];
  std::vector<cplx> out(size_t(ctx.size()));
  for (long g = 0; g < ctx.size(); ++g)
    out[size_t(g)] =
        psi.unit(sgn * inv.cosets.cocycle[size_t(g)]) * c.bessel(inv.cosets.rep_of[size_t(g)]);
  return out;
}

long scalar_index(const GroupContext& ctx, long c) {
  return ctx.index(scalar_mat(ctx.field(), ctx.n(), c));
}

long cuspidal_count_oracle(const Field& base, int n) {
  Field ext = make_field(base.p(), base.k() * n);
  long count = 0;
  for (const auto& orb : frobenius_orbits(ext, base))
    if (orb.regular) ++count;
  return count;
}

std::vector<long> cuspidal_omega_exponents_oracle(const Field& base, int n) {
  Field ext = make_field(base.p(), base.k() * n);
  long qm1 = base.q() - 1;
  std::vector<long> out;
  for (const auto& orb : frobenius_orbits(ext, base))
    if (orb.regular) out.push_back(orb.exponents.front() % qm1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace glnc
