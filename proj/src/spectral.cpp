#include "glnconverse/spectral.hpp"

#include <algorithm>
#include <string>

#include "glnconverse/parallel.hpp"
#include "glnconverse/rng.hpp"

namespace glnc {

namespace {

constexpr int kMaxDepth = 10;
constexpr double kScalarTol = 1e-7;

// Returns the scalar action if every operator acts as a scalar on the block
// spanned by Q's columns; nullptr-style bool flag otherwise.
bool scalar_action(const std::vector<Eigen::MatrixXcd>& ops, const Eigen::MatrixXcd& Q,
                   std::vector<cplx>& out) {
  long m = Q.cols();
  out.clear();
  for (const auto& T : ops) {
    Eigen::MatrixXcd B = Q.adjoint() * (T * Q);
    cplx lam = B.trace() / double(m);
    Eigen::MatrixXcd D = B;
    D.diagonal().array() -= lam;
    if (D.norm() > kScalarTol * std::max(1.0, std::abs(lam)) * double(m)) return false;
    out.push_back(lam);
  }
  return true;
}

void split_recursive(const std::vector<Eigen::MatrixXcd>& ops, const Eigen::MatrixXcd& Q,
                     SplitMix64& rng, double tol, double gap, int depth,
                     std::vector<SpectralComponent>& out) {
  std::vector<cplx> eigs;
  if (scalar_action(ops, Q, eigs)) {
    out.push_back({Q, std::move(eigs)});
    return;
  }
  if (depth > kMaxDepth)
    throw SpectralResolutionError("joint eigensplit exceeded the recursion depth cap");

  long m = Q.cols();
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(m, m);
  for (const auto& T : ops) {
    cplx c(rng.sym(), rng.sym());
    A += c * (Q.adjoint() * (T * Q));
  }
  Eigen::MatrixXcd H = A + A.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  if (es.info() != Eigen::Success)
    throw SpectralResolutionError("eigen decomposition failed to converge");
  const auto& w = es.eigenvalues();
  double scale = std::max(1.0, std::max(std::abs(w(0)), std::abs(w(m - 1))));

  std::vector<std::pair<long, long>> clusters;  // [begin, end)
  long begin = 0;
  for (long i = 1; i <= m; ++i) {
    if (i == m) {
      clusters.push_back({begin, m});
      break;
    }
    double d = w(i) - w(i - 1);
    if (d <= tol * scale) continue;
    if (d < gap * scale)
      throw SpectralResolutionError("eigenvalue gap " + std::to_string(d) +
                                    " is inside the forbidden band; spectral resolution is ambiguous");
    clusters.push_back({begin, i});
    begin = i;
  }

  if (clusters.size() == 1) {
    // The random combination failed to separate; try another draw.
    split_recursive(ops, Q, rng, tol, gap, depth + 1, out);
    return;
  }
  for (auto [b, e] : clusters) {
    Eigen::MatrixXcd sub = Q * es.eigenvectors().middleCols(b, e - b);
    split_recursive(ops, sub, rng, tol, gap, depth + 1, out);
  }
}

}  // namespace

std::vector<SpectralComponent> joint_eigensplit(const std::vector<Eigen::MatrixXcd>& ops,
                                                uint64_t seed, double tol, double gap) {
  if (ops.empty()) throw UsageError("joint_eigensplit needs at least one operator");
  long m = ops[0].rows();
  for (const auto& T : ops)
    if (T.rows() != m || T.cols() != m) throw UsageError("operators must be square and same-sized");
  SplitMix64 rng(mix_seed(seed, 0x73706c6974ULL));
  std::vector<SpectralComponent> out;
  Eigen::MatrixXcd Q = Eigen::MatrixXcd::Identity(m, m);
  split_recursive(ops, Q, rng, tol, gap, 0, out);
  long total = 0;
  for (const auto& c : out) total += c.basis.cols();
  if (total != m) throw VerificationError("joint eigensplit lost dimensions");
  return out;
}

double max_commutator_norm(const std::vector<Eigen::MatrixXcd>& ops) {
  if (ops.size() < 2) return 0.0;
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i + 1; j < ops.size(); ++j) pairs.push_back({int(i), int(j)});
  std::vector<double> best(size_t(configured_threads()), 0.0);
  parallel_chunks(long(pairs.size()), [&](int t, long b, long e) {
    double m = 0.0;
    for (long k = b; k < e; ++k) {
      auto [i, j] = pairs[size_t(k)];
      m = std::max(m, (ops[size_t(i)] * ops[size_t(j)] - ops[size_t(j)] * ops[size_t(i)]).norm());
    }
    best[size_t(t)] = std::max(best[size_t(t)], m);
  });
  double m = 0.0;
  for (double v : best) m = std::max(m, v);
  return m;
}

}  // namespace glnc
