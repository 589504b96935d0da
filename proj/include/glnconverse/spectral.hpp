#pragma once

#include <Eigen/Dense>
#include <vector>

#include "glnconverse/field.hpp"

namespace glnc {

struct SpectralComponent {
  Eigen::MatrixXcd basis;         // m x dim, orthonormal columns
  std::vector<cplx> eigenvalues;  // scalar action, one per input operator
};

// Splits C^m into the joint eigenspaces of a commuting family of normal
// operators by recursive eigen-decomposition of random Hermitian
// combinations.  Eigenvalues are clustered at relative tolerance tol; any
// inter-cluster gap below the relative floor `gap` aborts with a
// SpectralResolutionError instead of guessing.  Every returned block is
// validated to carry a scalar action of every operator.
std::vector<SpectralComponent> joint_eigensplit(const std::vector<Eigen::MatrixXcd>& ops,
                                                uint64_t seed = 7, double tol = 1e-8,
                                                double gap = 1e-6);

// Largest Frobenius norm of [A,B] over all pairs of the family.
double max_commutator_norm(const std::vector<Eigen::MatrixXcd>& ops);

}  // namespace glnc
