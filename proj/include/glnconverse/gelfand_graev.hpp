#pragma once

#include <Eigen/Dense>
#include <vector>

#include "glnconverse/group.hpp"
#include "glnconverse/spectral.hpp"

namespace glnc {

// Hecke diagonalization runs on the induced module only up to this many
// psi-cosets; larger configurations are rejected with a UsageError.
inline constexpr long kMaxModuleDim = 20000;

// A double coset U g U together with the exact character exponents of its
// members: h = u * rep * v carries exponent (psi(u) + psi(v)) mod p, rebased
// so the representative carries 0.  The coset is relevant when the exponent
// is well defined (no factorization conflict).
struct DoubleCoset {
  int32_t rep;
  std::vector<int32_t> members;
  std::vector<int32_t> exps;
  bool relevant;
};

struct DoubleCosetSet {
  std::vector<DoubleCoset> relevant;  // ascending by representative
  long total;                         // count of all U\G/U double cosets
};

DoubleCosetSet relevant_double_cosets(const GroupContext& ctx);

// Normalized convolution operators T_D on the induced module, one per
// relevant double coset; the operator of the trivial coset U is the
// identity.  conjugated = true builds the bar-psi model.
std::vector<Eigen::MatrixXcd> hecke_operators(const GroupContext& ctx, const CosetIndex& ci,
                                              const DoubleCosetSet& dcs, bool conjugated);

struct GenericComponent {
  int dim;
  std::vector<cplx> fingerprint;  // eigenvalue per relevant double coset
  Eigen::MatrixXcd basis;         // d x dim, orthonormal columns
  Eigen::VectorXcd bessel;        // Bessel coefficients over the psi-cosets
  bool cuspidal;
  std::vector<cplx> omega;        // central character at c = 1 .. q-1
  long omega_exponent;            // exponent of the matching character of F_q^x
};

struct Inventory {
  const GroupContext* ctx;
  bool conjugated;
  CosetIndex cosets;
  DoubleCosetSet dcosets;
  std::vector<GenericComponent> comps;  // canonical order
  double max_commutator;
};

// Full decomposition of the induced module: builds the coset data, the
// Hecke family (validated commutative), splits it, computes Bessel vectors,
// cuspidality, and central characters, and sorts the components canonically
// by (dim, fingerprint rounded at 1e-6).
Inventory build_inventory(const GroupContext& ctx, bool conjugated = false, uint64_t seed = 7);

// Value of the normalized Bessel function of component comp at element g.
cplx bessel_value(const Inventory& inv, int comp, long g);

// The same, tabulated over the whole group.
std::vector<cplx> bessel_table(const Inventory& inv, int comp);

long scalar_index(const GroupContext& ctx, long c);  // index of c * I

// Independent counting oracle: cuspidal components correspond to the
// size-n Frobenius orbits of characters of F_{q^n}^x, and the central
// character is the restriction to F_q^x (exponent mod q-1).
long cuspidal_count_oracle(const Field& base, int n);
std::vector<long> cuspidal_omega_exponents_oracle(const Field& base, int n);  // sorted

}  // namespace glnc
