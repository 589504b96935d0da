#pragma once

#include <cstdint>
#include <vector>

#include "glnconverse/field.hpp"
#include "glnconverse/matrix.hpp"

namespace glnc {

// Full element lists are built only up to this group order; anything larger
// is rejected with a UsageError.  At the bound the flat element buffer stays
// within a few hundred MB (n^2 words per element).
inline constexpr long kMaxEnumeration = 10'000'000;

// Closed-form orders.  All throw UsageError on overflow past 2^62.
long gl_order(int n, long q);             // prod_{i<n} (q^n - q^i)
long unitriangular_order(int n, long q);  // q^{n(n-1)/2}
long mirabolic_order(int n, long q);      // |GL_{n-1}| * q^{n-1}
long qgroup_order(int n, long q);         // (q-1) * mirabolic

// Named matrices.  Entries are field handles (0 and 1 mean the same thing in
// every field; d_alt needs the field to spell -1).
Mat alpha_power(int n, int r);       // r-th power of the n-cycle alpha
Mat w_long(int n);                   // antidiagonal 1s
Mat w_nr(int n, int r);              // block diag(I_r, w_long(n-r))
Mat d_alt(const Field& f, int n);    // diag(+1, -1, +1, ...)
Mat scalar_mat(const Field& f, int n, long c);

// Subgroup membership predicates.
bool is_unitriangular(const Mat& m);
bool is_upper_triangular(const Mat& m);
bool is_mirabolic(const Mat& m);      // last row (0, ..., 0, 1)
bool is_qsubgroup(const Mat& m);      // last row (0, ..., 0, c), c != 0
bool is_scalar(const Mat& m);

// The finite group GL_n(F_q), fully enumerated.  Elements are indexed
// 0..size()-1 in ascending row-major key order; the index is the currency
// everywhere downstream (multiplication, inversion, coset data).
class GroupContext {
 public:
  GroupContext(const Field& f, int n);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  long q() const { return q_; }
  long size() const { return long(keys_.size()); }

  Mat elem(long i) const;
  uint64_t key_of(long i) const { return keys_[size_t(i)]; }
  const uint32_t* elem_data(long i) const { return &data_[size_t(i) * n2_]; }

  // Index of a matrix; UsageError if it is not an invertible n x n matrix
  // over this field.  try_index returns -1 instead of throwing.
  long index(const Mat& m) const;
  long try_index(const Mat& m) const;

  long mul(long a, long b) const;
  long inv(long a) const { return inv_[size_t(a)]; }
  long identity() const { return id_; }

  const std::vector<int32_t>& unipotent() const { return unip_; }
  long unipotent_order() const { return long(unip_.size()); }

  // Exact exponent e in [0, p) with psi_n(u) = exp(2*pi*i*e/p); requires a
  // unitriangular argument.
  int psi_exponent(const Mat& u) const;
  int psi_exponent(long i) const { return psi_exponent(elem(i)); }

 private:
  Field field_;
  int n_;
  int n2_;
  long q_;
  std::vector<uint32_t> data_;       // n*n entries per element
  std::vector<uint64_t> keys_;       // ascending
  std::vector<int32_t> key_table_;   // size q^{n^2}, -1 for non-members
  std::vector<int32_t> inv_;
  std::vector<int32_t> unip_;
  long id_ = -1;
};

// Left translates U*g with the psi cocycle: every element factors as
// h = u * reps[rep_of[h]] with psi_n(u) = exp(2*pi*i*cocycle[h]/p).
// Representatives are the least element of each coset, in ascending order.
struct CosetIndex {
  std::vector<int32_t> rep_of;
  std::vector<int32_t> cocycle;
  std::vector<int32_t> reps;
  int32_t identity_coset = -1;
  long size() const { return long(reps.size()); }
};

CosetIndex build_psi_cosets(const GroupContext& ctx);

}  // namespace glnc
