#pragma once

// Small dense matrices over a finite field. Entries are field handles packed
// into a fixed-size array; a matrix of rank n over F_q has a perfect hash key
// obtained by reading the entries row-major as base-q digits. All group-level
// code indexes matrices through these keys.

#include <array>
#include <cstdint>
#include <vector>

#include "glnconverse/field.hpp"

namespace glnc {

inline constexpr int kMaxRank = 6;

struct Mat {
  int n = 0;
  std::array<uint32_t, kMaxRank * kMaxRank> a{};  // row-major field handles

  uint32_t& at(int i, int j) { return a[size_t(i * n + j)]; }
  uint32_t at(int i, int j) const { return a[size_t(i * n + j)]; }

  bool operator==(const Mat& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n * n; ++i)
      if (a[size_t(i)] != o.a[size_t(i)]) return false;
    return true;
  }
};

inline Mat identity(int n) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

inline Mat mat_mul(const Field& f, const Mat& x, const Mat& y) {
  Mat z;
  z.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      long s = 0;
      for (int k = 0; k < x.n; ++k) s = f.add(s, f.mul(long(x.at(i, k)), long(y.at(k, j))));
      z.at(i, j) = uint32_t(s);
    }
  return z;
}

inline Mat transpose(const Mat& x) {
  Mat z;
  z.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) z.at(i, j) = x.at(j, i);
  return z;
}

// Gauss-Jordan inverse; throws if singular.
Mat mat_inv(const Field& f, const Mat& x);

long mat_det(const Field& f, const Mat& x);

// Row-major base-q key. Fits in uint64 whenever q^(n*n) does; the group layer
// checks this before relying on it.
inline uint64_t mat_key(const Mat& m, long q) {
  uint64_t key = 0;
  for (int i = 0; i < m.n * m.n; ++i) key = key * uint64_t(q) + m.a[size_t(i)];
  return key;
}

Mat mat_from_key(uint64_t key, long q, int n);

}  // namespace glnc
