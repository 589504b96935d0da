#include "glnconverse/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace glnc {

namespace {

long checked_pow(long q, int e) {
  __int128 v = 1;
  for (int i = 0; i < e; ++i) {
    v *= q;
    if (v > (__int128(1) << 62)) throw UsageError("group order overflows");
  }
  return long(v);
}

}  // namespace

long gl_order(int n, long q) {
  if (n < 1) throw UsageError("rank must be positive");
  __int128 v = 1;
  long qn = checked_pow(q, n);
  long qi = 1;
  for (int i = 0; i < n; ++i) {
    v *= (qn - qi);
    if (v > (__int128(1) << 62)) throw UsageError("group order overflows");
    qi *= q;
  }
  return long(v);
}

long unitriangular_order(int n, long q) {
  return checked_pow(q, n * (n - 1) / 2);
}

long mirabolic_order(int n, long q) {
  if (n < 1) throw UsageError("rank must be positive");
  if (n == 1) return 1;
  __int128 v = __int128(gl_order(n - 1, q)) * checked_pow(q, n - 1);
  if (v > (__int128(1) << 62)) throw UsageError("group order overflows");
  return long(v);
}

long qgroup_order(int n, long q) {
  __int128 v = __int128(q - 1) * mirabolic_order(n, q);
  if (v > (__int128(1) << 62)) throw UsageError("group order overflows");
  return long(v);
}

Mat alpha_power(int n, int r) {
  Mat m;
  m.n = n;
  int rr = ((r % n) + n) % n;
  for (int i = 0; i < n; ++i) m.at(i, (i + rr) % n) = 1;
  return m;
}

Mat w_long(int n) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
  return m;
}

Mat w_nr(int n, int r) {
  if (r < 0 || r >= n) throw UsageError("w_nr needs 0 <= r < n");
  Mat m;
  m.n = n;
  for (int i = 0; i < r; ++i) m.at(i, i) = 1;
  for (int i = 0; i < n - r; ++i) m.at(r + i, n - 1 - i) = 1;
  return m;
}

Mat d_alt(const Field& f, int n) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = (i % 2 == 0) ? 1 : uint32_t(f.minus_one());
  return m;
}

Mat scalar_mat(const Field& f, int n, long c) {
  if (c <= 0 || c >= f.q()) throw UsageError("scalar must be a nonzero field element");
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = uint32_t(c);
  return m;
}

bool is_unitriangular(const Mat& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j <= i; ++j)
      if (m.at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool is_upper_triangular(const Mat& m) {
  for (int i = 0; i < m.n; ++i) {
    if (m.at(i, i) == 0) return false;
    for (int j = 0; j < i; ++j)
      if (m.at(i, j) != 0) return false;
  }
  return true;
}

bool is_mirabolic(const Mat& m) {
  for (int j = 0; j + 1 < m.n; ++j)
    if (m.at(m.n - 1, j) != 0) return false;
  return m.at(m.n - 1, m.n - 1) == 1;
}

bool is_qsubgroup(const Mat& m) {
  for (int j = 0; j + 1 < m.n; ++j)
    if (m.at(m.n - 1, j) != 0) return false;
  return m.at(m.n - 1, m.n - 1) != 0;
}

bool is_scalar(const Mat& m) {
  uint32_t c = m.at(0, 0);
  if (c == 0) return false;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j) != (i == j ? c : 0u)) return false;
  return true;
}

Mat mat_from_key(uint64_t key, long q, int n) {
  Mat m;
  m.n = n;
  for (int idx = n * n - 1; idx >= 0; --idx) {
    m.a[size_t(idx)] = uint32_t(key % uint64_t(q));
    key /= uint64_t(q);
  }
  return m;
}

long mat_det(const Field& f, const Mat& m) {
  Mat w = m;
  int n = w.n;
  long det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (w.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
      det = f.neg(det);
    }
    long pv = w.at(col, col);
    det = f.mul(det, pv);
    long pvinv = f.inv(pv);
    for (int r = col + 1; r < n; ++r) {
      long factor = f.mul(w.at(r, col), pvinv);
      if (factor == 0) continue;
      for (int j = col; j < n; ++j)
        w.at(r, j) = uint32_t(f.sub(w.at(r, j), f.mul(factor, w.at(col, j))));
    }
  }
  return det;
}

Mat mat_inv(const Field& f, const Mat& m) {
  int n = m.n;
  Mat w = m;
  Mat out = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (w.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) throw UsageError("matrix is singular");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(out.at(piv, j), out.at(col, j));
      }
    long pvinv = f.inv(w.at(col, col));
    for (int j = 0; j < n; ++j) {
      w.at(col, j) = uint32_t(f.mul(w.at(col, j), pvinv));
      out.at(col, j) = uint32_t(f.mul(out.at(col, j), pvinv));
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      long factor = w.at(r, col);
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        w.at(r, j) = uint32_t(f.sub(w.at(r, j), f.mul(factor, w.at(col, j))));
        out.at(r, j) = uint32_t(f.sub(out.at(r, j), f.mul(factor, out.at(col, j))));
      }
    }
  }
  return out;
}

namespace {

// Row-recursive enumeration in ascending key order: at each depth pick the
// next row among vectors outside the span of the rows chosen so far.
struct Enumerator {
  const Field& f;
  int n;
  long q;
  long nvec;                        // q^n
  std::vector<uint8_t> in_span;     // over row keys
  std::vector<uint32_t> row_digits; // nvec * n, decoded rows
  std::vector<long> span;           // keys currently in span (size q^depth)
  std::vector<long> rows;           // chosen row keys
  std::vector<uint32_t>* data;
  std::vector<uint64_t>* keys;
  uint64_t row_weight;              // q^{n(n-1)} multiplier unused; keys built digitwise

  long vec_add_scaled(long a, long b, long c) const {
    // key of row(a) + c * row(b)
    const uint32_t* ra = &row_digits[size_t(a) * n];
    const uint32_t* rb = &row_digits[size_t(b) * n];
    long key = 0;
    for (int j = 0; j < n; ++j) {
      long v = f.add(ra[j], f.mul(c, rb[j]));
      key = key * q + v;
    }
    return key;
  }

  void emit() {
    uint64_t key = 0;
    for (int i = 0; i < n; ++i) {
      const uint32_t* r = &row_digits[size_t(rows[size_t(i)]) * n];
      for (int j = 0; j < n; ++j) {
        data->push_back(r[j]);
        key = key * uint64_t(q) + r[j];
      }
    }
    keys->push_back(key);
  }

  void recurse(int depth) {
    if (depth == n) {
      emit();
      return;
    }
    for (long rk = 1; rk < nvec; ++rk) {
      if (in_span[size_t(rk)]) continue;
      size_t span_mark = span.size();
      for (size_t s = 0, sz = span.size(); s < sz; ++s)
        for (long c = 1; c < q; ++c) {
          long nk = vec_add_scaled(span[s], rk, c);
          if (!in_span[size_t(nk)]) {
            in_span[size_t(nk)] = 1;
            span.push_back(nk);
          }
        }
      rows.push_back(rk);
      recurse(depth + 1);
      rows.pop_back();
      for (size_t s = span_mark; s < span.size(); ++s) in_span[size_t(span[s])] = 0;
      span.resize(span_mark);
    }
  }
};

}  // namespace

GroupContext::GroupContext(const Field& f, int n) : field_(f), n_(n), q_(f.q()) {
  if (n < 1 || n > kMaxRank) throw UsageError("rank out of range");
  n2_ = n * n;
  long order = gl_order(n, q_);
  if (order > kMaxEnumeration)
    throw UsageError("group order " + std::to_string(order) +
                     " exceeds the enumeration bound " + std::to_string(kMaxEnumeration));

  long nvec = checked_pow(q_, n);
  Enumerator en{field_, n, q_, nvec, {}, {}, {}, {}, &data_, &keys_, 0};
  en.in_span.assign(size_t(nvec), 0);
  en.row_digits.resize(size_t(nvec) * n);
  for (long rk = 0; rk < nvec; ++rk) {
    long v = rk;
    for (int j = n - 1; j >= 0; --j) {
      en.row_digits[size_t(rk) * n + j] = uint32_t(v % q_);
      v /= q_;
    }
  }
  en.in_span[0] = 1;
  en.span.push_back(0);
  data_.reserve(size_t(order) * n2_);
  keys_.reserve(size_t(order));
  en.recurse(0);

  if (long(keys_.size()) != order)
    throw VerificationError("enumeration does not match the closed-form order");
  for (size_t i = 1; i < keys_.size(); ++i)
    if (keys_[i - 1] >= keys_[i])
      throw VerificationError("enumeration is not in ascending key order");

  long table_size = checked_pow(q_, n2_);
  key_table_.assign(size_t(table_size), -1);
  for (size_t i = 0; i < keys_.size(); ++i) key_table_[size_t(keys_[i])] = int32_t(i);

  id_ = try_index(glnc::identity(n));
  if (id_ < 0) throw VerificationError("identity missing from enumeration");

  inv_.resize(keys_.size());
  for (long i = 0; i < size(); ++i) {
    long j = try_index(mat_inv(field_, elem(i)));
    if (j < 0) throw VerificationError("inverse missing from enumeration");
    inv_[size_t(i)] = int32_t(j);
  }

  for (long i = 0; i < size(); ++i)
    if (is_unitriangular(elem(i))) unip_.push_back(int32_t(i));
  if (long(unip_.size()) != unitriangular_order(n, q_))
    throw VerificationError("unitriangular count does not match the closed form");
}

Mat GroupContext::elem(long i) const {
  Mat m;
  m.n = n_;
  const uint32_t* src = &data_[size_t(i) * n2_];
  for (int k = 0; k < n2_; ++k) m.a[size_t(k)] = src[k];
  return m;
}

long GroupContext::try_index(const Mat& m) const {
  if (m.n != n_) return -1;
  uint64_t key = 0;
  for (int k = 0; k < n2_; ++k) {
    if (m.a[size_t(k)] >= uint32_t(q_)) return -1;
    key = key * uint64_t(q_) + m.a[size_t(k)];
  }
  return key_table_[size_t(key)];
}

long GroupContext::index(const Mat& m) const {
  long i = try_index(m);
  if (i < 0) throw UsageError("matrix is not an invertible member of the group");
  return i;
}

long GroupContext::mul(long a, long b) const {
  const uint32_t* A = &data_[size_t(a) * n2_];
  const uint32_t* B = &data_[size_t(b) * n2_];
  uint64_t key = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      long s = 0;
      for (int k = 0; k < n_; ++k) s = field_.add(s, field_.mul(A[i * n_ + k], B[k * n_ + j]));
      key = key * uint64_t(q_) + uint64_t(s);
    }
  long r = key_table_[size_t(key)];
  if (r < 0) throw VerificationError("product fell outside the group");
  return r;
}

int GroupContext::psi_exponent(const Mat& u) const {
  if (!is_unitriangular(u)) throw UsageError("psi_n needs a unitriangular argument");
  long s = 0;
  for (int i = 0; i + 1 < n_; ++i) s = field_.add(s, u.at(i, i + 1));
  return int(field_.trace(s));
}

CosetIndex build_psi_cosets(const GroupContext& ctx) {
  long N = ctx.size();
  CosetIndex ci;
  ci.rep_of.assign(size_t(N), -1);
  ci.cocycle.assign(size_t(N), -1);
  const auto& U = ctx.unipotent();
  std::vector<int> uexp(U.size());
  for (size_t k = 0; k < U.size(); ++k) uexp[k] = ctx.psi_exponent(long(U[k]));
  for (long g = 0; g < N; ++g) {
    if (ci.rep_of[size_t(g)] >= 0) continue;
    int32_t rid = int32_t(ci.reps.size());
    ci.reps.push_back(int32_t(g));
    for (size_t k = 0; k < U.size(); ++k) {
      long h = ctx.mul(U[k], g);
      if (ci.rep_of[size_t(h)] >= 0) {
        if (ci.rep_of[size_t(h)] != rid)
          throw VerificationError("coset scan produced inconsistent membership");
        continue;
      }
      ci.rep_of[size_t(h)] = rid;
      ci.cocycle[size_t(h)] = int32_t(uexp[k]);
    }
  }
  ci.identity_coset = ci.rep_of[size_t(ctx.identity())];
  if (ci.cocycle[size_t(ctx.identity())] != 0)
    throw VerificationError("identity coset carries a nonzero cocycle");
  for (long g = 0; g < N; ++g)
    if (ci.rep_of[size_t(g)] < 0) throw VerificationError("coset scan missed an element");
  return ci;
}

}  // namespace glnc
