#include "glnconverse/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace glnc {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p: coefficient vectors, low degree first, normalized
// (no trailing zeros). Handles <-> coefficient vectors via base-p digits.

std::vector<int> handle_digits(long a, long p, int k) {
  std::vector<int> d(k, 0);
  for (int i = 0; i < k; ++i) {
    d[i] = int(a % p);
    a /= p;
  }
  return d;
}

long digits_handle(const std::vector<int>& d, long p, int k) {
  long a = 0;
  for (int i = k - 1; i >= 0; --i) a = a * p + d[size_t(i)];
  return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<long>& mod, long p) {
  int k = int(mod.size()) - 1;
  std::vector<long> prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += long(a[i]) * b[j];
  }
  // reduce by the monic modulus
  for (int d = int(prod.size()) - 1; d >= k; --d) {
    long c = prod[size_t(d)] % p;
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) {
      prod[size_t(d - k + i)] -= c * mod[size_t(i)];
    }
  }
  std::vector<int> out(size_t(k), 0);
  for (int i = 0; i < k; ++i) {
    long c = prod[size_t(i)] % p;
    if (c < 0) c += p;
    out[size_t(i)] = int(c);
  }
  return out;
}

// Irreducibility over F_p by trial of all monic divisors up to degree k/2,
// encoded as handles. Fine at these sizes.
bool poly_irreducible(const std::vector<long>& mod, long p) {
  int k = int(mod.size()) - 1;
  if (k == 1) return true;
  // x^d + lower terms, d from 1 to k/2; divisor candidates as digit vectors
  for (int d = 1; 2 * d <= k; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long low = 0; low < count; ++low) {
      // candidate divisor: monic of degree d
      std::vector<long> div(size_t(d) + 1, 0);
      long t = low;
      for (int i = 0; i < d; ++i) {
        div[size_t(i)] = t % p;
        t /= p;
      }
      div[size_t(d)] = 1;
      // long-divide mod by div, check remainder
      std::vector<long> rem(mod.begin(), mod.end());
      for (int top = k; top >= d; --top) {
        long c = rem[size_t(top)] % p;
        if (c < 0) c += p;
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i) {
          rem[size_t(top - d + i)] = (rem[size_t(top - d + i)] - c * div[size_t(i)]) % p;
        }
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) {
        long c = rem[size_t(i)] % p;
        if (c != 0) {
          zero = false;
          break;
        }
      }
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

Field make_field(long p, int k) {
  if (!is_prime(p)) throw UsageError("p must be prime, got " + std::to_string(p));
  if (k < 1) throw UsageError("k must be >= 1");
  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw UsageError("field too large: p^k exceeds supported bound");
  }

  auto impl = std::make_shared<Field::Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = q;

  // Lexicographically least monic irreducible modulus: scan the lower
  // coefficients as a base-p counter, constant term least significant.
  {
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    bool found = false;
    for (long low = 0; low < count && !found; ++low) {
      std::vector<long> mod(size_t(k) + 1, 0);
      long t = low;
      for (int i = 0; i < k; ++i) {
        mod[size_t(i)] = t % p;
        t /= p;
      }
      mod[size_t(k)] = 1;
      if (poly_irreducible(mod, p)) {
        impl->modulus = mod;
        found = true;
      }
    }
    if (!found) throw VerificationError("no irreducible modulus found");
  }

  // Multiplication table access for the search below: multiply handles via
  // digit vectors mod the modulus.
  auto mul_handles = [&](long a, long b) {
    auto da = handle_digits(a, p, k);
    auto db = handle_digits(b, p, k);
    auto dc = poly_mul_mod(da, db, impl->modulus, p);
    return digits_handle(dc, p, k);
  };

  // Least generator: order of candidate g must be exactly q-1. Verify by
  // checking g^((q-1)/r) != 1 for every prime r | q-1.
  std::vector<long> prime_divs;
  {
    long m = q - 1;
    for (long r = 2; r * r <= m; ++r) {
      if (m % r == 0) {
        prime_divs.push_back(r);
        while (m % r == 0) m /= r;
      }
    }
    if (m > 1) prime_divs.push_back(m);
  }
  auto pow_handle = [&](long a, long e) {
    long res = 1, base = a;
    while (e > 0) {
      if (e & 1) res = mul_handles(res, base);
      base = mul_handles(base, base);
      e >>= 1;
    }
    return res;
  };
  long gen = 0;
  for (long g = 2; g < q; ++g) {
    bool ok = true;
    for (long r : prime_divs) {
      if (pow_handle(g, (q - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = g;
      break;
    }
  }
  if (gen == 0 && q == 2) gen = 1;  // F_2: the unit group is trivial
  if (gen == 0) throw VerificationError("no generator found");
  impl->generator = gen;

  // Log/exp tables from the generator.
  impl->exp.assign(size_t(q - 1), 0);
  impl->log.assign(size_t(q), -1);
  {
    long cur = 1;
    for (long m = 0; m < q - 1; ++m) {
      impl->exp[size_t(m)] = cur;
      if (impl->log[size_t(cur)] != -1)
        throw VerificationError("generator order check failed: repeated power");
      impl->log[size_t(cur)] = m;
      cur = mul_handles(cur, gen);
    }
    if (cur != 1) throw VerificationError("generator order check failed: g^(q-1) != 1");
  }

  // Trace table: Tr(a) = sum of a^(p^i), i = 0..k-1. The result lies in the
  // prime subfield, whose handles are 0..p-1.
  impl->trace.assign(size_t(q), 0);
  for (long a = 1; a < q; ++a) {
    long s = 0;  // accumulate as handle via digit-wise addition
    long frob = a;
    for (int i = 0; i < k; ++i) {
      // s += frob (handles add digit-wise mod p)
      long acc = 0, mult = 1, sa = s, sb = frob;
      for (int d = 0; d < k; ++d) {
        acc += ((sa % p + sb % p) % p) * mult;
        sa /= p;
        sb /= p;
        mult *= p;
      }
      s = acc;
      frob = pow_handle(frob, p);
    }
    if (s >= p) throw VerificationError("trace landed outside the prime subfield");
    impl->trace[size_t(a)] = s;
  }

  Field f;
  f.impl_ = std::move(impl);
  return f;
}

long Field::add(long a, long b) const {
  check(a);
  check(b);
  const long p = impl_->p;
  long acc = 0, mult = 1;
  for (int d = 0; d < impl_->k; ++d) {
    acc += ((a % p + b % p) % p) * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return acc;
}

long Field::sub(long a, long b) const { return add(a, neg(b)); }

long Field::neg(long a) const {
  check(a);
  const long p = impl_->p;
  long acc = 0, mult = 1;
  for (int d = 0; d < impl_->k; ++d) {
    long c = a % p;
    acc += (c == 0 ? 0 : p - c) * mult;
    a /= p;
    mult *= p;
  }
  return acc;
}

long Field::mul(long a, long b) const {
  check(a);
  check(b);
  if (a == 0 || b == 0) return 0;
  long m = impl_->log[size_t(a)] + impl_->log[size_t(b)];
  long ord = impl_->q - 1;
  if (m >= ord) m -= ord;
  return impl_->exp[size_t(m)];
}

long Field::inv(long a) const {
  check(a);
  if (a == 0) throw UsageError("inverse of zero");
  long ord = impl_->q - 1;
  long m = (ord - impl_->log[size_t(a)]) % ord;
  return impl_->exp[size_t(m)];
}

long Field::pow(long a, long e) const {
  check(a);
  if (a == 0) {
    if (e < 0) throw UsageError("inverse of zero");
    return e == 0 ? 1 : 0;
  }
  long ord = impl_->q - 1;
  long m = (impl_->log[size_t(a)] % ord) * (e % ord) % ord;
  if (m < 0) m += ord;
  return impl_->exp[size_t(m)];
}

long Field::dlog(long a) const {
  check(a);
  if (a == 0) throw UsageError("dlog of zero");
  return impl_->log[size_t(a)];
}

long Field::gpow(long e) const {
  long ord = impl_->q - 1;
  long m = e % ord;
  if (m < 0) m += ord;
  return impl_->exp[size_t(m)];
}

FieldElement Field::element(long a) const {
  check(a);
  FieldElement el;
  el.value = a;
  el.coeffs = handle_digits(a, impl_->p, impl_->k);
  return el;
}

std::string Field::describe() const {
  std::string s = "F_" + std::to_string(impl_->q) + " = F_" + std::to_string(impl_->p);
  if (impl_->k > 1) {
    s += "[x]/(";
    bool first = true;
    for (int i = impl_->k; i >= 0; --i) {
      long c = impl_->modulus[size_t(i)];
      if (c == 0) continue;
      if (!first) s += " + ";
      first = false;
      if (i == 0 || c != 1) s += std::to_string(c);
      if (i >= 1) s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    s += ")";
  }
  s += ", generator " + std::to_string(impl_->generator);
  return s;
}

AdditiveCharacter::AdditiveCharacter(Field f, bool conjugated)
    : field_(std::move(f)), conj_(conjugated) {
  roots.resize(size_t(field_.p()));
  for (long t = 0; t < field_.p(); ++t)
    roots[size_t(t)] = std::polar(1.0, kTau * double(t) / double(field_.p()));
}

long AdditiveCharacter::exponent(long x) const {
  long t = field_.trace(x);
  if (conj_ && t != 0) t = field_.p() - t;
  return t;
}

cplx AdditiveCharacter::value(long x) const { return roots[size_t(exponent(x))]; }

cplx AdditiveCharacter::unit(long t) const {
  long p = field_.p();
  long m = t % p;
  if (m < 0) m += p;
  return roots[size_t(m)];
}

AdditiveCharacter canonical_psi(const Field& f) { return AdditiveCharacter(f, false); }

MultiplicativeCharacter::MultiplicativeCharacter(Field f, long e) : field_(std::move(f)) {
  long ord = field_.q() - 1;
  e_ = ord == 0 ? 0 : ((e % ord) + ord) % ord;
}

cplx MultiplicativeCharacter::value(long x) const {
  if (x == 0) throw UsageError("multiplicative character at zero");
  long ord = field_.q() - 1;
  if (ord == 0) return 1.0;
  long m = field_.dlog(x);
  return std::polar(1.0, kTau * double(e_ % ord) * double(m) / double(ord));
}

std::vector<MultiplicativeCharacter> mult_characters(const Field& f) {
  std::vector<MultiplicativeCharacter> out;
  for (long e = 0; e < std::max<long>(f.q() - 1, 1); ++e) out.emplace_back(f, e);
  return out;
}

std::vector<FrobeniusOrbit> frobenius_orbits(const Field& field, const Field& base) {
  if (field.p() != base.p() || field.k() % base.k() != 0)
    throw UsageError("frobenius_orbits: field must extend base");
  const long qb = base.q();
  const long ord = field.q() - 1;
  const int degree = field.k() / base.k();
  std::vector<char> seen(size_t(std::max<long>(ord, 1)), 0);
  std::vector<FrobeniusOrbit> out;
  for (long e = 0; e < ord; ++e) {
    if (seen[size_t(e)]) continue;
    FrobeniusOrbit orb;
    long cur = e;
    do {
      seen[size_t(cur)] = 1;
      orb.exponents.push_back(cur);
      cur = cur * qb % ord;
    } while (cur != e);
    orb.regular = int(orb.exponents.size()) == degree;
    out.push_back(std::move(orb));
  }
  if (ord == 0) {
    FrobeniusOrbit orb;
    orb.exponents.push_back(0);
    orb.regular = degree == 1;
    out.push_back(std::move(orb));
  }
  return out;
}

cplx gauss_sum(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi) {
  const Field& f = chi.field();
  cplx s = 0.0;
  for (long x = 1; x < f.q(); ++x) s += chi.value(x) * psi.value(x);
  return s;
}

}  // namespace glnc
