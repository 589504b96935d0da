#pragma once

// Finite field arithmetic for F_q, q = p^k, with the additive and
// multiplicative character plumbing needed by the higher layers.
//
// Elements are handles: integers in [0, q). The handle encodes the
// coefficient vector of the residue polynomial in base p, low degree first,
// so the prime subfield occupies handles 0..p-1. All arithmetic routes
// through log/exp tables built from a verified generator, which keeps every
// character value an exact root of unity described by an integer exponent.

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace glnc {

using cplx = std::complex<double>;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpectralResolutionError : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

// Largest supported field size. Tables are O(q), so this is deliberately
// generous compared to the matrix layer's needs.
inline constexpr long kMaxFieldSize = 1 << 20;

struct FieldElement {
  long value = 0;  // handle in [0, q)
  std::vector<int> coeffs;  // base-p digits, coeffs[i] multiplies x^i
};

class Field {
 public:
  Field() = default;

  long p() const { return impl_->p; }
  int k() const { return impl_->k; }
  long q() const { return impl_->q; }
  // Monic irreducible modulus, coefficients low to high, size k+1.
  const std::vector<long>& modulus() const { return impl_->modulus; }
  long generator() const { return impl_->generator; }

  long add(long a, long b) const;
  long sub(long a, long b) const;
  long neg(long a) const;
  long mul(long a, long b) const;
  long inv(long a) const;
  long pow(long a, long e) const;
  // Trace to the prime subfield, returned as an integer in [0, p).
  long trace(long a) const { return impl_->trace[check(a)]; }
  // Discrete log base the generator; a must be nonzero.
  long dlog(long a) const;
  // generator^e for any integer e (reduced mod q-1).
  long gpow(long e) const;

  long minus_one() const { return impl_->p == 2 ? 1 : neg(1); }
  FieldElement element(long a) const;
  std::string describe() const;

  bool operator==(const Field& o) const { return impl_ == o.impl_; }

 private:
  friend Field make_field(long p, int k);
  struct Impl {
    long p = 0, q = 0;
    int k = 0;
    std::vector<long> modulus;
    long generator = 0;
    std::vector<long> exp;    // exp[m] = generator^m, m in [0, q-1)
    std::vector<long> log;    // log[a] for a != 0
    std::vector<long> trace;  // trace[a] in [0, p)
  };
  std::shared_ptr<const Impl> impl_;
  long check(long a) const {
    if (!impl_ || a < 0 || a >= impl_->q) throw UsageError("field element handle out of range");
    return a;
  }
};

// Builds F_{p^k} with the lexicographically least monic irreducible modulus
// (coefficient vectors compared as base-p integers, constant term least
// significant) and the least generator of the multiplicative group.
Field make_field(long p, int k);

// The canonical additive character psi(x) = exp(2*pi*i * Tr(x) / p), or its
// conjugate. Exponents are exact integers mod p.
class AdditiveCharacter {
 public:
  AdditiveCharacter() = default;
  AdditiveCharacter(Field f, bool conjugated);

  const Field& field() const { return field_; }
  bool conjugated() const { return conj_; }
  // Exponent t with value(x) = exp(2*pi*i*t/p), t in [0, p).
  long exponent(long x) const;
  cplx value(long x) const;
  cplx unit(long t) const;  // exp(2*pi*i*t/p) for any integer t
  AdditiveCharacter bar() const { return AdditiveCharacter(field_, !conj_); }

 private:
  Field field_;
  bool conj_ = false;
  std::vector<cplx> roots;  // p-th roots of unity
};

AdditiveCharacter canonical_psi(const Field& f);

// Character of F_q^x determined by an exponent e mod q-1:
// chi(g^m) = exp(2*pi*i * e * m / (q-1)).
class MultiplicativeCharacter {
 public:
  MultiplicativeCharacter() = default;
  MultiplicativeCharacter(Field f, long e);

  const Field& field() const { return field_; }
  long exponent() const { return e_; }
  bool trivial() const { return e_ == 0; }
  cplx value(long x) const;  // x must be nonzero

 private:
  Field field_;
  long e_ = 0;
};

// All q-1 characters of F_q^x, trivial character first, then by exponent.
std::vector<MultiplicativeCharacter> mult_characters(const Field& f);

struct FrobeniusOrbit {
  std::vector<long> exponents;  // orbit of e under e -> |base| * e mod (|field|-1)
  bool regular = false;         // orbit size equals the extension degree
};

// Orbits of characters of field^x under the Frobenius of the base field.
// Requires field to be an extension of base (same p, base.k | field.k).
std::vector<FrobeniusOrbit> frobenius_orbits(const Field& field, const Field& base);

// Gauss sum of (chi, psi); |gauss_sum| = sqrt(q) for nontrivial chi.
cplx gauss_sum(const MultiplicativeCharacter& chi, const AdditiveCharacter& psi);

}  // namespace glnc
