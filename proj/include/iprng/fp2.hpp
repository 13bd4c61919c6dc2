#pragma once

#include "iprng/field.hpp"

namespace iprng {

/// An element u + v*w of GF(N^2) = Z_N[t]/(t^2 - c), where c is the
/// modulus's smallest non-residue. N must stay below 2^32 so that the
/// group order N^2 - 1 fits in 64 bits.
class Fp2Elem {
 public:
  Fp2Elem(const FpElem& c0, const FpElem& c1);

  static Fp2Elem from_subfield(const FpElem& u);
  static Fp2Elem zero(const PrimeModulus& m);
  static Fp2Elem one(const PrimeModulus& m);

  const FpElem& c0() const { return c0_; }
  const FpElem& c1() const { return c1_; }
  const PrimeModulus& modulus() const { return c0_.modulus(); }
  FpElem nonresidue() const { return find_nonresidue(modulus()); }

  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
  bool in_subfield() const { return c1_.is_zero(); }

  friend Fp2Elem operator+(const Fp2Elem& a, const Fp2Elem& b) {
    return Fp2Elem(a.c0_ + b.c0_, a.c1_ + b.c1_);
  }
  friend Fp2Elem operator-(const Fp2Elem& a, const Fp2Elem& b) {
    return Fp2Elem(a.c0_ - b.c0_, a.c1_ - b.c1_);
  }
  friend Fp2Elem operator*(const Fp2Elem& a, const Fp2Elem& b);
  Fp2Elem operator-() const { return Fp2Elem(-c0_, -c1_); }

  friend bool operator==(const Fp2Elem& a, const Fp2Elem& b) {
    return a.c0_ == b.c0_ && a.c1_ == b.c1_;
  }
  friend bool operator!=(const Fp2Elem& a, const Fp2Elem& b) { return !(a == b); }

 private:
  FpElem c0_, c1_;
};

/// Inverse via the conjugate: x^-1 = conj(x) / norm(x). Throws ZeroInverse.
Fp2Elem inv(const Fp2Elem& x);

Fp2Elem pow(const Fp2Elem& base, uint64_t exp);

/// The conjugation x -> x^N, computed as u + v*c^((N-1)/2)*w (which reduces
/// to u - v*w since c is a non-residue).
Fp2Elem frobenius(const Fp2Elem& x);

/// x * frobenius(x); always lands in the subfield.
FpElem norm(const Fp2Elem& x);

/// Order of x in GF(N^2)^x: start from N^2-1 and strip prime factors.
/// Throws ZeroOrder on 0.
uint64_t mult_order(const Fp2Elem& x);

/// Canonical ordering key: c1 * N + c0.
uint64_t encoding(const Fp2Elem& x);

uint64_t quadratic_per(const Fp2Elem& alpha, const Fp2Elem& beta, bool distinct);

}  // namespace iprng
