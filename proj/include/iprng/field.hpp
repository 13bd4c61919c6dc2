#pragma once

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "iprng/numtheory.hpp"

namespace iprng {

/// A prime modulus N > 3 together with the factorizations of N-1 and N+1
/// and the smallest quadratic non-residue. Immutable after construction;
/// construct once and share read-only across threads.
class PrimeModulus {
 public:
  explicit PrimeModulus(uint64_t n);  // throws ModulusTooSmall / NotPrime

  uint64_t value() const { return value_; }
  const std::vector<PrimePower>& n_minus_1_factors() const { return fac_minus_; }
  const std::vector<PrimePower>& n_plus_1_factors() const { return fac_plus_; }

  /// Smallest c >= 2 with legendre(c) == -1; fixes the GF(N^2) representation.
  uint64_t smallest_nonresidue() const { return nonresidue_; }

 private:
  uint64_t value_;
  std::vector<PrimePower> fac_minus_;
  std::vector<PrimePower> fac_plus_;
  uint64_t nonresidue_;
};

/// A residue of Z_N tied to its modulus. Mixing moduli is a programming
/// error (asserted, not reported).
class FpElem {
 public:
  FpElem(uint64_t value, const PrimeModulus& m) : res_(value % m.value()), mod_(&m) {}

  uint64_t residue() const { return res_; }
  const PrimeModulus& modulus() const { return *mod_; }
  bool is_zero() const { return res_ == 0; }

  friend FpElem operator+(const FpElem& a, const FpElem& b) {
    assert(a.mod_->value() == b.mod_->value());
    const uint64_t n = a.mod_->value();
    uint64_t s = a.res_ + b.res_;
    if (s < a.res_ || s >= n) s -= n;
    return FpElem(s, *a.mod_, 0);
  }
  friend FpElem operator-(const FpElem& a, const FpElem& b) {
    assert(a.mod_->value() == b.mod_->value());
    const uint64_t n = a.mod_->value();
    return FpElem(a.res_ >= b.res_ ? a.res_ - b.res_ : a.res_ + (n - b.res_), *a.mod_, 0);
  }
  friend FpElem operator*(const FpElem& a, const FpElem& b) {
    assert(a.mod_->value() == b.mod_->value());
    return FpElem(mul_mod(a.res_, b.res_, a.mod_->value()), *a.mod_, 0);
  }
  FpElem operator-() const {
    return FpElem(res_ == 0 ? 0 : mod_->value() - res_, *mod_, 0);
  }
  friend bool operator==(const FpElem& a, const FpElem& b) {
    return a.res_ == b.res_ && a.mod_->value() == b.mod_->value();
  }
  friend bool operator!=(const FpElem& a, const FpElem& b) { return !(a == b); }

 private:
  // already-reduced fast path used by the operators
  FpElem(uint64_t reduced, const PrimeModulus& m, int) : res_(reduced), mod_(&m) {}

  uint64_t res_;
  const PrimeModulus* mod_;
};

/// Multiplicative inverse; throws ZeroInverse on 0.
FpElem inv(const FpElem& x);

FpElem pow(const FpElem& base, uint64_t exp);

/// Legendre symbol as -1 / 0 / +1, computed as x^((N-1)/2).
int legendre(const FpElem& x);

/// Both square roots {r, N-r}, smaller residue first; {0,0} for input 0.
/// Throws NotASquare when legendre(x) == -1.
std::pair<FpElem, FpElem> sqrt(const FpElem& x);

/// Order of x in Z_N^x: start from N-1 and strip prime factors.
/// Throws ZeroOrder on 0.
uint64_t mult_order(const FpElem& x);

/// The modulus's smallest non-residue as an element.
FpElem find_nonresidue(const PrimeModulus& m);

/// per(f) = lcm(ord(alpha), ord(beta)) for a squarefree quadratic with the
/// given roots; throws RepeatedRoot when the roots are not distinct.
uint64_t quadratic_per(const FpElem& alpha, const FpElem& beta, bool distinct);

}  // namespace iprng
