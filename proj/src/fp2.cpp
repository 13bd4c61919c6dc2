#include "iprng/fp2.hpp"

#include <numeric>

#include "iprng/errors.hpp"

namespace iprng {

Fp2Elem::Fp2Elem(const FpElem& c0, const FpElem& c1) : c0_(c0), c1_(c1) {
  assert(c0.modulus().value() == c1.modulus().value());
  assert(c0.modulus().value() < (uint64_t(1) << 32));
}

Fp2Elem Fp2Elem::from_subfield(const FpElem& u) {
  return Fp2Elem(u, FpElem(0, u.modulus()));
}

Fp2Elem Fp2Elem::zero(const PrimeModulus& m) {
  return Fp2Elem(FpElem(0, m), FpElem(0, m));
}

Fp2Elem Fp2Elem::one(const PrimeModulus& m) {
  return Fp2Elem(FpElem(1, m), FpElem(0, m));
}

Fp2Elem operator*(const Fp2Elem& a, const Fp2Elem& b) {
  // (u1 + v1 w)(u2 + v2 w) = u1 u2 + v1 v2 c + (u1 v2 + v1 u2) w
  const FpElem c = a.nonresidue();
  return Fp2Elem(a.c0_ * b.c0_ + a.c1_ * b.c1_ * c,
                 a.c0_ * b.c1_ + a.c1_ * b.c0_);
}

Fp2Elem inv(const Fp2Elem& x) {
  if (x.is_zero()) throw ZeroInverse();
  // (u + vw)^-1 = (u - vw) / (u^2 - v^2 c)
  const FpElem denom =
      x.c0() * x.c0() - x.c1() * x.c1() * x.nonresidue();
  const FpElem d = inv(denom);
  return Fp2Elem(x.c0() * d, -x.c1() * d);
}

Fp2Elem pow(const Fp2Elem& base, uint64_t exp) {
  Fp2Elem acc = Fp2Elem::one(base.modulus());
  Fp2Elem b = base;
  while (exp) {
    if (exp & 1) acc = acc * b;
    b = b * b;
    exp >>= 1;
  }
  return acc;
}

Fp2Elem frobenius(const Fp2Elem& x) {
  // w^N = c^((N-1)/2) * w, and the scale is -1 because c is a non-residue
  const uint64_t n = x.modulus().value();
  const FpElem scale = pow(x.nonresidue(), (n - 1) / 2);
  return Fp2Elem(x.c0(), x.c1() * scale);
}

FpElem norm(const Fp2Elem& x) {
  const Fp2Elem product = x * frobenius(x);
  assert(product.c1().is_zero());
  return product.c0();
}

uint64_t mult_order(const Fp2Elem& x) {
  if (x.is_zero()) throw ZeroOrder();
  const PrimeModulus& m = x.modulus();
  const uint64_t n = m.value();

  // group order N^2-1 = (N-1)(N+1); merge the cached factorizations
  std::vector<PrimePower> factors = m.n_minus_1_factors();
  for (const auto& [p, e] : m.n_plus_1_factors()) {
    bool merged = false;
    for (auto& f : factors) {
      if (f.prime == p) {
        f.exponent += e;
        merged = true;
        break;
      }
    }
    if (!merged) factors.push_back({p, e});
  }

  uint64_t order = (n - 1) * (n + 1);
  const Fp2Elem unit = Fp2Elem::one(m);
  for (const auto& [p, e] : factors) {
    for (int i = 0; i < e; ++i) {
      if (order % p == 0 && pow(x, order / p) == unit) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

uint64_t encoding(const Fp2Elem& x) {
  return x.c1().residue() * x.modulus().value() + x.c0().residue();
}

uint64_t quadratic_per(const Fp2Elem& alpha, const Fp2Elem& beta,
                       bool distinct) {
  if (!distinct) throw RepeatedRoot();
  return std::lcm(mult_order(alpha), mult_order(beta));
}

}  // namespace iprng
