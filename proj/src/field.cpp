#include "iprng/field.hpp"

#include <numeric>

#include "iprng/errors.hpp"

namespace iprng {

PrimeModulus::PrimeModulus(uint64_t n) : value_(n) {
  if (n <= 3) throw ModulusTooSmall();
  if (!is_prime(n)) throw NotPrime();
  fac_minus_ = factorize(n - 1);
  fac_plus_ = factorize(n + 1);
  nonresidue_ = 2;
  while (pow_mod(nonresidue_, (n - 1) / 2, n) != n - 1) ++nonresidue_;
}

FpElem inv(const FpElem& x) {
  if (x.is_zero()) throw ZeroInverse();
  const uint64_t n = x.modulus().value();
  return FpElem(pow_mod(x.residue(), n - 2, n), x.modulus());
}

FpElem pow(const FpElem& base, uint64_t exp) {
  return FpElem(pow_mod(base.residue(), exp, base.modulus().value()),
                base.modulus());
}

int legendre(const FpElem& x) {
  if (x.is_zero()) return 0;
  const uint64_t n = x.modulus().value();
  return pow_mod(x.residue(), (n - 1) / 2, n) == 1 ? 1 : -1;
}

std::pair<FpElem, FpElem> sqrt(const FpElem& x) {
  const PrimeModulus& m = x.modulus();
  const uint64_t n = m.value();
  if (x.is_zero()) return {x, x};
  if (legendre(x) < 0) throw NotASquare();

  uint64_t r;
  if (n % 4 == 3) {
    r = pow_mod(x.residue(), (n + 1) / 4, n);
  } else {
    // Tonelli-Shanks, seeded with the cached non-residue
    uint64_t q = n - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    uint64_t z = pow_mod(m.smallest_nonresidue(), q, n);
    uint64_t t = pow_mod(x.residue(), q, n);
    r = pow_mod(x.residue(), (q + 1) / 2, n);
    int e = s;
    while (t != 1) {
      uint64_t t2 = t;
      int i = 0;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, n);
        ++i;
      }
      uint64_t b = z;
      for (int j = 0; j < e - i - 1; ++j) b = mul_mod(b, b, n);
      r = mul_mod(r, b, n);
      z = mul_mod(b, b, n);
      t = mul_mod(t, z, n);
      e = i;
    }
  }
  uint64_t other = n - r;
  if (r > other) std::swap(r, other);
  return {FpElem(r, m), FpElem(other, m)};
}

namespace {

// smallest e >= 1 with x^e = 1, given the group order and its factorization
uint64_t order_from_group(uint64_t x, uint64_t n, uint64_t group_order,
                          const std::vector<PrimePower>& factors) {
  uint64_t order = group_order;
  for (const auto& [p, e] : factors) {
    for (int i = 0; i < e; ++i) {
      if (order % p == 0 && pow_mod(x, order / p, n) == 1) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

}  // namespace

uint64_t mult_order(const FpElem& x) {
  if (x.is_zero()) throw ZeroOrder();
  const PrimeModulus& m = x.modulus();
  return order_from_group(x.residue(), m.value(), m.value() - 1,
                          m.n_minus_1_factors());
}

FpElem find_nonresidue(const PrimeModulus& m) {
  return FpElem(m.smallest_nonresidue(), m);
}

uint64_t quadratic_per(const FpElem& alpha, const FpElem& beta, bool distinct) {
  if (!distinct) throw RepeatedRoot();
  return std::lcm(mult_order(alpha), mult_order(beta));
}

}  // namespace iprng
