#pragma once

#include <cstdint>
#include <vector>

namespace iprng {

// (a * b) mod m through a 128-bit intermediate; safe for any 64-bit modulus.
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);

// Square-and-multiply; pow_mod(x, 0, m) == 1 % m.
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(uint64_t n);

struct PrimePower {
  uint64_t prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization in ascending prime order; factorize(1) == {}.
/// Trial division below 10^6, then Pollard rho with Brent cycle detection.
std::vector<PrimePower> factorize(uint64_t n);

/// All positive divisors of n, ascending.
std::vector<uint64_t> divisors(uint64_t n);

/// Euler's totient.
uint64_t euler_phi(uint64_t n);

}  // namespace iprng
