#include "iprng/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace iprng {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

namespace {

constexpr uint64_t kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// true iff a witnesses n composite
bool mr_witness(uint64_t n, uint64_t a, uint64_t d, int r) {
  uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// n odd composite with no prime factor below 10^6
uint64_t pollard_rho(uint64_t n) {
  for (uint64_t c = 1;; ++c) {
    auto f = [n, c](uint64_t x) {
      uint64_t y = mul_mod(x, x, n) + c;
      return y >= n ? y - n : y;
    };
    // Brent: batch gcds of |x - y| products
    uint64_t x = 2, y = 2, d = 1, q = 1, ys = y;
    const uint64_t batch = 128;
    for (uint64_t r = 1; d == 1; r <<= 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = f(y);
      for (uint64_t k = 0; k < r && d == 1; k += batch) {
        ys = y;
        const uint64_t lim = std::min(batch, r - k);
        for (uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = f(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
  }
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : kMrBases) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // this base set is exact below 3.3 * 10^24, so for all 64-bit n
  for (uint64_t a : kMrBases) {
    if (mr_witness(n, a, d, r)) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(uint64_t n) {
  std::vector<uint64_t> primes;
  auto strip = [&](uint64_t p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  };
  strip(2);
  strip(3);
  for (uint64_t d = 5; d < 1000000 && d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  std::vector<uint64_t> pending;
  if (n > 1) pending.push_back(n);
  while (!pending.empty()) {
    const uint64_t m = pending.back();
    pending.pop_back();
    if (is_prime(m)) {
      primes.push_back(m);
      continue;
    }
    const uint64_t d = pollard_rho(m);
    pending.push_back(d);
    pending.push_back(m / d);
  }
  std::sort(primes.begin(), primes.end());

  std::vector<PrimePower> out;
  for (uint64_t p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const size_t base = divs.size();
    uint64_t pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    phi -= phi / p;
  }
  return phi;
}

}  // namespace iprng
