#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iprng/numtheory.hpp"
#include "oracles.hpp"

using namespace iprng;

TEST_CASE("is_prime on pinned values") {
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(oracle::is_prime_trial(1000003));  // trial division confirms first
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1000001));  // 101 * 9901
}

TEST_CASE("is_prime agrees with trial division up to 20000") {
  for (uint64_t n = 0; n < 20000; ++n) {
    CAPTURE(n);
    REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
  }
}

TEST_CASE("is_prime handles large 64-bit inputs") {
  CHECK(is_prime((uint64_t(1) << 61) - 1));  // Mersenne prime 2^61-1
  CHECK_FALSE(is_prime((uint64_t(1) << 59) - 1));
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
}

TEST_CASE("factorize on pinned values") {
  CHECK(factorize(1).empty());
  CHECK(factorize(30) ==
        std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}});
  CHECK(factorize(32) == std::vector<PrimePower>{{2, 5}});
}

TEST_CASE("factorize agrees with trial division for 1..2000") {
  for (uint64_t n = 1; n <= 2000; ++n) {
    const auto expected = oracle::factorize_trial(n);
    const auto got = factorize(n);
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].prime == expected[i].first);
      CHECK(got[i].exponent == expected[i].second);
    }
  }
}

TEST_CASE("factorize reaches the rho path") {
  // two primes above the trial-division bound
  const uint64_t p = 1000003, q = 1000033;
  const auto f = factorize(p * q);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == PrimePower{p, 1});
  CHECK(f[1] == PrimePower{q, 1});
}

TEST_CASE("divisors on pinned values") {
  CHECK(divisors(30) == std::vector<uint64_t>{1, 2, 3, 5, 6, 10, 15, 30});
  CHECK(divisors(32) == std::vector<uint64_t>{1, 2, 4, 8, 16, 32});
  CHECK(divisors(1) == std::vector<uint64_t>{1});
}

TEST_CASE("divisors agrees with a brute scan for 1..500") {
  for (uint64_t n = 1; n <= 500; ++n) {
    REQUIRE(divisors(n) == oracle::divisors_scan(n));
  }
}

TEST_CASE("euler_phi on pinned values") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(32) == 16);
  CHECK(euler_phi(30) == oracle::phi_scan(30));
  CHECK(euler_phi(30) == 8);
}

TEST_CASE("sum of phi over divisors equals n for 1..500") {
  for (uint64_t n = 1; n <= 500; ++n) {
    uint64_t sum = 0;
    for (uint64_t d : divisors(n)) sum += euler_phi(d);
    REQUIRE(sum == n);
  }
}

TEST_CASE("pow_mod basics") {
  CHECK(pow_mod(3, 0, 7) == 1);
  CHECK(pow_mod(2, 3, 7) == 1);
  CHECK(pow_mod(0, 0, 5) == 1);
  // full-width operands go through the 128-bit path
  const uint64_t p = 18446744073709551557ull;
  CHECK(mul_mod(p - 1, p - 1, p) == 1);
}
