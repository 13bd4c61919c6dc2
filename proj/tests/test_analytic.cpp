#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iprng/analytic.hpp"
#include "iprng/errors.hpp"

using namespace iprng;

namespace {
const uint64_t kPrimes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31,
                            37, 41, 43, 47, 53, 59, 61};
}

TEST_CASE("find_roots classifies the three discriminant cases") {
  const PrimeModulus m5(5);
  const RootData dbl = find_roots(FpElem(1, m5), FpElem(1, m5));
  CHECK(dbl.location == RootLocation::Double);  // delta = 5 = 0
  CHECK(dbl.fp_roots->first == FpElem(3, m5));  // 1 * 2^-1 = 3

  const PrimeModulus m7(7);
  const RootData split = find_roots(FpElem(1, m7), FpElem(5, m7));
  CHECK(split.location == RootLocation::Subfield);
  CHECK(split.fp_roots->first == FpElem(2, m7));  // t^2-5t-1 = (t-2)(t-3)
  CHECK(split.fp_roots->second == FpElem(3, m7));

  const RootData inert = find_roots(FpElem(1, m7), FpElem(1, m7));
  CHECK(inert.location == RootLocation::Extension);  // delta = 5, non-square
}

TEST_CASE("find_roots returns actual roots of t^2 - b t - a") {
  for (uint64_t p : {5, 7, 11, 13, 31}) {
    const PrimeModulus m(p);
    for (uint64_t a = 0; a < p; ++a) {
      for (uint64_t b = 0; b < p; ++b) {
        const FpElem ea(a, m), eb(b, m);
        const RootData roots = find_roots(ea, eb);
        if (roots.location == RootLocation::Extension) {
          const auto& [alpha, beta] = *roots.ext_roots;
          const Fp2Elem a2 = Fp2Elem::from_subfield(ea);
          const Fp2Elem b2 = Fp2Elem::from_subfield(eb);
          REQUIRE((alpha * alpha - b2 * alpha - a2).is_zero());
          REQUIRE((beta * beta - b2 * beta - a2).is_zero());
          REQUIRE(beta == frobenius(alpha));
          REQUIRE(encoding(alpha) < encoding(beta));
        } else {
          const auto& [alpha, beta] = *roots.fp_roots;
          REQUIRE(alpha * alpha - eb * alpha - ea == FpElem(0, m));
          REQUIRE(beta * beta - eb * beta - ea == FpElem(0, m));
          if (roots.location == RootLocation::Double) {
            REQUIRE(alpha == beta);
          } else {
            REQUIRE(alpha.residue() < beta.residue());
          }
        }
      }
    }
  }
}

TEST_CASE("gamma_order on pinned values") {
  const PrimeModulus m7(7);
  const RootData split = find_roots(FpElem(1, m7), FpElem(5, m7));
  CHECK(gamma_order(split) == 6);  // ord(2 * 3^-1) = ord(3)

  const RootData inert = find_roots(FpElem(1, m7), FpElem(1, m7));
  CHECK(gamma_order(inert) == 8);  // the period-7 orbit forces k = N+1

  const PrimeModulus m5(5);
  const RootData dbl = find_roots(FpElem(1, m5), FpElem(1, m5));
  CHECK_THROWS_AS(gamma_order(dbl), DegenerateRoots);
}

TEST_CASE("gamma_order is above 2 and divides the right group order") {
  for (uint64_t p : kPrimes) {
    const PrimeModulus m(p);
    for (uint64_t a = 1; a < p; ++a) {
      for (uint64_t b = 1; b < p; ++b) {
        const RootData roots = find_roots(FpElem(a, m), FpElem(b, m));
        if (roots.location == RootLocation::Double) continue;
        const uint64_t k = gamma_order(roots);
        REQUIRE(k > 2);
        if (roots.location == RootLocation::Subfield) {
          REQUIRE((p - 1) % k == 0);
        } else {
          REQUIRE((p + 1) % k == 0);
        }
      }
    }
  }
}

TEST_CASE("gamma satisfies g(t) = t^2 + (a^-1 b^2 + 2) t + 1") {
  for (uint64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const PrimeModulus m(p);
    for (uint64_t a = 1; a < p; ++a) {
      for (uint64_t b = 1; b < p; ++b) {
        const FpElem ea(a, m), eb(b, m);
        const RootData roots = find_roots(ea, eb);
        if (roots.location == RootLocation::Double) continue;
        const FpElem coeff = inv(ea) * eb * eb + FpElem(2, m);
        if (roots.location == RootLocation::Subfield) {
          const FpElem g = *roots.gamma_fp;
          REQUIRE(g * g + coeff * g + FpElem(1, m) == FpElem(0, m));
        } else {
          const Fp2Elem g = *roots.gamma_ext;
          const Fp2Elem value = g * g + Fp2Elem::from_subfield(coeff) * g +
                                Fp2Elem::one(m);
          REQUIRE(value.is_zero());
        }
      }
    }
  }
}

TEST_CASE("ratio_in_omega flags x0 = b and rejects roots") {
  const PrimeModulus m(7);
  const RootData roots = find_roots(FpElem(1, m), FpElem(5, m));
  CHECK(ratio_in_omega(roots, FpElem(5, m)));  // x0 = b = alpha + beta
  CHECK(ratio_in_omega(roots, FpElem(1, m)));  // k = 6 = N-1: every unit ratio
  CHECK_THROWS_AS(ratio_in_omega(roots, FpElem(2, m)), RootHit);
  CHECK_THROWS_AS(ratio_in_omega(roots, FpElem(3, m)), RootHit);

  const PrimeModulus m5(5);
  const RootData dbl = find_roots(FpElem(1, m5), FpElem(1, m5));
  CHECK_THROWS_AS(ratio_in_omega(dbl, FpElem(0, m5)), DegenerateRoots);
}

TEST_CASE("omega membership is exactly the orbit-hits-zero condition") {
  // over the units family the three zero-hitting tags must line up with the
  // measured cycles; the ab = 0 tags can sit on the cycle {0} and are out
  // of scope here
  for (uint64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const PrimeModulus m(p);
    for (uint64_t a = 1; a < p; ++a)
      for (uint64_t b = 1; b < p; ++b)
        for (uint64_t x0 = 0; x0 < p; ++x0) {
          const IprngParams params(m, a, b, x0);
          const PeriodClass c = predict_period(params);
          const bool predicted_zero = c.tag == PeriodTag::SPLIT_HITS_ZERO ||
                                      c.tag == PeriodTag::INERT_HITS_ZERO ||
                                      c.tag == PeriodTag::DOUBLE_ROOT_FULL;
          REQUIRE(predicted_zero == measure_period(params).hits_zero);
        }
  }
}

TEST_CASE("predict_period on pinned values") {
  const PrimeModulus m31(31);
  const PeriodClass azero = predict_period(IprngParams(m31, 0, 17, 3));
  CHECK(azero.tag == PeriodTag::A_ZERO);
  CHECK(azero.predicted_period == 1);
  CHECK_FALSE(azero.k.has_value());

  const PrimeModulus m7(7);
  const PeriodClass inert = predict_period(IprngParams(m7, 1, 1, 1));
  CHECK(inert.tag == PeriodTag::INERT_HITS_ZERO);
  CHECK(inert.k == 8);
  CHECK(inert.predicted_period == 7);

  const PrimeModulus m5(5);
  const PeriodClass dbl = predict_period(IprngParams(m5, 1, 1, 0));
  CHECK(dbl.tag == PeriodTag::DOUBLE_ROOT_FULL);
  CHECK(dbl.predicted_period == 4);
}

TEST_CASE("predict_period equals measure_period on all triples (small primes)") {
  // the full 16-prime sweep is the acceptance suite's criterion 3
  for (uint64_t p : {5, 7, 11, 13}) {
    const PrimeModulus m(p);
    for (uint64_t a = 0; a < p; ++a)
      for (uint64_t b = 0; b < p; ++b)
        for (uint64_t x0 = 0; x0 < p; ++x0) {
          const IprngParams params(m, a, b, x0);
          REQUIRE(predict_period(params).predicted_period ==
                  measure_period(params).period);
        }
  }
}

TEST_CASE("predict_period is deterministic") {
  const PrimeModulus m(31);
  for (uint64_t a : {3, 14, 30})
    for (uint64_t b : {1, 8, 22})
      for (uint64_t x0 : {0, 5, 19}) {
        const IprngParams params(m, a, b, x0);
        const PeriodClass first = predict_period(params);
        const PeriodClass second = predict_period(params);
        CHECK(first.tag == second.tag);
        CHECK(first.k == second.k);
        CHECK(first.predicted_period == second.predicted_period);
      }
}

TEST_CASE("params_from_gamma on pinned values") {
  const PrimeModulus m7(7);

  // k = 6 | N-1 with b = 5 must produce a = 1 (roots 2,3: gamma = 3)
  const auto [a6, b6] = params_from_gamma(m7, 6, FpElem(5, m7), 0);
  CHECK(a6 == FpElem(1, m7));
  CHECK(b6 == FpElem(5, m7));

  // k = 8 | N+1 with b = 1: one of the two ratio classes gives a = 1
  bool found = false;
  for (uint64_t which = 0; which < 2; ++which) {
    const auto [a8, b8] = params_from_gamma(m7, 8, FpElem(1, m7), which);
    const RootData roots = find_roots(a8, b8);
    CHECK(roots.location == RootLocation::Extension);
    CHECK(gamma_order(roots) == 8);
    if (a8 == FpElem(1, m7)) found = true;
  }
  CHECK(found);

  CHECK_THROWS_AS(params_from_gamma(m7, 2, FpElem(1, m7), 0), BadTarget);
  const PrimeModulus m31(31);
  CHECK_THROWS_AS(params_from_gamma(m31, 7, FpElem(1, m31), 0), BadTarget);
}

TEST_CASE("params_from_gamma reproduces the requested order everywhere") {
  for (uint64_t p : {7, 13, 31}) {
    const PrimeModulus m(p);
    for (uint64_t group : {p - 1, p + 1}) {
      for (uint64_t k : divisors(group)) {
        if (k <= 2) continue;
        const uint64_t classes = euler_phi(k) / 2;
        for (uint64_t which = 0; which < classes; ++which) {
          for (uint64_t b : {uint64_t{1}, uint64_t{2}, p - 1}) {
            const auto [ea, eb] = params_from_gamma(m, k, FpElem(b, m), which);
            CHECK_FALSE(ea.is_zero());
            const RootData roots = find_roots(ea, eb);
            REQUIRE(roots.location == (group == p - 1
                                           ? RootLocation::Subfield
                                           : RootLocation::Extension));
            REQUIRE(gamma_order(roots) == k);
          }
        }
      }
    }
  }
}

TEST_CASE("only the reciprocal parameter relation inverts the ratio") {
  // a = b^2 (gamma + gamma^-1 - 2) looks like a plausible inversion but is
  // not one: since gamma and gamma^-1 are the roots of
  // t^2 + (a^-1 b^2 + 2)t + 1, the correct relation is
  // a = -b^2 (gamma + gamma^-1 + 2)^-1.
  const PrimeModulus m(7);
  const FpElem b(5, m);
  const auto [a_derived, b_out] = params_from_gamma(m, 6, b, 0);
  const RootData derived_roots = find_roots(a_derived, b_out);
  REQUIRE(gamma_order(derived_roots) == 6);

  // reconstruct the trace the inversion used, then apply the wrong relation
  const FpElem trace = -(inv(a_derived) * b * b + FpElem(2, m));
  const FpElem a_wrong = b * b * (trace - FpElem(2, m));
  CHECK(a_wrong != a_derived);
  const RootData wrong_roots = find_roots(a_wrong, b);
  if (wrong_roots.location != RootLocation::Double) {
    CHECK(gamma_order(wrong_roots) != 6);
  }
}
