#pragma once

#include <optional>
#include <utility>

#include "iprng/generator.hpp"

namespace iprng {

enum class RootLocation { Subfield, Extension, Double };

/// Roots of the characteristic polynomial f(t) = t^2 - b*t - a, plus the
/// root ratio gamma = alpha * beta^-1 when the roots are distinct. alpha is
/// the canonically smaller root (by residue in Z_N, by encoding in GF(N^2)).
struct RootData {
  RootLocation location;
  // Subfield and Double case (beta == alpha for a double root):
  std::optional<std::pair<FpElem, FpElem>> fp_roots;
  std::optional<FpElem> gamma_fp;
  // Extension case (beta = frobenius(alpha)):
  std::optional<std::pair<Fp2Elem, Fp2Elem>> ext_roots;
  std::optional<Fp2Elem> gamma_ext;
};

/// Classifies the discriminant b^2 + 4a and extracts the roots:
/// zero -> Double, square -> Subfield, non-square -> Extension with
/// sqrt(delta) = r*w for delta = r^2 * c.
RootData find_roots(const FpElem& a, const FpElem& b);

/// k = ord(alpha * beta^-1); k > 2 whenever a, b are units, and k | N-1 in
/// the subfield case, k | N+1 in the extension case.
/// Throws DegenerateRoots for a double root.
uint64_t gamma_order(const RootData& roots);

/// Whether the cross-ratio r = (x0-alpha)*(x0-beta)^-1 lies in the set of
/// non-identity powers of gamma, decided by the single test r^k == 1.
/// Membership is exactly the condition for the orbit to hit 0.
/// Throws RootHit when x0 equals a root, DegenerateRoots for a double root.
bool ratio_in_omega(const RootData& roots, const FpElem& x0);

enum class PeriodTag {
  A_ZERO,
  B_ZERO_FIXED,
  B_ZERO_SWAP,
  DOUBLE_ROOT_FIXED,
  DOUBLE_ROOT_FULL,
  SPLIT_FIXED,
  SPLIT_HITS_ZERO,
  SPLIT_NO_ZERO,
  INERT_HITS_ZERO,
  INERT_NO_ZERO,
};

const char* to_string(PeriodTag tag);

/// Outcome of the closed-form case analysis. k is present exactly for the
/// SPLIT/INERT tags; then k > 2 and k | N-1 (SPLIT) or k | N+1 (INERT).
struct PeriodClass {
  PeriodTag tag;
  std::optional<uint64_t> k;
  uint64_t predicted_period;
};

/// Closed-form period prediction for any parameter triple, without
/// iterating the generator:
///   a = 0                         -> period 1
///   a != 0, b = 0, fixed point    -> period 1, else period 2
///   double root, x0 = alpha       -> period 1, else period N-1
///   distinct roots, x0 a root     -> period 1
///   orbit hits zero               -> period k-1, else period k.
PeriodClass predict_period(const IprngParams& params);

/// Builds (a, b) whose root ratio has order k, via the inversion
/// a = -b^2 * (gamma + gamma^-1 + 2)^-1. gamma is drawn from Z_N^x when
/// k | N-1 and from the norm-1 subgroup of GF(N^2)^x when k | N+1; `which`
/// selects among the phi(k)/2 ratio classes {gamma, gamma^-1}, canonically
/// ordered and taken modulo the class count.
/// Throws BadTarget when no element of order k exists in either group.
std::pair<FpElem, FpElem> params_from_gamma(const PrimeModulus& m, uint64_t k,
                                            const FpElem& b, uint64_t which);

}  // namespace iprng
