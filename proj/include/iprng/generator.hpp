#pragma once

#include <cstdint>
#include <vector>

#include "iprng/fp2.hpp"

namespace iprng {

/// One generator instance: x_{n+1} = a * x_n^-1 + b (with 0 -> b) over Z_N.
struct IprngParams {
  IprngParams(const PrimeModulus& m, uint64_t a_, uint64_t b_, uint64_t x0_)
      : a(a_, m), b(b_, m), x0(x0_, m) {}

  const PrimeModulus& modulus() const { return a.modulus(); }

  FpElem a, b, x0;
};

/// Measured orbit structure. The orbit enters a cycle of length `period`
/// after `preperiod` steps; `hits_zero` says whether 0 lies on the cycle.
struct PeriodResult {
  uint64_t preperiod = 0;
  uint64_t period = 1;
  bool hits_zero = false;

  bool operator==(const PeriodResult&) const = default;
};

/// One step of the map: a * x^-1 + b, or b when x = 0.
FpElem step(const IprngParams& params, const FpElem& x);

/// [x_1, ..., x_count] by iterating step from x0.
std::vector<FpElem> sequence(const IprngParams& params, size_t count);

/// Exact preperiod and period from a first-seen index table over the N
/// possible states; one pass, at most N+1 steps.
PeriodResult measure_period(const IprngParams& params);

/// The companion LFSR: y_0 = 1, y_1 = x0, y_{n+2} = b*y_{n+1} + a*y_n.
/// Returns [y_0, ..., y_{count-1}].
std::vector<FpElem> lfsr_sequence(const IprngParams& params, size_t count);

/// General term of y_{n+2} = 2a*y_{n+1} - a^2*y_n with seeds y_0 = 1,
/// y_1 = x0: y_n = alpha^n * (1 + n*(alpha^-1*x0 - 1)).
FpElem closed_form_double(const FpElem& alpha, const FpElem& x0, uint64_t n);

/// General term for distinct roots:
/// y_n = (alpha-beta)^-1 * ((x0-beta)*alpha^n + (alpha-x0)*beta^n).
FpElem closed_form_split(const FpElem& alpha, const FpElem& beta,
                         const FpElem& x0, uint64_t n);
Fp2Elem closed_form_split(const Fp2Elem& alpha, const Fp2Elem& beta,
                          const FpElem& x0, uint64_t n);

/// Checks the LFSR correspondence: x_n = y_{n+1} * y_n^-1 while the y prefix
/// stays nonzero, and the first x-zero at index m has y_{m+1} = 0.
bool check_lfsr_correspondence(const IprngParams& params, size_t horizon);

}  // namespace iprng
