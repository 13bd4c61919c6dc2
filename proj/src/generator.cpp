#include "iprng/generator.hpp"

#include "iprng/errors.hpp"

namespace iprng {

FpElem step(const IprngParams& params, const FpElem& x) {
  if (x.is_zero()) return params.b;
  return params.a * inv(x) + params.b;
}

std::vector<FpElem> sequence(const IprngParams& params, size_t count) {
  std::vector<FpElem> out;
  out.reserve(count);
  FpElem x = params.x0;
  for (size_t i = 0; i < count; ++i) {
    x = step(params, x);
    out.push_back(x);
  }
  return out;
}

PeriodResult measure_period(const IprngParams& params) {
  const PrimeModulus& m = params.modulus();
  const uint64_t n = m.value();
  const uint64_t a = params.a.residue();
  const uint64_t b = params.b.residue();

  // the state space is exactly Z_N, so a first-seen table gives the exact
  // preperiod and period in one pass
  std::vector<int64_t> first_seen(n, -1);
  uint64_t x = params.x0.residue();
  int64_t idx = 0;
  while (first_seen[x] < 0) {
    first_seen[x] = idx++;
    if (x == 0) {
      x = b;
    } else {
      const uint64_t t = mul_mod(a, pow_mod(x, n - 2, n), n) + b;
      x = t >= n ? t - n : t;
    }
  }
  const int64_t tail = first_seen[x];
  PeriodResult result;
  result.preperiod = static_cast<uint64_t>(tail);
  result.period = static_cast<uint64_t>(idx - tail);
  result.hits_zero = first_seen[0] >= tail;
  return result;
}

std::vector<FpElem> lfsr_sequence(const IprngParams& params, size_t count) {
  const PrimeModulus& m = params.modulus();
  std::vector<FpElem> y;
  y.reserve(count);
  if (count >= 1) y.push_back(FpElem(1, m));
  if (count >= 2) y.push_back(params.x0);
  for (size_t i = 2; i < count; ++i) {
    y.push_back(params.b * y[i - 1] + params.a * y[i - 2]);
  }
  return y;
}

FpElem closed_form_double(const FpElem& alpha, const FpElem& x0, uint64_t n) {
  assert(!alpha.is_zero());
  const PrimeModulus& m = alpha.modulus();
  const FpElem one(1, m);
  const FpElem n_elem(n % m.value(), m);
  return pow(alpha, n) * (one + n_elem * (inv(alpha) * x0 - one));
}

namespace {

template <typename Elem>
Elem split_term(const Elem& alpha, const Elem& beta, const Elem& x0,
                uint64_t n) {
  return inv(alpha - beta) *
         ((x0 - beta) * pow(alpha, n) + (alpha - x0) * pow(beta, n));
}

}  // namespace

FpElem closed_form_split(const FpElem& alpha, const FpElem& beta,
                         const FpElem& x0, uint64_t n) {
  assert(alpha != beta);
  return split_term(alpha, beta, x0, n);
}

Fp2Elem closed_form_split(const Fp2Elem& alpha, const Fp2Elem& beta,
                          const FpElem& x0, uint64_t n) {
  assert(alpha != beta);
  return split_term(alpha, beta, Fp2Elem::from_subfield(x0), n);
}

bool check_lfsr_correspondence(const IprngParams& params, size_t horizon) {
  const std::vector<FpElem> y = lfsr_sequence(params, horizon + 2);

  std::vector<FpElem> x;
  x.reserve(horizon);
  x.push_back(params.x0);
  for (const FpElem& e : sequence(params, horizon)) x.push_back(e);

  bool prefix_nonzero = true;
  for (size_t n = 0; n < horizon; ++n) {
    prefix_nonzero = prefix_nonzero && !y[n].is_zero();
    if (prefix_nonzero && x[n] != y[n + 1] * inv(y[n])) return false;
  }
  // the first x-zero must line up with the first y-zero one step later
  for (size_t m = 0; m < horizon; ++m) {
    if (x[m].is_zero()) return y[m + 1].is_zero();
  }
  return true;
}

}  // namespace iprng
