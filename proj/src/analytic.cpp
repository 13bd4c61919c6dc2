#include "iprng/analytic.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "iprng/errors.hpp"

namespace iprng {

RootData find_roots(const FpElem& a, const FpElem& b) {
  const PrimeModulus& m = a.modulus();
  const FpElem four(4, m);
  const FpElem delta = b * b + four * a;
  const FpElem half = inv(FpElem(2, m));

  RootData out;
  if (delta.is_zero()) {
    out.location = RootLocation::Double;
    const FpElem alpha = b * half;
    out.fp_roots = {alpha, alpha};
    return out;
  }
  if (legendre(delta) > 0) {
    out.location = RootLocation::Subfield;
    const FpElem s = sqrt(delta).first;
    FpElem alpha = (b + s) * half;
    FpElem beta = (b - s) * half;
    if (beta.residue() < alpha.residue()) std::swap(alpha, beta);
    out.fp_roots = {alpha, beta};
    out.gamma_fp = alpha * inv(beta);
    return out;
  }
  // delta is a non-residue: sqrt(delta) = r*w with r = sqrt(delta/c),
  // since delta/c is a square whenever both factors are non-residues
  out.location = RootLocation::Extension;
  const FpElem c = find_nonresidue(m);
  const FpElem r = sqrt(delta * inv(c)).first;
  const FpElem zero(0, m);
  Fp2Elem alpha(b * half, r * half);
  Fp2Elem beta(b * half, zero - r * half);
  if (encoding(beta) < encoding(alpha)) std::swap(alpha, beta);
  out.ext_roots = {alpha, beta};
  out.gamma_ext = alpha * inv(beta);
  return out;
}

uint64_t gamma_order(const RootData& roots) {
  if (roots.location == RootLocation::Double) throw DegenerateRoots();
  if (roots.location == RootLocation::Subfield) return mult_order(*roots.gamma_fp);
  return mult_order(*roots.gamma_ext);
}

bool ratio_in_omega(const RootData& roots, const FpElem& x0) {
  if (roots.location == RootLocation::Double) throw DegenerateRoots();
  const uint64_t k = gamma_order(roots);
  if (roots.location == RootLocation::Subfield) {
    const auto& [alpha, beta] = *roots.fp_roots;
    if (x0 == alpha || x0 == beta) throw RootHit();
    const FpElem r = (x0 - alpha) * inv(x0 - beta);
    // r != 1 is automatic (alpha != beta), so membership in the cyclic
    // order-k subgroup is the single test r^k = 1
    return pow(r, k) == FpElem(1, x0.modulus());
  }
  const auto& [alpha, beta] = *roots.ext_roots;
  const Fp2Elem x = Fp2Elem::from_subfield(x0);
  const Fp2Elem r = (x - alpha) * inv(x - beta);
  assert(norm(r) == FpElem(1, x0.modulus()));
  return pow(r, k) == Fp2Elem::one(x0.modulus());
}

const char* to_string(PeriodTag tag) {
  switch (tag) {
    case PeriodTag::A_ZERO: return "A_ZERO";
    case PeriodTag::B_ZERO_FIXED: return "B_ZERO_FIXED";
    case PeriodTag::B_ZERO_SWAP: return "B_ZERO_SWAP";
    case PeriodTag::DOUBLE_ROOT_FIXED: return "DOUBLE_ROOT_FIXED";
    case PeriodTag::DOUBLE_ROOT_FULL: return "DOUBLE_ROOT_FULL";
    case PeriodTag::SPLIT_FIXED: return "SPLIT_FIXED";
    case PeriodTag::SPLIT_HITS_ZERO: return "SPLIT_HITS_ZERO";
    case PeriodTag::SPLIT_NO_ZERO: return "SPLIT_NO_ZERO";
    case PeriodTag::INERT_HITS_ZERO: return "INERT_HITS_ZERO";
    case PeriodTag::INERT_NO_ZERO: return "INERT_NO_ZERO";
  }
  return "?";
}

PeriodClass predict_period(const IprngParams& params) {
  const uint64_t n = params.modulus().value();

  if (params.a.is_zero()) {
    return {PeriodTag::A_ZERO, std::nullopt, 1};
  }
  if (params.b.is_zero()) {
    if (params.x0.is_zero() || params.a == params.x0 * params.x0) {
      return {PeriodTag::B_ZERO_FIXED, std::nullopt, 1};
    }
    return {PeriodTag::B_ZERO_SWAP, std::nullopt, 2};
  }

  const RootData roots = find_roots(params.a, params.b);
  if (roots.location == RootLocation::Double) {
    const FpElem& alpha = roots.fp_roots->first;
    if (params.x0 == alpha) {
      return {PeriodTag::DOUBLE_ROOT_FIXED, std::nullopt, 1};
    }
    return {PeriodTag::DOUBLE_ROOT_FULL, std::nullopt, n - 1};
  }

  const uint64_t k = gamma_order(roots);
  if (roots.location == RootLocation::Subfield) {
    const auto& [alpha, beta] = *roots.fp_roots;
    if (params.x0 == alpha || params.x0 == beta) {
      return {PeriodTag::SPLIT_FIXED, std::nullopt, 1};
    }
    if (ratio_in_omega(roots, params.x0)) {
      return {PeriodTag::SPLIT_HITS_ZERO, k, k - 1};
    }
    return {PeriodTag::SPLIT_NO_ZERO, k, k};
  }
  if (ratio_in_omega(roots, params.x0)) {
    return {PeriodTag::INERT_HITS_ZERO, k, k - 1};
  }
  return {PeriodTag::INERT_NO_ZERO, k, k};
}

namespace {

// exponents 1 <= j < k with gcd(j, k) = 1
std::vector<uint64_t> coprime_exponents(uint64_t k) {
  std::vector<uint64_t> out;
  for (uint64_t j = 1; j < k; ++j) {
    if (std::gcd(j, k) == 1) out.push_back(j);
  }
  return out;
}

// An element of order k in Z_N^x, via a primitive root.
FpElem subfield_order_k(const PrimeModulus& m, uint64_t k) {
  const uint64_t n = m.value();
  uint64_t g = 2;
  while (mult_order(FpElem(g, m)) != n - 1) ++g;
  return pow(FpElem(g, m), (n - 1) / k);
}

// An element of order k in the norm-1 subgroup of GF(N^2)^x. Draws u at
// random (fixed seed, so results are reproducible), maps it to norm 1 via
// u^(N-1), powers down to the order-k subgroup and retries until the order
// is exactly k.
Fp2Elem norm1_order_k(const PrimeModulus& m, uint64_t k) {
  const uint64_t n = m.value();
  std::mt19937_64 rng(n * 0x9e3779b97f4a7c15ull + k);
  std::uniform_int_distribution<uint64_t> coef(0, n - 1);
  for (;;) {
    const Fp2Elem u(FpElem(coef(rng), m), FpElem(coef(rng), m));
    if (u.is_zero()) continue;
    const Fp2Elem v = pow(u, n - 1);
    const Fp2Elem candidate = pow(v, (n + 1) / k);
    if (mult_order(candidate) == k) return candidate;
  }
}

// Canonical trace gamma + gamma^-1 of the `which`-th ratio class
// {gamma^j, gamma^-j}. Classes are keyed by the smaller member and sorted,
// so the choice does not depend on which order-k element was found first.
template <typename Elem, typename KeyFn>
Elem class_representative(const Elem& gamma, uint64_t k, uint64_t which,
                          KeyFn key) {
  std::vector<std::pair<uint64_t, Elem>> reps;
  for (uint64_t j : coprime_exponents(k)) {
    const Elem e = pow(gamma, j);
    const Elem e_inv = pow(gamma, k - j);
    const Elem smaller = key(e) <= key(e_inv) ? e : e_inv;
    const uint64_t id = key(smaller);
    if (std::none_of(reps.begin(), reps.end(),
                     [&](const auto& r) { return r.first == id; })) {
      reps.emplace_back(id, smaller);
    }
  }
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return reps[which % reps.size()].second;
}

}  // namespace

std::pair<FpElem, FpElem> params_from_gamma(const PrimeModulus& m, uint64_t k,
                                            const FpElem& b, uint64_t which) {
  assert(!b.is_zero());
  const uint64_t n = m.value();
  if (k <= 2 || ((n - 1) % k != 0 && (n + 1) % k != 0)) throw BadTarget();

  FpElem trace(0, m);
  if ((n - 1) % k == 0) {
    const FpElem gamma = class_representative(
        subfield_order_k(m, k), k, which,
        [](const FpElem& e) { return e.residue(); });
    trace = gamma + inv(gamma);
  } else {
    const Fp2Elem gamma = class_representative(
        norm1_order_k(m, k), k, which,
        [](const Fp2Elem& e) { return encoding(e); });
    const Fp2Elem sum = gamma + inv(gamma);
    assert(sum.in_subfield());  // gamma^-1 is the conjugate, so w-parts cancel
    trace = sum.c0();
  }

  // gamma and gamma^-1 are the roots of t^2 + (a^-1 b^2 + 2) t + 1, so
  // gamma + gamma^-1 = -(a^-1 b^2 + 2) and a = -b^2 (trace + 2)^-1;
  // trace + 2 = (gamma+1)^2 gamma^-1 is a unit exactly because
  // ord(gamma) != 2.
  const FpElem a = -(b * b * inv(trace + FpElem(2, m)));
  return {a, b};
}

}  // namespace iprng
