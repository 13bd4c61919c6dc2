#include "iprng/design.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "iprng/errors.hpp"

namespace iprng {

namespace {

class TripleCollector {
 public:
  TripleCollector(const PrimeModulus& m, uint64_t target, size_t count)
      : m_(m), target_(target), count_(count) {}

  // returns false once enough triples were collected
  bool offer(uint64_t a, uint64_t b, uint64_t x0) {
    if (full()) return false;
    if (!seen_.insert({a, b, x0}).second) return true;
    const PeriodResult r = measure_period(IprngParams(m_, a, b, x0));
    if (r.period != target_) {
      throw Error("designer produced a wrong-period instance");
    }
    out_.push_back({a, b, x0, r.period});
    return !full();
  }

  bool full() const { return out_.size() >= count_; }
  std::vector<DesignTriple> take() { return std::move(out_); }

 private:
  const PrimeModulus& m_;
  uint64_t target_;
  size_t count_;
  std::set<std::tuple<uint64_t, uint64_t, uint64_t>> seen_;
  std::vector<DesignTriple> out_;
};

// Fixed-point templates: a = 0; b = 0 with x0 = 0 or a = x0^2; the double
// root started on its root; a split root pair started on a root.
void period_one_candidates(const PrimeModulus& m, TripleCollector& sink) {
  const uint64_t n = m.value();
  for (uint64_t b = 0; b < n; ++b)
    for (uint64_t x0 = 0; x0 < n; ++x0)
      if (!sink.offer(0, b, x0)) return;
  for (uint64_t a = 1; a < n; ++a)
    if (!sink.offer(a, 0, 0)) return;
  for (uint64_t x0 = 1; x0 < n; ++x0)
    if (!sink.offer(mul_mod(x0, x0, n), 0, x0)) return;
  for (uint64_t alpha = 1; alpha < n; ++alpha) {
    const uint64_t a = n - mul_mod(alpha, alpha, n);
    if (!sink.offer(a, (2 * alpha) % n, alpha)) return;
  }
  for (uint64_t alpha = 1; alpha < n; ++alpha) {
    for (uint64_t beta = alpha + 1; beta < n; ++beta) {
      if ((alpha + beta) % n == 0) continue;
      const uint64_t a = n - mul_mod(alpha, beta, n);
      const uint64_t b = (alpha + beta) % n;
      if (a == 0) continue;
      if (!sink.offer(a, b, alpha) || !sink.offer(a, b, beta)) return;
    }
  }
}

// Swap template: b = 0, x0 a unit, a a unit with a != x0^2.
void period_two_candidates(const PrimeModulus& m, TripleCollector& sink) {
  const uint64_t n = m.value();
  for (uint64_t x0 = 1; x0 < n; ++x0) {
    const uint64_t square = mul_mod(x0, x0, n);
    for (uint64_t a = 1; a < n; ++a) {
      if (a == square) continue;
      if (!sink.offer(a, 0, x0)) return;
    }
  }
}

// Double-root template: a = -alpha^2, b = 2*alpha, any x0 != alpha.
void full_period_candidates(const PrimeModulus& m, TripleCollector& sink) {
  const uint64_t n = m.value();
  for (uint64_t alpha = 1; alpha < n; ++alpha) {
    const uint64_t a = n - mul_mod(alpha, alpha, n);
    const uint64_t b = (2 * alpha) % n;
    for (uint64_t x0 = 0; x0 < n; ++x0) {
      if (x0 == alpha) continue;
      if (!sink.offer(a, b, x0)) return;
    }
  }
}

// Root-ratio route: (a, b) from params_from_gamma, x0 scanned for the
// requested omega-membership.
void gamma_route_candidates(const PrimeModulus& m, uint64_t k, bool zero_hit,
                            TripleCollector& sink) {
  const uint64_t n = m.value();
  if (k <= 2) return;
  const bool divides_minus = (n - 1) % k == 0;
  const bool divides_plus = (n + 1) % k == 0;
  if (!divides_minus && !divides_plus) return;
  if (!zero_hit) {
    // no zero-free orbits when gamma generates the whole group
    if (divides_minus && k == n - 1) return;
    if (divides_plus && k == n + 1) return;
  }

  const uint64_t classes = std::max<uint64_t>(1, euler_phi(k) / 2);
  for (uint64_t which = 0; which < classes; ++which) {
    for (uint64_t b = 1; b < n; ++b) {
      const auto [a_elem, b_elem] =
          params_from_gamma(m, k, FpElem(b, m), which);
      const RootData roots = find_roots(a_elem, b_elem);
      for (uint64_t x0 = 0; x0 < n; ++x0) {
        const FpElem x(x0, m);
        if (roots.location == RootLocation::Subfield) {
          const auto& [alpha, beta] = *roots.fp_roots;
          if (x == alpha || x == beta) continue;
        }
        if (ratio_in_omega(roots, x) != zero_hit) continue;
        if (!sink.offer(a_elem.residue(), b, x0)) return;
      }
    }
  }
}

}  // namespace

std::vector<DesignTriple> design_triples(const PrimeModulus& m, uint64_t target,
                                         size_t count) {
  const uint64_t n = m.value();
  TripleCollector sink(m, target, count);

  if (target == 1) {
    period_one_candidates(m, sink);
  } else if (target == 2) {
    period_two_candidates(m, sink);
    if (!sink.full()) gamma_route_candidates(m, 3, /*zero_hit=*/true, sink);
  } else if (target == n - 1) {
    full_period_candidates(m, sink);
  } else if (target >= 3 && target <= n) {
    gamma_route_candidates(m, target + 1, /*zero_hit=*/true, sink);
    if (!sink.full()) gamma_route_candidates(m, target, /*zero_hit=*/false, sink);
  }
  return sink.take();
}

}  // namespace iprng
