#pragma once

#include <cstdint>
#include <vector>

#include "iprng/census.hpp"

namespace iprng {

struct DesignTriple {
  uint64_t a, b, x0;
  uint64_t period;  // measured, equal to the requested target
};

/// Deterministically constructs up to `count` distinct triples whose
/// measured period equals `target`. Periods 1, 2 and N-1 come from the
/// closed-form parameter templates; everything else goes through
/// params_from_gamma with k = target+1 (zero-hitting orbits) and then
/// k = target (zero-free orbits). Every triple is re-measured before it is
/// returned; a mismatch throws Error. Returns fewer than `count` only when
/// the family holds fewer instances. The caller is expected to check
/// achievable_periods first; an unachievable target yields an empty vector.
std::vector<DesignTriple> design_triples(const PrimeModulus& m, uint64_t target,
                                         size_t count);

}  // namespace iprng
