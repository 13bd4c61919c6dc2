#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "iprng/analytic.hpp"

namespace iprng {

/// Parameter families: ab = 0, both units, or every triple.
enum class Family { AbZero, Units, All };

enum class Source { Analytic, BruteForce };

const char* to_string(Family family);

/// Period histogram for one family. AB_ZERO totals 2N^2-N, UNITS totals
/// N(N-1)^2, ALL totals N^3.
struct DistributionTable {
  uint64_t modulus = 0;
  Family family = Family::All;
  Source source = Source::Analytic;
  std::map<uint64_t, uint64_t> counts;

  uint64_t total() const;
};

/// The closed-form distribution:
///   AB_ZERO: {1: N^2+2N-2, 2: (N-2)(N-1)}
///   UNITS:   period 1 gets (N-2)(N-1), period N-1 gets (N-1)^2, and for
///            every divisor k > 2 of N-1 resp. N+1, period k-1 gets
///            (k-1)(N-1)phi(k)/2 and period k gets (N-k-1)(N-1)phi(k)/2
///            resp. (N-(k-1))(N-1)phi(k)/2 while k stays below the group
///            order. The two zero-free budgets differ because the subfield
///            case spends two x0 on the roots themselves.
///   ALL:     pointwise sum of both.
DistributionTable analytic_distribution(const PrimeModulus& m, Family family);

/// Exhaustive histogram over the family in lexicographic (a, b, x0) order.
/// Partitioned across `workers` threads; the merged result is independent
/// of the worker count. Throws TooLarge for N > 512 unless force_large.
DistributionTable brute_force_distribution(const PrimeModulus& m, Family family,
                                           unsigned workers = 1,
                                           bool force_large = false);

struct CompareRow {
  uint64_t period;
  uint64_t analytic_count;
  uint64_t measured_count;
  bool match;
};

struct CompareReport {
  uint64_t modulus;
  Family family;
  std::vector<CompareRow> rows;  // ascending by period
  bool all_match;
};

/// Per-period comparison of an analytic and a measured table.
/// Throws FamilyMismatch when modulus or family differ.
CompareReport compare(const DistributionTable& analytic,
                      const DistributionTable& brute);

/// The periods with nonzero count in analytic_distribution(m, All).
std::vector<uint64_t> achievable_periods(const PrimeModulus& m);

struct ScatterRecord {
  uint64_t index;  // lexicographic rank of (a, b, x0) within the family
  uint64_t a, b, x0;
  uint64_t period;
};

/// One measured record per family instance; the raw points behind the
/// period-distribution plots.
std::vector<ScatterRecord> scatter_records(const PrimeModulus& m, Family family,
                                           bool force_large = false);

/// Streams scatter records as CSV: index,a,b,x0,period.
void scatter_dump(const PrimeModulus& m, Family family, std::ostream& out,
                  bool force_large = false);

/// CSV: period,analytic_count,measured_count,match.
void write_census_csv(std::ostream& out, const CompareReport& report);

/// Same columns without measurements (unverified run leaves them empty).
void write_census_csv(std::ostream& out, const DistributionTable& analytic);

}  // namespace iprng
