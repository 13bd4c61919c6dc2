#include "iprng/census.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include "iprng/errors.hpp"

namespace iprng {

namespace {

constexpr uint64_t kEnumerationGuard = 512;

// (a, b) pairs of a family in lexicographic order
std::vector<std::pair<uint64_t, uint64_t>> family_pairs(uint64_t n,
                                                        Family family) {
  std::vector<std::pair<uint64_t, uint64_t>> pairs;
  switch (family) {
    case Family::AbZero:
      for (uint64_t b = 0; b < n; ++b) pairs.emplace_back(0, b);
      for (uint64_t a = 1; a < n; ++a) pairs.emplace_back(a, 0);
      break;
    case Family::Units:
      for (uint64_t a = 1; a < n; ++a)
        for (uint64_t b = 1; b < n; ++b) pairs.emplace_back(a, b);
      break;
    case Family::All:
      for (uint64_t a = 0; a < n; ++a)
        for (uint64_t b = 0; b < n; ++b) pairs.emplace_back(a, b);
      break;
  }
  return pairs;
}

void guard_size(const PrimeModulus& m, bool force_large) {
  if (m.value() > kEnumerationGuard && !force_large) throw TooLarge();
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::AbZero: return "ab-zero";
    case Family::Units: return "units";
    case Family::All: return "all";
  }
  return "?";
}

uint64_t DistributionTable::total() const {
  uint64_t sum = 0;
  for (const auto& [period, count] : counts) sum += count;
  return sum;
}

DistributionTable analytic_distribution(const PrimeModulus& m, Family family) {
  const uint64_t n = m.value();
  DistributionTable table;
  table.modulus = n;
  table.family = family;
  table.source = Source::Analytic;

  if (family == Family::AbZero || family == Family::All) {
    table.counts[1] += n * n + 2 * n - 2;
    table.counts[2] += (n - 2) * (n - 1);
  }
  if (family == Family::Units || family == Family::All) {
    table.counts[1] += (n - 2) * (n - 1);      // fixed points of both root cases
    table.counts[n - 1] += (n - 1) * (n - 1);  // double root, x0 != alpha

    for (uint64_t k : divisors(n - 1)) {
      if (k <= 2) continue;
      const uint64_t half_phi = euler_phi(k) / 2;
      table.counts[k - 1] += (k - 1) * (n - 1) * half_phi;
      if (k < n - 1) {
        // two of the x0 budget are the roots themselves
        table.counts[k] += (n - k - 1) * (n - 1) * half_phi;
      }
    }
    for (uint64_t k : divisors(n + 1)) {
      if (k <= 2) continue;
      const uint64_t half_phi = euler_phi(k) / 2;
      table.counts[k - 1] += (k - 1) * (n - 1) * half_phi;
      if (k < n + 1) {
        table.counts[k] += (n - (k - 1)) * (n - 1) * half_phi;
      }
    }
  }
  return table;
}

DistributionTable brute_force_distribution(const PrimeModulus& m, Family family,
                                           unsigned workers, bool force_large) {
  guard_size(m, force_large);
  const uint64_t n = m.value();
  const auto pairs = family_pairs(n, family);

  const unsigned thread_count =
      std::max(1u, std::min<unsigned>(workers, pairs.size()));
  std::vector<std::map<uint64_t, uint64_t>> partial(thread_count);
  std::vector<std::thread> threads;

  auto run_slice = [&](unsigned t) {
    const size_t begin = pairs.size() * t / thread_count;
    const size_t end = pairs.size() * (t + 1) / thread_count;
    auto& local = partial[t];
    for (size_t i = begin; i < end; ++i) {
      const auto [a, b] = pairs[i];
      for (uint64_t x0 = 0; x0 < n; ++x0) {
        ++local[measure_period(IprngParams(m, a, b, x0)).period];
      }
    }
  };

  if (thread_count == 1) {
    run_slice(0);
  } else {
    for (unsigned t = 0; t < thread_count; ++t)
      threads.emplace_back(run_slice, t);
    for (auto& t : threads) t.join();
  }

  DistributionTable table;
  table.modulus = n;
  table.family = family;
  table.source = Source::BruteForce;
  for (const auto& local : partial) {
    for (const auto& [period, count] : local) table.counts[period] += count;
  }
  return table;
}

CompareReport compare(const DistributionTable& analytic,
                      const DistributionTable& brute) {
  if (analytic.modulus != brute.modulus || analytic.family != brute.family) {
    throw FamilyMismatch();
  }
  CompareReport report;
  report.modulus = analytic.modulus;
  report.family = analytic.family;
  report.all_match = true;

  std::vector<uint64_t> periods;
  for (const auto& [p, c] : analytic.counts) periods.push_back(p);
  for (const auto& [p, c] : brute.counts) periods.push_back(p);
  std::sort(periods.begin(), periods.end());
  periods.erase(std::unique(periods.begin(), periods.end()), periods.end());

  for (uint64_t p : periods) {
    auto lookup = [p](const DistributionTable& t) {
      const auto it = t.counts.find(p);
      return it == t.counts.end() ? uint64_t{0} : it->second;
    };
    CompareRow row{p, lookup(analytic), lookup(brute),
                   lookup(analytic) == lookup(brute)};
    report.all_match = report.all_match && row.match;
    report.rows.push_back(row);
  }
  return report;
}

std::vector<uint64_t> achievable_periods(const PrimeModulus& m) {
  std::vector<uint64_t> out;
  for (const auto& [period, count] : analytic_distribution(m, Family::All).counts) {
    if (count > 0) out.push_back(period);
  }
  return out;
}

std::vector<ScatterRecord> scatter_records(const PrimeModulus& m, Family family,
                                           bool force_large) {
  guard_size(m, force_large);
  const uint64_t n = m.value();
  std::vector<ScatterRecord> records;
  uint64_t index = 0;
  for (const auto& [a, b] : family_pairs(n, family)) {
    for (uint64_t x0 = 0; x0 < n; ++x0) {
      records.push_back(
          {index++, a, b, x0, measure_period(IprngParams(m, a, b, x0)).period});
    }
  }
  return records;
}

void scatter_dump(const PrimeModulus& m, Family family, std::ostream& out,
                  bool force_large) {
  guard_size(m, force_large);
  const uint64_t n = m.value();
  out << "index,a,b,x0,period\n";
  uint64_t index = 0;
  for (const auto& [a, b] : family_pairs(n, family)) {
    for (uint64_t x0 = 0; x0 < n; ++x0) {
      out << index++ << ',' << a << ',' << b << ',' << x0 << ','
          << measure_period(IprngParams(m, a, b, x0)).period << '\n';
    }
  }
}

void write_census_csv(std::ostream& out, const CompareReport& report) {
  out << "period,analytic_count,measured_count,match\n";
  for (const CompareRow& row : report.rows) {
    out << row.period << ',' << row.analytic_count << ',' << row.measured_count
        << ',' << (row.match ? "true" : "false") << '\n';
  }
}

void write_census_csv(std::ostream& out, const DistributionTable& analytic) {
  out << "period,analytic_count,measured_count,match\n";
  for (const auto& [period, count] : analytic.counts) {
    out << period << ',' << count << ",,\n";
  }
}

}  // namespace iprng
