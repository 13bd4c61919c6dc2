// Command-line surface: period query, sequence dump, census verification,
// achievable-period listing and parameter design, with CSV output suitable
// for plotting.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "iprng/design.hpp"
#include "iprng/errors.hpp"

namespace {

// exit-code contract: 0 ok, 1 usage/unachievable, 2 verification mismatch,
// 3 invalid modulus, 4 size guard, 5 internal inconsistency
enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kMismatch = 2,
  kBadModulus = 3,
  kSizeGuard = 4,
  kInternal = 5,
};

struct Options {
  uint64_t modulus = 0;
  int64_t a = 0, b = 0, x0 = 0;
  uint64_t count = 0;
  uint64_t target_period = 0;
  std::string family = "all";
  std::string method = "both";
  unsigned workers = 1;
  std::string output_path;
  bool force_large = false;
  bool verify = false;
  bool scatter = false;
};

uint64_t reduce_input(int64_t value, uint64_t n, const char* name) {
  const int64_t sn = static_cast<int64_t>(n);
  if (value >= 0 && value < sn) return static_cast<uint64_t>(value);
  const uint64_t reduced = static_cast<uint64_t>(((value % sn) + sn) % sn);
  std::cerr << "warning: " << name << "=" << value << " reduced mod " << n
            << " to " << reduced << "\n";
  return reduced;
}

iprng::Family parse_family(const std::string& name) {
  if (name == "ab-zero") return iprng::Family::AbZero;
  if (name == "units") return iprng::Family::Units;
  return iprng::Family::All;
}

// stdout by default, file when --output was given
class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw iprng::Error("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_period(const iprng::PrimeModulus& m, const Options& opt) {
  const iprng::IprngParams params(m, reduce_input(opt.a, m.value(), "a"),
                                  reduce_input(opt.b, m.value(), "b"),
                                  reduce_input(opt.x0, m.value(), "x0"));
  OutputStream out(opt.output_path);

  std::optional<iprng::PeriodResult> measured;
  std::optional<iprng::PeriodClass> predicted;
  if (opt.method == "brute" || opt.method == "both") {
    measured = iprng::measure_period(params);
    out.get() << "preperiod=" << measured->preperiod
              << " period=" << measured->period
              << " hits_zero=" << (measured->hits_zero ? "true" : "false")
              << "\n";
  }
  if (opt.method == "analytic" || opt.method == "both") {
    predicted = iprng::predict_period(params);
    out.get() << "tag=" << iprng::to_string(predicted->tag) << " k=";
    if (predicted->k) {
      out.get() << *predicted->k;
    } else {
      out.get() << "-";
    }
    out.get() << " predicted_period=" << predicted->predicted_period << "\n";
  }
  if (measured && predicted) {
    const bool match = measured->period == predicted->predicted_period;
    out.get() << "match=" << (match ? "true" : "false") << "\n";
    if (!match) return kMismatch;
  }
  return kOk;
}

int run_seq(const iprng::PrimeModulus& m, const Options& opt) {
  const iprng::IprngParams params(m, reduce_input(opt.a, m.value(), "a"),
                                  reduce_input(opt.b, m.value(), "b"),
                                  reduce_input(opt.x0, m.value(), "x0"));
  OutputStream out(opt.output_path);
  for (const iprng::FpElem& x : iprng::sequence(params, opt.count)) {
    out.get() << x.residue() << "\n";
  }
  return kOk;
}

int run_census(const iprng::PrimeModulus& m, const Options& opt) {
  if (m.value() > 512 && !opt.force_large) return kSizeGuard;
  const iprng::Family family = parse_family(opt.family);
  OutputStream out(opt.output_path);
  if (opt.scatter) {
    iprng::scatter_dump(m, family, out.get(), opt.force_large);
    return kOk;
  }
  const iprng::DistributionTable analytic =
      iprng::analytic_distribution(m, family);
  if (!opt.verify) {
    iprng::write_census_csv(out.get(), analytic);
    return kOk;
  }
  const iprng::DistributionTable brute = iprng::brute_force_distribution(
      m, family, opt.workers, opt.force_large);
  const iprng::CompareReport report = iprng::compare(analytic, brute);
  iprng::write_census_csv(out.get(), report);
  return report.all_match ? kOk : kMismatch;
}

int run_periods(const iprng::PrimeModulus& m, const Options& opt) {
  const iprng::DistributionTable table =
      iprng::analytic_distribution(m, parse_family(opt.family));
  OutputStream out(opt.output_path);
  out.get() << "period,count\n";
  for (const auto& [period, count] : table.counts) {
    if (count > 0) out.get() << period << ',' << count << "\n";
  }
  return kOk;
}

int run_design(const iprng::PrimeModulus& m, const Options& opt) {
  const auto achievable = iprng::achievable_periods(m);
  const bool ok = std::find(achievable.begin(), achievable.end(),
                            opt.target_period) != achievable.end();
  if (!ok) {
    std::cerr << "period " << opt.target_period << " is not achievable for N="
              << m.value() << "; achievable periods:";
    for (uint64_t p : achievable) std::cerr << ' ' << p;
    std::cerr << "\n";
    return kUsage;
  }
  const size_t count = opt.count == 0 ? 1 : opt.count;
  const auto triples = iprng::design_triples(m, opt.target_period, count);
  if (triples.empty()) return kInternal;
  if (triples.size() < count) {
    std::cerr << "warning: only " << triples.size() << " of " << count
              << " requested instances exist\n";
  }
  OutputStream out(opt.output_path);
  out.get() << "a,b,x0,period\n";
  for (const auto& t : triples) {
    out.get() << t.a << ',' << t.b << ',' << t.x0 << ',' << t.period << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inversive generator period analysis over prime fields"};
  app.require_subcommand(1);
  Options opt;

  auto add_modulus = [&](CLI::App* cmd) {
    cmd->add_option("-N,--modulus", opt.modulus, "prime modulus, N > 3")
        ->required();
  };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("-a", opt.a, "parameter a")->required();
    cmd->add_option("-b", opt.b, "parameter b")->required();
    cmd->add_option("-x,--x0", opt.x0, "initial value x0")->required();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", opt.output_path, "write to file instead of stdout");
  };

  CLI::App* period = app.add_subcommand("period", "measure and/or predict one period");
  add_modulus(period);
  add_params(period);
  period->add_option("--method", opt.method, "brute | analytic | both")
      ->check(CLI::IsMember({"brute", "analytic", "both"}))
      ->capture_default_str();
  add_output(period);

  CLI::App* seq = app.add_subcommand("seq", "print x_1..x_n");
  add_modulus(seq);
  add_params(seq);
  seq->add_option("-n,--count", opt.count, "number of terms")->required();
  add_output(seq);

  CLI::App* census = app.add_subcommand("census", "period distribution of a family");
  add_modulus(census);
  census->add_option("--family", opt.family, "ab-zero | units | all")
      ->check(CLI::IsMember({"ab-zero", "units", "all"}))
      ->capture_default_str();
  auto* verify_flag =
      census->add_flag("--verify", opt.verify, "also brute-force and compare");
  census->add_flag("--scatter", opt.scatter,
                   "emit one measured record per instance instead of the histogram")
      ->excludes(verify_flag);
  census->add_option("--workers", opt.workers, "enumeration threads")
      ->capture_default_str();
  census->add_flag("--force-large", opt.force_large, "lift the N > 512 guard");
  add_output(census);

  CLI::App* periods = app.add_subcommand("periods", "achievable periods with counts");
  add_modulus(periods);
  periods->add_option("--family", opt.family, "ab-zero | units | all")
      ->check(CLI::IsMember({"ab-zero", "units", "all"}))
      ->capture_default_str();
  add_output(periods);

  CLI::App* design = app.add_subcommand("design", "construct triples of a given period");
  add_modulus(design);
  design->add_option("--period", opt.target_period, "target period")->required();
  design->add_option("-n,--count", opt.count, "number of triples")
      ->capture_default_str();
  add_output(design);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const iprng::PrimeModulus m(opt.modulus);
    if (period->parsed()) return run_period(m, opt);
    if (seq->parsed()) return run_seq(m, opt);
    if (census->parsed()) return run_census(m, opt);
    if (periods->parsed()) return run_periods(m, opt);
    if (design->parsed()) return run_design(m, opt);
    return kUsage;
  } catch (const iprng::NotPrime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadModulus;
  } catch (const iprng::ModulusTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadModulus;
  } catch (const iprng::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const iprng::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
