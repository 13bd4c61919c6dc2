// Python bindings for the main operations. All entry points take plain
// integers; the prime modulus is validated and its factorizations built on
// each call, which is cheap at the scales the library targets.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "iprng/design.hpp"
#include "iprng/errors.hpp"

namespace py = pybind11;

namespace {

iprng::Family family_from_string(const std::string& name) {
  if (name == "ab-zero") return iprng::Family::AbZero;
  if (name == "units") return iprng::Family::Units;
  if (name == "all") return iprng::Family::All;
  throw py::value_error("family must be one of 'ab-zero', 'units', 'all'");
}

std::map<uint64_t, uint64_t> table_counts(const iprng::DistributionTable& t) {
  return t.counts;
}

}  // namespace

PYBIND11_MODULE(_iprng, m) {
  m.doc() = "Period analysis of inversive generators x -> a*x^-1 + b over Z_N";

  py::register_exception<iprng::Error>(m, "IprngError", PyExc_ValueError);

  py::class_<iprng::PeriodResult>(m, "PeriodResult")
      .def_readonly("preperiod", &iprng::PeriodResult::preperiod)
      .def_readonly("period", &iprng::PeriodResult::period)
      .def_readonly("hits_zero", &iprng::PeriodResult::hits_zero)
      .def("__repr__", [](const iprng::PeriodResult& r) {
        return "PeriodResult(preperiod=" + std::to_string(r.preperiod) +
               ", period=" + std::to_string(r.period) +
               ", hits_zero=" + (r.hits_zero ? std::string("True") : "False") +
               ")";
      });

  py::class_<iprng::PeriodClass>(m, "PeriodClass")
      .def_property_readonly("tag",
                             [](const iprng::PeriodClass& c) {
                               return std::string(iprng::to_string(c.tag));
                             })
      .def_readonly("k", &iprng::PeriodClass::k)
      .def_readonly("predicted_period", &iprng::PeriodClass::predicted_period)
      .def("__repr__", [](const iprng::PeriodClass& c) {
        return "PeriodClass(tag=" + std::string(iprng::to_string(c.tag)) +
               ", k=" + (c.k ? std::to_string(*c.k) : std::string("None")) +
               ", predicted_period=" + std::to_string(c.predicted_period) + ")";
      });

  m.def("is_prime", &iprng::is_prime, py::arg("n"));
  m.def(
      "factorize",
      [](uint64_t n) {
        std::vector<std::pair<uint64_t, int>> out;
        for (const auto& f : iprng::factorize(n))
          out.emplace_back(f.prime, f.exponent);
        return out;
      },
      py::arg("n"));
  m.def("divisors", &iprng::divisors, py::arg("n"));
  m.def("euler_phi", &iprng::euler_phi, py::arg("n"));

  m.def(
      "step",
      [](uint64_t n, uint64_t a, uint64_t b, uint64_t x) {
        const iprng::PrimeModulus m(n);
        return iprng::step(iprng::IprngParams(m, a, b, 0), iprng::FpElem(x, m))
            .residue();
      },
      py::arg("N"), py::arg("a"), py::arg("b"), py::arg("x"));

  m.def(
      "sequence",
      [](uint64_t n, uint64_t a, uint64_t b, uint64_t x0, size_t count) {
        const iprng::PrimeModulus m(n);
        std::vector<uint64_t> out;
        for (const auto& x :
             iprng::sequence(iprng::IprngParams(m, a, b, x0), count))
          out.push_back(x.residue());
        return out;
      },
      py::arg("N"), py::arg("a"), py::arg("b"), py::arg("x0"),
      py::arg("count"));

  m.def(
      "lfsr_sequence",
      [](uint64_t n, uint64_t a, uint64_t b, uint64_t x0, size_t count) {
        const iprng::PrimeModulus m(n);
        std::vector<uint64_t> out;
        for (const auto& y :
             iprng::lfsr_sequence(iprng::IprngParams(m, a, b, x0), count))
          out.push_back(y.residue());
        return out;
      },
      py::arg("N"), py::arg("a"), py::arg("b"), py::arg("x0"),
      py::arg("count"));

  m.def(
      "measure_period",
      [](uint64_t n, uint64_t a, uint64_t b, uint64_t x0) {
        const iprng::PrimeModulus m(n);
        return iprng::measure_period(iprng::IprngParams(m, a, b, x0));
      },
      py::arg("N"), py::arg("a"), py::arg("b"), py::arg("x0"));

  m.def(
      "predict_period",
      [](uint64_t n, uint64_t a, uint64_t b, uint64_t x0) {
        const iprng::PrimeModulus m(n);
        return iprng::predict_period(iprng::IprngParams(m, a, b, x0));
      },
      py::arg("N"), py::arg("a"), py::arg("b"), py::arg("x0"));

  m.def(
      "analytic_distribution",
      [](uint64_t n, const std::string& family) {
        const iprng::PrimeModulus m(n);
        return table_counts(
            iprng::analytic_distribution(m, family_from_string(family)));
      },
      py::arg("N"), py::arg("family") = "all");

  m.def(
      "brute_force_distribution",
      [](uint64_t n, const std::string& family, unsigned workers,
         bool force_large) {
        const iprng::PrimeModulus m(n);
        return table_counts(iprng::brute_force_distribution(
            m, family_from_string(family), workers, force_large));
      },
      py::arg("N"), py::arg("family") = "all", py::arg("workers") = 1,
      py::arg("force_large") = false);

  m.def(
      "achievable_periods",
      [](uint64_t n) {
        const iprng::PrimeModulus m(n);
        return iprng::achievable_periods(m);
      },
      py::arg("N"));

  m.def(
      "scatter_records",
      [](uint64_t n, const std::string& family, bool force_large) {
        const iprng::PrimeModulus m(n);
        std::vector<std::tuple<uint64_t, uint64_t, uint64_t, uint64_t, uint64_t>>
            out;
        for (const auto& r : iprng::scatter_records(
                 m, family_from_string(family), force_large))
          out.emplace_back(r.index, r.a, r.b, r.x0, r.period);
        return out;
      },
      py::arg("N"), py::arg("family") = "all", py::arg("force_large") = false);

  m.def(
      "design",
      [](uint64_t n, uint64_t period, size_t count) {
        const iprng::PrimeModulus m(n);
        std::vector<std::tuple<uint64_t, uint64_t, uint64_t>> out;
        for (const auto& t : iprng::design_triples(m, period, count))
          out.emplace_back(t.a, t.b, t.x0);
        return out;
      },
      py::arg("N"), py::arg("period"), py::arg("count") = 1);
}
