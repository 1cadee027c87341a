// Python bindings for the core operations: period/function evaluation,
// point counting, genus, Hasse invariants, zeta pairs, and the verification
// harness.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "applf/appell.hpp"
#include "applf/classical.hpp"
#include "applf/curves.hpp"
#include "applf/errors.hpp"
#include "applf/field.hpp"
#include "applf/verify.hpp"

namespace py = pybind11;
using namespace applf;

namespace {

py::dict cyc_to_dict(const CycValue& v) {
  py::dict out;
  out["level"] = v.level();
  out["coeffs"] = v.coeffs();
  return out;
}

AppellParams build_params(const PrimeField& f, i64 a, const std::vector<i64>& bs,
                          i64 c, const std::vector<i64>& lambdas) {
  AppellParams params{Character(f, a), {}, Character(f, c), lambdas};
  for (i64 b : bs) params.bs.push_back(Character(f, b));
  return params;
}

Mode parse_mode(const std::string& mode, std::uint64_t seed, std::uint64_t samples) {
  if (mode == "exhaustive") return Mode::exhaustive();
  if (mode == "sample") return Mode::sampled(seed, samples);
  if (mode != "auto") fail(ErrorCode::DomainError, "mode must be auto, exhaustive or sample");
  Mode m;
  m.seed = seed;
  m.samples = samples;
  return m;
}

py::dict report_to_dict(const VerificationReport& report) {
  py::dict out;
  out["identity"] = identity_name(report.id);
  out["prime"] = report.prime;
  out["mode"] = report.exhaustive ? "exhaustive" : "sampled";
  if (!report.exhaustive) {
    out["seed"] = report.seed;
    out["samples_requested"] = report.samples_requested;
  }
  out["cases_checked"] = report.cases_checked;
  out["failure_count"] = report.failure_count;
  py::list failures;
  for (const auto& ce : report.failures) {
    py::dict item;
    for (const auto& [name, value] : ce.values) item[py::str(name)] = value;
    failures.append(item);
  }
  out["failures"] = failures;
  if (!report.note.empty()) out["note"] = report.note;
  out["pass"] = report.pass();
  return out;
}

}  // namespace

PYBIND11_MODULE(_applf, m) {
  m.doc() = "finite-field Appell-Lauricella toolkit";

  py::register_exception<Error>(m, "ApplfError", PyExc_ValueError);

  m.def(
      "eval_pd",
      [](i64 p, i64 a, const std::vector<i64>& bs, i64 c,
         const std::vector<i64>& lambdas) {
        PrimeField f(p);
        return cyc_to_dict(pdn(build_params(f, a, bs, c, lambdas)));
      },
      py::arg("p"), py::arg("a"), py::arg("bs"), py::arg("c"), py::arg("lambdas"),
      "Exact period sum; returns {'level': n, 'coeffs': [...]}.");

  m.def(
      "eval_fd",
      [](i64 p, i64 a, const std::vector<i64>& bs, i64 c,
         const std::vector<i64>& lambdas) {
        PrimeField f(p);
        CycFraction v = fdn(build_params(f, a, bs, c, lambdas));
        py::dict out;
        out["num"] = cyc_to_dict(v.num());
        out["den"] = cyc_to_dict(v.den());
        return out;
      },
      py::arg("p"), py::arg("a"), py::arg("bs"), py::arg("c"), py::arg("lambdas"),
      "Normalized function as an exact numerator/denominator pair.");

  m.def(
      "count_points",
      [](i64 p, i64 N, i64 i, i64 j, const std::vector<i64>& ks,
         const std::vector<i64>& lambdas, bool naive) {
        PrimeField f(p);
        CurveInstance inst{CurveSpec{N, i, j, ks}, lambdas, &f};
        return naive ? count_points_naive(inst) : count_points_formula(inst);
      },
      py::arg("p"), py::arg("N"), py::arg("i"), py::arg("j"), py::arg("ks"),
      py::arg("lambdas"), py::arg("naive") = false);

  m.def(
      "trace",
      [](i64 p, i64 N, i64 i, i64 j, const std::vector<i64>& ks,
         const std::vector<i64>& lambdas) {
        PrimeField f(p);
        CurveInstance inst{CurveSpec{N, i, j, ks}, lambdas, &f};
        return trace_of_frobenius(inst);
      },
      py::arg("p"), py::arg("N"), py::arg("i"), py::arg("j"), py::arg("ks"),
      py::arg("lambdas"));

  m.def(
      "genus",
      [](i64 N, i64 i, i64 j, const std::vector<i64>& ks) {
        return genus_picard(CurveSpec{N, i, j, ks});
      },
      py::arg("N"), py::arg("i"), py::arg("j"), py::arg("ks"));

  m.def("hasse_invariant", &hasse_invariant, py::arg("p"), py::arg("s"),
        py::arg("t"));

  m.def("zeta_pair", &zeta_pair, py::arg("p"), py::arg("lam"), py::arg("mu"));

  m.def("list_identities", [] {
    std::vector<std::string> names;
    for (IdentityId id : all_identities()) names.emplace_back(identity_name(id));
    return names;
  });

  m.def(
      "verify",
      [](const std::string& name, i64 p, const std::string& mode,
         std::uint64_t seed, std::uint64_t samples) {
        return report_to_dict(verify_identity(identity_from_name(name), p,
                                              parse_mode(mode, seed, samples)));
      },
      py::arg("identity"), py::arg("p"), py::arg("mode") = "auto",
      py::arg("seed") = kDefaultSampleSeed,
      py::arg("samples") = kDefaultSampleCount);

  m.def(
      "sweep",
      [](const std::string& name, i64 lo, i64 hi, const std::string& mode,
         std::uint64_t seed, std::uint64_t samples) {
        py::list out;
        for (const auto& entry : applf::sweep(identity_from_name(name), lo, hi,
                                              parse_mode(mode, seed, samples))) {
          if (entry.skipped) {
            py::dict item;
            item["prime"] = entry.prime;
            item["skipped"] = true;
            item["reason"] = entry.skip_reason;
            out.append(item);
          } else {
            out.append(report_to_dict(*entry.report));
          }
        }
        return out;
      },
      py::arg("identity"), py::arg("lo"), py::arg("hi"), py::arg("mode") = "auto",
      py::arg("seed") = kDefaultSampleSeed,
      py::arg("samples") = kDefaultSampleCount);
}
