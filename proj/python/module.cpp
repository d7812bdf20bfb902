#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dorder/errors.hpp"
#include "dorder/fractional_operators.hpp"
#include "dorder/io.hpp"
#include "dorder/solvers.hpp"
#include "dorder/special_functions.hpp"
#include "dorder/spectrum.hpp"
#include "dorder/verification.hpp"

namespace py = pybind11;
using namespace dorder;

namespace {

QuadratureConfig make_config(double abs_tol, double rel_tol) {
  QuadratureConfig c;
  c.abs_tol = abs_tol;
  c.rel_tol = rel_tol;
  c.validate();
  return c;
}

// lambda either as a value (principal branch) or as the lattice root k
Eigenvalue pick_lambda(std::optional<Complex> lam, std::optional<int> k, double beta) {
  if (lam.has_value() == k.has_value()) throw_invalid("give exactly one of lam or k");
  if (k) {
    if (*k == 0) throw_invalid("k must be nonzero");
    return lattice_root(*k, beta);
  }
  return Eigenvalue::from_value(*lam);
}

py::dict diagnostics_dict(const SeriesDiagnostics& d) {
  py::dict h, den;
  for (const auto& [k, v] : d.h_values) h[py::int_(k)] = v;
  for (const auto& [k, v] : d.denominators) den[py::int_(k)] = v;
  py::dict out;
  out["h_values"] = h;
  out["denominators"] = den;
  out["min_denominator"] = d.min_denominator;
  out["neglected_tail"] = d.neglected_tail;
  out["zero_projection"] = d.zero_projection;
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::list checks;
  for (const CheckResult& c : r.checks()) {
    py::dict d;
    d["name"] = c.name;
    d["target"] = c.target;
    d["achieved"] = c.achieved;
    d["passed"] = c.pass;
    d["expected_fail"] = c.expected_fail;
    d["details"] = c.details;
    checks.append(d);
  }
  py::dict out;
  out["ok"] = r.ok();
  out["unexpected_failures"] = r.unexpected_failures();
  out["checks"] = checks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_dorder, m) {
  m.doc() = "Spectral solver for integral_0^beta D^alpha y d alpha = 0";

  // Kept alive for the life of the interpreter; the module holds a reference too.
  static const py::handle error_type = py::exception<Error>(m, "Error", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(e.what());
      exc.attr("kind") = to_string(e.kind());
      exc.attr("index") = e.index() ? py::object(py::int_(*e.index())) : py::object(py::none());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.attr("DEFAULT_BETA") = kDefaultBeta;

  m.def("reciprocal_factorial", &reciprocal_factorial, py::arg("v"));
  m.def("classical_reciprocal_gamma", &classical_reciprocal_gamma, py::arg("z"));

  m.def(
      "eval_h",
      [](double x, std::optional<Complex> lam, std::optional<int> k, double beta, double abs_tol, double rel_tol) {
        return eval_h(x, pick_lambda(lam, k, beta), make_config(abs_tol, rel_tol));
      },
      py::arg("x"), py::kw_only(), py::arg("lam") = py::none(), py::arg("k") = py::none(),
      py::arg("beta") = kDefaultBeta, py::arg("abs_tol") = 1e-12, py::arg("rel_tol") = 1e-12,
      "h(x, lambda); lambda by value (principal branch) or as the lattice root k");
  m.def(
      "termwise_deriv",
      [](double x, double alpha, std::optional<Complex> lam, std::optional<int> k, double beta) {
        return termwise_deriv(x, pick_lambda(lam, k, beta), FracOrder(alpha));
      },
      py::arg("x"), py::arg("alpha"), py::kw_only(), py::arg("lam") = py::none(), py::arg("k") = py::none(),
      py::arg("beta") = kDefaultBeta);
  m.def(
      "correction_term",
      [](double x, double alpha, std::optional<Complex> lam, std::optional<int> k, double beta) {
        return correction_term(x, pick_lambda(lam, k, beta), FracOrder(alpha));
      },
      py::arg("x"), py::arg("alpha"), py::kw_only(), py::arg("lam") = py::none(), py::arg("k") = py::none(),
      py::arg("beta") = kDefaultBeta);

  m.def(
      "lattice_root", [](int k, double beta) { return lattice_root(k, beta).value(); }, py::arg("k"),
      py::arg("beta") = kDefaultBeta);
  m.def(
      "char_fn",
      [](std::optional<Complex> lam, std::optional<int> k, double beta) {
        return char_fn(pick_lambda(lam, k, beta), beta);
      },
      py::kw_only(), py::arg("lam") = py::none(), py::arg("k") = py::none(), py::arg("beta") = kDefaultBeta);
  m.def(
      "roots",
      [](double beta, int k_max) {
        std::vector<std::pair<int, Complex>> out;
        for (const CharacteristicRoot& r : roots(beta, k_max)) out.emplace_back(r.k, r.value());
        return out;
      },
      py::arg("beta") = kDefaultBeta, py::arg("k_max") = 16);
  m.def("mode_fn", &mode_fn, py::arg("k"), py::arg("alpha"), py::arg("beta") = kDefaultBeta);

  py::class_<ModePhi>(m, "ModePhi")
      .def(py::init([](int k, Complex amplitude) { return ModePhi{k, amplitude}; }), py::arg("k"),
           py::arg("amplitude") = Complex{1.0, 0.0})
      .def_readonly("k", &ModePhi::k)
      .def_readonly("amplitude", &ModePhi::amplitude);
  py::class_<CosinePhi>(m, "CosinePhi")
      .def(py::init([](int k, Complex amplitude) { return CosinePhi{k, amplitude}; }), py::arg("k"),
           py::arg("amplitude") = Complex{1.0, 0.0})
      .def_readonly("k", &CosinePhi::k)
      .def_readonly("amplitude", &CosinePhi::amplitude);
  py::class_<ConstantPhi>(m, "ConstantPhi")
      .def(py::init([](Complex c) { return ConstantPhi{c}; }), py::arg("c") = Complex{1.0, 0.0})
      .def_readonly("c", &ConstantPhi::c);
  py::class_<SampledPhi>(m, "SampledPhi")
      .def(py::init([](std::vector<double> alphas, std::vector<Complex> values) {
             return SampledPhi{std::move(alphas), std::move(values)};
           }),
           py::arg("alphas"), py::arg("values"))
      .def_readonly("alphas", &SampledPhi::alphas)
      .def_readonly("values", &SampledPhi::values);

  py::class_<SpectralSeries>(m, "SpectralSeries")
      .def(py::init([](std::map<int, Complex> coefficients, double beta) {
             return SpectralSeries(OrderInterval(beta), std::move(coefficients));
           }),
           py::arg("coefficients"), py::arg("beta") = kDefaultBeta)
      .def_property_readonly("beta", &SpectralSeries::beta)
      .def_property_readonly("k_max", &SpectralSeries::k_max)
      .def_property_readonly("coefficients", &SpectralSeries::coefficients)
      .def_property_readonly("diagnostics", [](const SpectralSeries& s) { return diagnostics_dict(s.diagnostics()); })
      .def("__call__", [](const SpectralSeries& s, double x) { return evaluate_series(s, x); }, py::arg("x"))
      .def(
          "deriv", [](const SpectralSeries& s, double x, double alpha) { return evaluate_series_deriv(s, x, alpha); },
          py::arg("x"), py::arg("alpha"))
      .def("to_json", [](const SpectralSeries& s) { return io::series_json(s); });

  using PhiKind = DataFunction::Kind;
  m.def(
      "solve_cauchy",
      [](double a, PhiKind phi, double beta, int k_max) {
        return solve_cauchy({.a = a, .phi = std::move(phi), .interval = OrderInterval(beta), .k_max = k_max});
      },
      py::arg("a"), py::arg("phi"), py::kw_only(), py::arg("beta") = kDefaultBeta, py::arg("k_max") = 16);
  m.def(
      "solve_bvp",
      [](double a, double b, double a0, double b0, PhiKind phi, double beta, int k_max) {
        return solve_bvp({.a = a,
                          .b = b,
                          .a0 = a0,
                          .b0 = b0,
                          .phi = std::move(phi),
                          .interval = OrderInterval(beta),
                          .k_max = k_max});
      },
      py::arg("a"), py::arg("b"), py::arg("a0"), py::arg("b0"), py::arg("phi"), py::kw_only(),
      py::arg("beta") = kDefaultBeta, py::arg("k_max") = 16);

  m.def("manufactured_coefficients", &manufactured_coefficients, py::arg("k_max"));
  m.def(
      "manufacture_cauchy_phi",
      [](double a, const std::map<int, Complex>& c, double beta, std::size_t nodes) {
        return manufacture_cauchy_phi(a, c, beta, nodes);
      },
      py::arg("a"), py::arg("coefficients"), py::kw_only(), py::arg("beta") = kDefaultBeta,
      py::arg("nodes") = 513);
  m.def(
      "manufacture_boundary_phi",
      [](double a, double b, double a0, double b0, const std::map<int, Complex>& c, double beta, std::size_t nodes) {
        return manufacture_boundary_phi(a, b, a0, b0, c, beta, nodes);
      },
      py::arg("a"), py::arg("b"), py::arg("a0"), py::arg("b0"), py::arg("coefficients"), py::kw_only(),
      py::arg("beta") = kDefaultBeta, py::arg("nodes") = 513);

  m.def(
      "verify",
      [](const std::string& suite) {
        if (suite != "default" && suite != "full") throw_invalid("suite must be 'default' or 'full'");
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite == "full" ? Suite::Full : Suite::Default);
        }
        return report_dict(r);
      },
      py::arg("suite") = "default");
}
