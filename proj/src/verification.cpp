#include "dorder/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "dorder/errors.hpp"
#include "dorder/special_functions.hpp"
#include "dorder/spectrum.hpp"

namespace dorder {

namespace {

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

std::vector<double> uniform_alphas(double beta, std::size_t nodes) {
  std::vector<double> alphas(nodes);
  for (std::size_t j = 0; j < nodes; ++j) {
    alphas[j] = beta * static_cast<double>(j) / static_cast<double>(nodes - 1);
  }
  alphas.back() = beta;
  return alphas;
}

// Orders at which a residual check inspects phi: nearest nodes for sampled
// data, a uniform grid otherwise.
std::vector<double> residual_alphas(const DataFunction& phi, double beta, int alpha_points) {
  if (alpha_points < 16) throw_invalid("residual checks need at least 16 alpha points");
  std::vector<double> alphas = uniform_alphas(beta, static_cast<std::size_t>(alpha_points));
  if (const auto* s = std::get_if<SampledPhi>(&phi.kind())) {
    const double last = static_cast<double>(s->alphas.size() - 1);
    for (double& a : alphas) {
      a = s->alphas[static_cast<std::size_t>(std::lround(a / beta * last))];
    }
  }
  return alphas;
}

std::string incompleteness_note(const SpectralSeries& s, double sup_phi) {
  if (s.diagnostics().zero_projection && sup_phi > 0.0) {
    return "; phi is orthogonal to every retained mode (the basis has no k = 0 mode), so the "
           "series vanishes identically";
  }
  return {};
}

}  // namespace

void VerificationReport::add(std::string name, double target, double achieved, std::string details,
                             bool expected_fail) {
  checks_.push_back(CheckResult{std::move(name), target, achieved, achieved <= target, expected_fail,
                                std::move(details)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::ok() const noexcept { return unexpected_failures() == 0; }

std::size_t VerificationReport::unexpected_failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) {
    return !c.pass && !c.expected_fail;
  }));
}

VerificationReport check_orthogonality(double beta, int k_range, int quad_points) {
  if (quad_points < 65 || quad_points % 2 == 0) throw_invalid("quad_points must be odd and >= 65");
  if (k_range < 1) throw_invalid("k_range must be positive");
  const auto nodes = static_cast<std::size_t>(quad_points);
  const std::vector<double> alphas = uniform_alphas(beta, nodes);
  const double step = beta / static_cast<double>(nodes - 1);

  double worst = 0.0;
  double diagonal = 0.0;
  int pairings = 0;
  int diagonals = 0;
  std::vector<Complex> samples(nodes);
  for (int k = -k_range; k <= k_range; ++k) {
    if (k == 0) continue;
    for (int n = -k_range; n <= k_range; ++n) {
      if (n == 0) continue;
      for (std::size_t j = 0; j < nodes; ++j) {
        samples[j] = mode_fn(k, alphas[j], beta) * mode_fn(-n, alphas[j], beta);
      }
      const Complex closed = mode_inner_product(k, n, beta);
      worst = std::max(worst, std::abs(simpson(samples, step) - closed));
      if (k == n) {
        diagonal = std::max(diagonal, std::abs(closed - beta));
        ++diagonals;
      }
      ++pairings;
    }
  }
  VerificationReport report;
  report.add("orthogonality: quadrature vs closed form", 1e-10, worst,
             fmt("%.0f pairings, %.0f diagonals, %.0f-node Simpson", pairings, diagonals, quad_points));
  report.add("orthogonality: closed-form diagonal equals beta", 0.0, diagonal,
             fmt("beta = %.17g", beta));
  return report;
}

VerificationReport check_equation_residual(const SpectralSeries& s, std::span<const double> x_grid,
                                           const QuadratureConfig& config, double target) {
  if (x_grid.empty()) throw_invalid("equation residual needs a nonempty grid");
  double worst = 0.0;
  double y_max = 0.0;
  for (double x : x_grid) {
    const SeriesAtPoint at(s, x, config);
    y_max = std::max(y_max, std::abs(at.value()));
    const Complex r = distributed_operator([&](double a) { return at.deriv(a); }, s.beta(), config);
    worst = std::max(worst, std::abs(r));
  }
  VerificationReport report;
  report.add("equation residual (series)", target, worst / (1.0 + y_max),
             fmt("%.0f abscissae, max|y| = %.6g", static_cast<double>(x_grid.size()), y_max));
  return report;
}

VerificationReport check_root_annihilation(double beta, std::span<const int> ks,
                                           std::span<const double> x_grid,
                                           const QuadratureConfig& config, double target) {
  double worst = 0.0;
  for (int k : ks) {
    const Eigenvalue lambda = lattice_root(k, beta);
    for (double x : x_grid) {
      const double h = std::abs(eval_h(x, lambda, config));
      const Complex r = distributed_operator(
          [&](double a) { return termwise_deriv(x, lambda, FracOrder(a), config); }, beta, config);
      worst = std::max(worst, std::abs(r) / (1.0 + h));
    }
  }
  VerificationReport report;
  report.add("equation residual (termwise D^alpha h at roots)", target, worst,
             fmt("%.0f roots x %.0f abscissae", static_cast<double>(ks.size()),
                 static_cast<double>(x_grid.size())));
  return report;
}

VerificationReport check_eigen_relation(std::span<const double> xs, std::span<const double> alphas,
                                        std::span<const Eigenvalue> lambdas,
                                        const QuadratureConfig& config, double target) {
  double worst = 0.0;
  for (const Eigenvalue& lambda : lambdas) {
    for (double x : xs) {
      const Complex h = eval_h(x, lambda, config);
      for (double a : alphas) {
        const Complex lhs = termwise_deriv(x, lambda, FracOrder(a), config);
        worst = std::max(worst, std::abs(lhs - lambda.pow(a) * h) / (1.0 + std::abs(h)));
      }
    }
  }
  VerificationReport report;
  report.add("eigen-relation D^alpha h = lambda^alpha h", target, worst,
             fmt("%.0f grid points", static_cast<double>(xs.size() * alphas.size() * lambdas.size())));
  return report;
}

VerificationReport check_initial_residual(const SpectralSeries& s, const CauchyProblem& p,
                                          int alpha_points, bool expected_fail) {
  const double beta = p.interval.beta();
  const std::vector<double> alphas = residual_alphas(p.phi, beta, alpha_points);
  const SeriesAtPoint at(s, p.a, p.config);
  double sup = 0.0;
  for (double a : alphas) sup = std::max(sup, std::abs(at.deriv(a) - p.phi(a, beta)));
  const double sup_phi = p.phi.sup_norm(beta);
  VerificationReport report;
  report.add("initial residual D^alpha y(a) = phi", 1e-7 * (1.0 + sup_phi), sup,
             fmt("sup|phi| = %.6g over %.0f orders", sup_phi, static_cast<double>(alphas.size())) +
                 incompleteness_note(s, sup_phi),
             expected_fail);
  return report;
}

VerificationReport check_boundary_residual(const SpectralSeries& s, const BoundaryProblem& p,
                                           int alpha_points, bool expected_fail) {
  const double beta = p.interval.beta();
  const std::vector<double> alphas = residual_alphas(p.phi, beta, alpha_points);
  const SeriesAtPoint at_a(s, p.a, p.config);
  double sup = 0.0;
  if (p.b0 == 0.0) {
    for (double a : alphas) sup = std::max(sup, std::abs(p.a0 * at_a.deriv(a) - p.phi(a, beta)));
  } else {
    const SeriesAtPoint at_b(s, p.b, p.config);
    for (double a : alphas) {
      const Complex lhs = p.a0 * at_a.deriv(a) + p.b0 * at_b.deriv(a);
      sup = std::max(sup, std::abs(lhs - p.phi(a, beta)));
    }
  }
  const double sup_phi = p.phi.sup_norm(beta);
  VerificationReport report;
  report.add("boundary residual a0 D^alpha y(a) + b0 D^alpha y(b) = phi", 1e-7 * (1.0 + sup_phi), sup,
             fmt("sup|phi| = %.6g over %.0f orders", sup_phi, static_cast<double>(alphas.size())) +
                 incompleteness_note(s, sup_phi),
             expected_fail);
  return report;
}

VerificationReport scan_nondegeneracy(double a, double b, double a0, double b0, double beta,
                                      int k_max, const QuadratureConfig& config, bool expected_fail) {
  if (!(a > 0.0 && a < b)) throw_invalid("non-degeneracy scan requires 0 < a < b");
  if (k_max < 1) throw_invalid("k_max must be at least 1");
  double min_denominator = std::numeric_limits<double>::infinity();
  int argmin = 0;
  // 1, -1, 2, -2, ...: ties within a conjugate pair report m > 0, as the solver does
  for (int j = 1; j <= k_max; ++j) {
    for (int m : {j, -j}) {
      const Eigenvalue lambda = lattice_root(m, beta);
      const double d = std::abs(a0 * eval_h(a, lambda, config) + b0 * eval_h(b, lambda, config));
      if (d < min_denominator) {
        min_denominator = d;
        argmin = m;
      }
    }
  }
  VerificationReport report;
  report.add("non-degeneracy: 1 / min_m |a0 h(a) + b0 h(b)|", 1.0 / kDegeneracyFloor,
             1.0 / min_denominator,
             fmt("min denominator %.6g at m = %.0f (a = %.6g)", min_denominator, argmin, a) +
                 fmt(", b = %.17g, b0 = %.17g", b, b0),
             expected_fail);
  return report;
}

SampledPhi manufacture_cauchy_phi(double a, const std::map<int, Complex>& coefficients, double beta,
                                  std::size_t nodes, const QuadratureConfig& config) {
  return manufacture_boundary_phi(a, 2.0 * a, 1.0, 0.0, coefficients, beta, nodes, config);
}

SampledPhi manufacture_boundary_phi(double a, double b, double a0, double b0,
                                    const std::map<int, Complex>& coefficients, double beta,
                                    std::size_t nodes, const QuadratureConfig& config) {
  std::vector<std::pair<int, Complex>> weights;
  for (const auto& [k, c] : coefficients) {
    const Eigenvalue lambda = lattice_root(k, beta);
    Complex d = a0 * eval_h(a, lambda, config);
    if (b0 != 0.0) d += b0 * eval_h(b, lambda, config);
    weights.emplace_back(k, c * d);
  }
  SampledPhi phi;
  phi.alphas = uniform_alphas(beta, nodes);
  phi.values.resize(nodes);
  for (std::size_t j = 0; j < nodes; ++j) {
    Complex sum{};
    for (const auto& [k, w] : weights) sum += w * mode_fn(k, phi.alphas[j], beta);
    phi.values[j] = sum;
  }
  return phi;
}

std::map<int, Complex> manufactured_coefficients(int k_max) {
  std::map<int, Complex> c;
  for (int k = -k_max; k <= k_max; ++k) {
    if (k != 0) c[k] = 1.0 / (1.0 + static_cast<double>(k) * k);
  }
  return c;
}

BoundaryPair construct_near_degenerate(double beta, const QuadratureConfig& config) {
  constexpr double a = 1e-3;
  const Eigenvalue lambda = lattice_root(1, beta);
  const Complex ha = eval_h(a, lambda, config);
  auto cross = [&](double b) { return (ha * std::conj(eval_h(b, lambda, config))).imag(); };

  double lo = 2.0;
  double f_lo = cross(lo);
  double hi = lo;
  bool bracketed = false;
  for (double b = 2.5; b <= 12.0; b += 0.5) {
    const double f = cross(b);
    if ((f < 0.0) != (f_lo < 0.0)) {
      hi = b;
      bracketed = true;
      break;
    }
    lo = b;
    f_lo = f;
  }
  if (!bracketed) {
    throw Error(ErrorKind::NonConvergent, "no phase crossing of h(b, lambda_1) found for b in [2, 12]");
  }
  for (int iter = 0; iter < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f = cross(mid);
    if ((f < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f;
    } else {
      hi = mid;
    }
  }
  // Keep whichever bracket end has the smaller residual cross term.
  const double b = std::abs(cross(lo)) <= std::abs(cross(hi)) ? lo : hi;
  const Complex hb = eval_h(b, lambda, config);
  // The degeneracy floor is absolute, so normalize |a0 h(a, lambda_1)| = 1.
  const double a0 = 1.0 / std::abs(ha);
  const double b0 = -a0 * (ha * std::conj(hb)).real() / std::norm(hb);
  return BoundaryPair{a, b, a0, b0};
}

double GlStudy::min_order() const {
  double m = std::numeric_limits<double>::infinity();
  for (const GlStudyPoint& p : points) {
    for (double o : p.orders) m = std::min(m, o);
  }
  return m;
}

GlStudy gl_convergence_study(Eigenvalue lambda, FracOrder alpha, std::span<const double> steps,
                             std::span<const double> eval_points, double x_max,
                             const QuadratureConfig& config) {
  GlStudy study;
  study.steps.assign(steps.begin(), steps.end());
  for (double x : eval_points) {
    if (!(x > 0.0 && x <= x_max)) throw_invalid("GL evaluation points must lie in (0, x_max]");
    GlStudyPoint p;
    p.x = x;
    p.h = eval_h(x, lambda, config);
    p.reference = termwise_deriv(x, lambda, alpha, config) + correction_term(x, lambda, alpha, config);
    study.points.push_back(std::move(p));
  }
  for (double step : steps) {
    const auto count = static_cast<std::size_t>(std::lround(x_max / step)) + 1;
    const GridFunction grid = GridFunction::h_cell_averages(lambda, step, count, config);
    for (GlStudyPoint& p : study.points) {
      const auto index = static_cast<std::size_t>(std::lround(p.x / step));
      p.errors.push_back(std::abs(gl_deriv(grid, alpha, index) - p.reference));
    }
  }
  for (GlStudyPoint& p : study.points) {
    for (std::size_t i = 0; i + 1 < p.errors.size(); ++i) {
      p.orders.push_back(std::log(p.errors[i] / p.errors[i + 1]) / std::log(steps[i] / steps[i + 1]));
    }
  }
  return study;
}

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

void add_scaled(VerificationReport& into, const VerificationReport& from, double scale) {
  for (const CheckResult& c : from.checks()) {
    into.add(c.name, c.target * scale, c.achieved, c.details, c.expected_fail);
  }
}

VerificationReport coefficient_check(const std::string& name, const SpectralSeries& s,
                                     const std::map<int, Complex>& expected, double target) {
  double worst = 0.0;
  for (const auto& [k, c] : s.coefficients()) {
    const auto it = expected.find(k);
    const Complex want = it == expected.end() ? Complex{} : it->second;
    worst = std::max(worst, std::abs(c - want));
  }
  VerificationReport r;
  r.add(name, target, worst, fmt("k_max = %.0f", s.k_max()));
  return r;
}

VerificationReport realness_check(const std::string& name, const SpectralSeries& s, double x_lo,
                                  double x_hi, const QuadratureConfig& config) {
  double worst = 0.0;
  constexpr int kPoints = 13;
  for (int i = 0; i < kPoints; ++i) {
    const double x = x_lo + (x_hi - x_lo) * i / (kPoints - 1);
    const Complex y = evaluate_series(s, x, config);
    worst = std::max(worst, std::abs(y.imag()) / (1.0 + std::abs(y)));
  }
  VerificationReport r;
  r.add(name, 1e-10, worst, fmt("x in [%.3g, %.3g]", x_lo, x_hi));
  return r;
}

}  // namespace

VerificationReport run_suite(Suite suite, double target_scale) {
  const QuadratureConfig config{};
  VerificationReport report;
  auto add = [&](const VerificationReport& r) { add_scaled(report, r, target_scale); };

  if (suite == Suite::Full) {
    // Root lattice: |F(lambda_k)| for 0 < |k| <= 20 and the limit F(1) = beta.
    double worst = 0.0;
    for (const CharacteristicRoot& r : roots(kSqrt2, 20)) {
      worst = std::max(worst, std::abs(char_fn(r.lambda, kSqrt2)));
    }
    VerificationReport lattice;
    lattice.add("root lattice: max |F(lambda_k)|, |k| <= 20", 1e-12, worst);
    lattice.add("root lattice: |F(1) - beta|", 1e-12, std::abs(char_fn(Complex{1.0, 0.0}, kSqrt2) - kSqrt2));
    add(lattice);
  }

  add(check_orthogonality(kSqrt2, 5, 129));

  {
    const std::vector<double> xs{1.0, 2.0, 5.0};
    const std::vector<double> alphas{0.3, 0.7, 1.0, 1.37};
    const std::vector<Eigenvalue> lambdas{lattice_root(1, kSqrt2), lattice_root(-1, kSqrt2),
                                          lattice_root(3, kSqrt2), Eigenvalue::from_value(0.5),
                                          Eigenvalue::from_value(2.0)};
    add(check_eigen_relation(xs, alphas, lambdas, config));
  }

  {
    // The ordinary derivative of h is the classical first-order derivative,
    // i.e. the convention-truncated one plus the discarded band.
    double worst = 0.0;
    constexpr double delta = 1e-5;
    for (double x : {1.0, 2.0}) {
      for (const Eigenvalue& lambda : {Eigenvalue::from_value(2.0), lattice_root(1, kSqrt2)}) {
        const Complex fd = (eval_h(x + delta, lambda, config) - eval_h(x - delta, lambda, config)) / (2 * delta);
        const Complex d1 = termwise_deriv(x, lambda, FracOrder(1.0), config) +
                           correction_term(x, lambda, FracOrder(1.0), config);
        worst = std::max(worst, std::abs(d1 - fd) / std::abs(d1));
      }
    }
    VerificationReport r;
    r.add("first derivative: termwise + correction vs central difference (relative)", 1e-5, worst,
          "step 1e-5");
    add(r);
  }

  {
    const std::vector<int> ks{-2, -1, 1, 2};
    const std::vector<double> xs{1.5, 2.5};
    add(check_root_annihilation(kSqrt2, ks, xs, config));
  }

  const std::map<int, Complex> manufactured = manufactured_coefficients(3);
  {
    CauchyProblem p;
    p.a = 1.0;
    p.k_max = 8;
    p.phi = manufacture_cauchy_phi(p.a, manufactured, kSqrt2, 513, config);
    const SpectralSeries s = solve_cauchy(p);
    add(coefficient_check("Cauchy round-trip: max |c_k - c*_k|", s, manufactured, 1e-8));
    add(check_initial_residual(s, p, 64));
    add(realness_check("Cauchy realness: |Im y| / (1 + |y|)", s, 1.0, 4.0, config));
    const std::vector<double> xs{1.0, 1.5, 2.0, 2.5, 3.0};
    add(check_equation_residual(s, xs, config, 1e-7));
  }

  {
    BoundaryProblem p;
    p.a = 1.0;
    p.b = 2.0;
    p.a0 = 1.0;
    p.b0 = 2.0;
    p.k_max = 8;
    p.phi = manufacture_boundary_phi(p.a, p.b, p.a0, p.b0, manufactured, kSqrt2, 513, config);
    const SpectralSeries s = solve_bvp(p);
    add(coefficient_check("boundary round-trip: max |c_k - c*_k|", s, manufactured, 1e-8));
    add(check_boundary_residual(s, p, 64));
    add(scan_nondegeneracy(p.a, p.b, p.a0, p.b0, kSqrt2, p.k_max, config));

    BoundaryProblem reduced = p;
    reduced.b0 = 0.0;
    reduced.phi = manufacture_cauchy_phi(p.a, manufactured, kSqrt2, 513, config);
    CauchyProblem cauchy;
    cauchy.a = p.a;
    cauchy.k_max = p.k_max;
    cauchy.phi = reduced.phi;
    const SpectralSeries sb = solve_bvp(reduced);
    const SpectralSeries sc = solve_cauchy(cauchy);
    double worst = 0.0;
    for (const auto& [k, c] : sc.coefficients()) worst = std::max(worst, std::abs(c - sb.coefficient(k)));
    VerificationReport r;
    r.add("boundary solver with b0 = 0 reproduces the Cauchy solver", 1e-12, worst);
    add(r);
  }

  {
    const BoundaryPair pair = construct_near_degenerate(kSqrt2, config);
    add(scan_nondegeneracy(pair.a, pair.b, pair.a0, pair.b0, kSqrt2, 1, config, true));
    BoundaryProblem p;
    p.a = pair.a;
    p.b = pair.b;
    p.a0 = pair.a0;
    p.b0 = pair.b0;
    p.k_max = 1;
    p.phi = ModePhi{1, 1.0};
    double raised = 1.0;
    std::string details = "solver accepted the constructed pair";
    try {
      (void)solve_bvp(p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonDegeneracyViolated && e.index() == 1) {
        raised = 0.0;
        details = e.what();
      }
    }
    VerificationReport r;
    r.add("constructed degenerate boundary pair raises NonDegeneracyViolated(1)", 0.0, raised, details);
    add(r);
  }

  {
    CauchyProblem p;
    p.a = 1.0;
    p.phi = ConstantPhi{1.0};
    const SpectralSeries s = solve_cauchy(p);
    double largest = 0.0;
    for (const auto& [k, c] : s.coefficients()) largest = std::max(largest, std::abs(c));
    VerificationReport r;
    r.add("constant phi projects to the zero series", 1e-10, largest,
          s.diagnostics().zero_projection ? "zero projection flagged" : "zero projection not flagged");
    add(r);
    add(check_initial_residual(s, p, 64, true));
  }

  if (suite == Suite::Full) {
    const std::vector<double> steps{4e-3, 2e-3, 1e-3};
    const std::vector<double> xs{1.0, 2.0, 3.0};
    const Eigenvalue lambda = lattice_root(1, kSqrt2);
    const GlStudy study = gl_convergence_study(lambda, FracOrder(0.5), steps, xs, 3.0, config);
    VerificationReport r;
    const double order = study.min_order();
    // Passes when the order is at least 0.8; expressed as achieved <= target.
    r.add("Grunwald-Letnikov oracle: 0.8 - min observed order", 0.0, 0.8 - order,
          fmt("min order %.4f over x in {1, 2, 3}", order));
    const GlStudyPoint& at2 = study.points[1];
    r.add("Grunwald-Letnikov oracle: final error at x = 2 / (1 + |h|)", 1e-2,
          at2.errors.back() / (1.0 + std::abs(at2.h)), fmt("absolute error %.4g", at2.errors.back()));
    add(r);
  }
  return report;
}

}  // namespace dorder
