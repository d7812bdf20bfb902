#include "dorder/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dorder/errors.hpp"
#include "dorder/special_functions.hpp"

namespace dorder {

namespace {

constexpr double kGridTol = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void validate_sampled(const SampledPhi& s, double beta) {
  if (s.alphas.size() != s.values.size()) throw_invalid("sampled phi: alphas and values differ in length");
  const std::size_t n = s.alphas.size();
  if (n < 9) {
    throw Error(ErrorKind::GridTooCoarse,
                "sampled phi needs at least 9 nodes, got " + std::to_string(n));
  }
  if (n % 2 == 0) throw_invalid("sampled phi needs an odd node count for Simpson's rule");
  if (std::abs(s.alphas.front()) > kGridTol) throw_invalid("sampled phi must start at alpha = 0");
  if (std::abs(s.alphas.back() - beta) > kGridTol) throw_invalid("sampled phi must end at alpha = beta");
  const double h = beta / static_cast<double>(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (std::abs(s.alphas[j + 1] - s.alphas[j] - h) > kGridTol) {
      throw_invalid("sampled phi nodes must be uniformly spaced");
    }
  }
  for (const Complex& v : s.values) {
    if (!finite(v)) throw_invalid("sampled phi values must be finite");
  }
}

void validate_common(int k_max, const OrderInterval& interval, const QuadratureConfig& config) {
  if (k_max < 1) throw_invalid("k_max must be at least 1");
  config.validate();
  (void)roots(interval.beta(), k_max);  // DegenerateLattice when modes collide
}

// Projections for 0 < |k| <= k_max, plus the first dropped pair.
struct Projections {
  std::vector<std::pair<int, Complex>> retained;
  double neglected = 0.0;  // max |projection| / beta over k = +-(k_max + 1)
  bool zero = false;
};

Projections project_all(const DataFunction& phi, int k_max, const OrderInterval& interval,
                        const QuadratureConfig& config) {
  Projections out;
  const double beta = interval.beta();
  double largest = 0.0;
  // Ordered 1, -1, 2, -2, ... so a degenerate conjugate pair reports m > 0.
  for (int m = 1; m <= k_max; ++m) {
    for (int k : {m, -m}) {
      const Complex p = project_coefficient(phi, k, interval, config);
      largest = std::max(largest, std::abs(p));
      out.retained.emplace_back(k, p);
    }
  }
  for (int k : {-(k_max + 1), k_max + 1}) {
    out.neglected = std::max(out.neglected, std::abs(project_coefficient(phi, k, interval, config)) / beta);
  }
  out.zero = largest <= 1e-12 * beta * (1.0 + phi.sup_norm(beta));
  return out;
}

void finish(SeriesDiagnostics& diag, const Projections& proj) {
  auto by_k = [](const auto& l, const auto& r) { return l.first < r.first; };
  std::sort(diag.h_values.begin(), diag.h_values.end(), by_k);
  std::sort(diag.denominators.begin(), diag.denominators.end(), by_k);
  diag.neglected_tail = proj.neglected;
  diag.zero_projection = proj.zero;
}

}  // namespace

void DataFunction::validate(double beta) const {
  std::visit(Overloaded{
                 [](const ModePhi& m) {
                   if (m.k == 0) throw_invalid("builtin mode index must be nonzero");
                   if (!finite(m.amplitude)) throw_invalid("amplitude must be finite");
                 },
                 [](const CosinePhi& c) {
                   if (c.k < 1) throw_invalid("builtin cosine index must be positive");
                   if (!finite(c.amplitude)) throw_invalid("amplitude must be finite");
                 },
                 [](const ConstantPhi& c) {
                   if (!finite(c.c)) throw_invalid("constant must be finite");
                 },
                 [beta](const SampledPhi& s) { validate_sampled(s, beta); },
             },
             kind_);
}

Complex DataFunction::operator()(double alpha, double beta) const {
  return std::visit(
      Overloaded{
          [&](const ModePhi& m) { return m.amplitude * mode_fn(m.k, alpha, beta); },
          [&](const CosinePhi& c) {
            return c.amplitude * std::cos(2.0 * std::numbers::pi * c.k * alpha / beta);
          },
          [](const ConstantPhi& c) { return c.c; },
          [&](const SampledPhi& s) {
            const std::size_t n = s.values.size();
            const double h = beta / static_cast<double>(n - 1);
            const double t = std::clamp(alpha / h, 0.0, static_cast<double>(n - 1));
            const std::size_t j = std::min(static_cast<std::size_t>(t), n - 2);
            const double frac = t - static_cast<double>(j);
            return (1.0 - frac) * s.values[j] + frac * s.values[j + 1];
          },
      },
      kind_);
}

double DataFunction::sup_norm(double /*beta*/) const {
  return std::visit(Overloaded{
                        [](const ModePhi& m) { return std::abs(m.amplitude); },
                        [](const CosinePhi& c) { return std::abs(c.amplitude); },
                        [](const ConstantPhi& c) { return std::abs(c.c); },
                        [](const SampledPhi& s) {
                          double m = 0.0;
                          for (const Complex& v : s.values) m = std::max(m, std::abs(v));
                          return m;
                        },
                    },
                    kind_);
}

void CauchyProblem::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw_invalid("Cauchy problem requires a > 0");
  validate_common(k_max, interval, config);
  phi.validate(interval.beta());
}

void BoundaryProblem::validate() const {
  if (!(a > 0.0 && a < b) || !std::isfinite(b)) throw_invalid("boundary problem requires 0 < a < b");
  if (!std::isfinite(a0) || !std::isfinite(b0)) throw_invalid("a0 and b0 must be finite");
  if (a0 == 0.0 && b0 == 0.0) throw_invalid("a0 and b0 cannot both vanish");
  validate_common(k_max, interval, config);
  phi.validate(interval.beta());
}

SpectralSeries::SpectralSeries(OrderInterval interval, std::map<int, Complex> coefficients,
                               SeriesDiagnostics diagnostics)
    : interval_(interval), coefficients_(std::move(coefficients)), diagnostics_(std::move(diagnostics)) {
  if (coefficients_.contains(0)) throw_invalid("a spectral series has no k = 0 term");
  for (const auto& [k, c] : coefficients_) {
    if (!finite(c)) throw_invalid("coefficient c_" + std::to_string(k) + " is not finite");
  }
}

Complex SpectralSeries::coefficient(int k) const {
  const auto it = coefficients_.find(k);
  return it == coefficients_.end() ? Complex{} : it->second;
}

int SpectralSeries::k_max() const noexcept {
  int m = 0;
  for (const auto& [k, c] : coefficients_) m = std::max(m, std::abs(k));
  return m;
}

SeriesAtPoint::SeriesAtPoint(const SpectralSeries& series, double x, const QuadratureConfig& config)
    : x_(x), beta_(series.beta()) {
  if (!(x > 0.0) || !std::isfinite(x)) throw_invalid("series evaluation requires x > 0");
  double largest = 0.0;
  for (const auto& [k, c] : series.coefficients()) largest = std::max(largest, std::abs(c));
  for (const auto& [k, c] : series.coefficients()) {
    if (c == Complex{} || std::abs(c) < 1e-16 * largest) continue;
    weighted_.emplace_back(k, c * eval_h(x, lattice_root(k, beta_), config));
  }
}

Complex SeriesAtPoint::value() const {
  Complex sum{};
  for (const auto& [k, w] : weighted_) sum += w;
  return sum;
}

Complex SeriesAtPoint::deriv(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= beta_ * (1.0 + 1e-12))) {
    throw_invalid("derivative order must lie in [0, beta]");
  }
  Complex sum{};
  for (const auto& [k, w] : weighted_) sum += w * mode_fn(k, alpha, beta_);
  return sum;
}

Complex evaluate_series(const SpectralSeries& s, double x, const QuadratureConfig& config) {
  return SeriesAtPoint(s, x, config).value();
}

Complex evaluate_series_deriv(const SpectralSeries& s, double x, double alpha,
                              const QuadratureConfig& config) {
  return SeriesAtPoint(s, x, config).deriv(alpha);
}

Complex project_coefficient(const DataFunction& phi, int n, const OrderInterval& interval,
                            const QuadratureConfig& /*config*/) {
  if (n == 0) throw_invalid("projection index must be nonzero");
  const double beta = interval.beta();
  phi.validate(beta);
  return std::visit(
      Overloaded{
          [&](const ModePhi& m) { return m.amplitude * mode_inner_product(m.k, n, beta); },
          [&](const CosinePhi& c) {
            const double hits = (c.k == n ? 1.0 : 0.0) + (-c.k == n ? 1.0 : 0.0);
            return c.amplitude * (0.5 * beta * hits);
          },
          [](const ConstantPhi&) { return Complex{}; },
          [&](const SampledPhi& s) {
            const std::size_t count = s.values.size();
            std::vector<Complex> integrand(count);
            for (std::size_t j = 0; j < count; ++j) {
              integrand[j] = s.values[j] * mode_fn(-n, s.alphas[j], beta);
            }
            return simpson(integrand, beta / static_cast<double>(count - 1));
          },
      },
      phi.kind());
}

SpectralSeries solve_cauchy(const CauchyProblem& p) {
  p.validate();
  const double beta = p.interval.beta();
  const Projections proj = project_all(p.phi, p.k_max, p.interval, p.config);

  SeriesDiagnostics diag;
  diag.min_denominator = std::numeric_limits<double>::infinity();
  std::map<int, Complex> coeffs;
  for (const auto& [n, projection] : proj.retained) {
    const Complex h = eval_h(p.a, lattice_root(n, beta), p.config);
    const double mag = std::abs(h);
    if (mag <= kDegeneracyFloor) {
      throw Error(ErrorKind::DegenerateMode,
                  "|h(a, lambda_" + std::to_string(n) + ")| = " + describe(mag) +
                      " is below the degeneracy floor",
                  n);
    }
    diag.h_values.emplace_back(n, h);
    diag.denominators.emplace_back(n, mag);
    diag.min_denominator = std::min(diag.min_denominator, mag);
    coeffs[n] = projection / (beta * h);
  }
  finish(diag, proj);
  return SpectralSeries(p.interval, std::move(coeffs), std::move(diag));
}

SpectralSeries solve_bvp(const BoundaryProblem& p) {
  p.validate();
  const double beta = p.interval.beta();
  const Projections proj = project_all(p.phi, p.k_max, p.interval, p.config);

  SeriesDiagnostics diag;
  diag.min_denominator = std::numeric_limits<double>::infinity();
  std::map<int, Complex> coeffs;
  for (const auto& [m, projection] : proj.retained) {
    const Eigenvalue lambda = lattice_root(m, beta);
    const Complex ha = eval_h(p.a, lambda, p.config);
    Complex denom = p.a0 * ha;
    if (p.b0 != 0.0) denom += p.b0 * eval_h(p.b, lambda, p.config);
    const double mag = std::abs(denom);
    if (mag <= kDegeneracyFloor) {
      throw Error(ErrorKind::NonDegeneracyViolated,
                  "|a0 h(a, lambda_" + std::to_string(m) + ") + b0 h(b, lambda_" + std::to_string(m) +
                      ")| = " + describe(mag) + " is below the degeneracy floor",
                  m);
    }
    diag.h_values.emplace_back(m, ha);
    diag.denominators.emplace_back(m, mag);
    diag.min_denominator = std::min(diag.min_denominator, mag);
    coeffs[m] = projection / (beta * denom);
  }
  finish(diag, proj);
  return SpectralSeries(p.interval, std::move(coeffs), std::move(diag));
}

}  // namespace dorder
