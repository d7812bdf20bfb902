#include "dorder/fractional_operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dorder/errors.hpp"
#include "dorder/special_functions.hpp"

namespace dorder {

namespace {

void require_positive_x(double x) {
  if (!std::isfinite(x) || x <= 0.0) throw_invalid("x must be positive and finite");
}

// start, every integer in (start, stop), stop
std::vector<double> unit_breaks(double start, double stop) {
  std::vector<double> breaks{start};
  for (double p = std::floor(start) + 1.0; p < stop; p += 1.0) breaks.push_back(p);
  breaks.push_back(stop);
  return breaks;
}

}  // namespace

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha < 2.0)) {
    throw_invalid("fractional order must lie in [0, 2), got " + describe(alpha));
  }
}

Complex termwise_deriv(double x, Eigenvalue lambda, FracOrder alpha, const QuadratureConfig& config) {
  require_positive_x(x);
  config.validate();
  const double a = alpha.value();
  const double cutoff = tail_cutoff(x, lambda.modulus(), config.tail_tol) + a;
  const Complex log_z = std::log(x) + lambda.log();
  const double shift = a * std::log(x);

  // The shifted kernel 1/(nu - alpha)! vanishes for nu <= alpha - 1.
  const double start = std::max(-1.0, a - 1.0);
  auto integrand = [&](double nu) -> Complex {
    const double kernel = reciprocal_factorial(nu - a);
    if (kernel == 0.0) return {};
    return kernel * std::exp(nu * log_z - shift);
  };
  const std::vector<double> breaks = unit_breaks(start, cutoff);
  const QuadResult q = integrate(integrand, breaks, config);
  if (!std::isfinite(q.value.real()) || !std::isfinite(q.value.imag())) {
    throw Error(ErrorKind::Overflow, "D^alpha h is not representable");
  }
  return q.value;
}

Complex correction_term(double x, Eigenvalue lambda, FracOrder alpha, const QuadratureConfig& config) {
  require_positive_x(x);
  config.validate();
  const double a = alpha.value();
  if (a == 0.0) return {};
  const Complex log_z = std::log(x) + lambda.log();
  auto integrand = [&](double mu) -> Complex {
    return classical_reciprocal_gamma(mu + 1.0) * std::exp(mu * log_z);
  };
  std::vector<double> breaks{-1.0 - a};
  if (a > 1.0) breaks.push_back(-2.0);
  breaks.push_back(-1.0);
  const QuadResult q = integrate(integrand, breaks, config);
  return lambda.pow(a) * q.value;
}

Complex h_antiderivative(double x, Eigenvalue lambda, const QuadratureConfig& config) {
  if (x == 0.0) return {};
  require_positive_x(x);
  config.validate();
  const double cutoff = tail_cutoff(x, lambda.modulus(), config.tail_tol);
  const double log_x = std::log(x);
  const Complex log_lambda = lambda.log();
  auto integrand = [&](double nu) -> Complex {
    return classical_reciprocal_gamma(nu + 2.0) * std::exp(nu * log_lambda + (nu + 1.0) * log_x);
  };
  const std::vector<double> breaks = unit_breaks(-1.0, cutoff);
  return integrate(integrand, breaks, config).value;
}

GridFunction::GridFunction(double x0, double step, std::vector<Complex> values)
    : x0_(x0), step_(step), values_(std::move(values)) {
  if (!(x0 >= 0.0) || !std::isfinite(x0)) throw_invalid("grid origin must be >= 0");
  if (!(step > 0.0) || !std::isfinite(step)) throw_invalid("grid step must be positive");
  if (values_.size() < 8) throw_invalid("a grid function needs at least 8 samples");
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw_invalid("grid samples must be finite");
    }
  }
}

GridFunction GridFunction::sample(const std::function<Complex(double)>& f, double x0, double step,
                                  std::size_t count) {
  std::vector<Complex> values(count);
  for (std::size_t j = 0; j < count; ++j) values[j] = f(x0 + static_cast<double>(j) * step);
  return GridFunction(x0, step, std::move(values));
}

GridFunction GridFunction::h_cell_averages(Eigenvalue lambda, double step, std::size_t count,
                                           const QuadratureConfig& config) {
  if (!(step > 0.0)) throw_invalid("grid step must be positive");
  std::vector<Complex> edges(count + 1);
  edges[0] = {};
  for (std::size_t j = 1; j <= count; ++j) {
    edges[j] = h_antiderivative((static_cast<double>(j) - 0.5) * step, lambda, config);
  }
  std::vector<Complex> values(count);
  values[0] = edges[1] / step;
  for (std::size_t j = 1; j < count; ++j) values[j] = (edges[j + 1] - edges[j]) / step;
  return GridFunction(0.0, step, std::move(values));
}

std::vector<double> gl_weights(FracOrder alpha, std::size_t count) {
  std::vector<double> w(count);
  if (count == 0) return w;
  w[0] = 1.0;
  for (std::size_t j = 1; j < count; ++j) {
    const double jd = static_cast<double>(j);
    w[j] = w[j - 1] * (jd - 1.0 - alpha.value()) / jd;
  }
  return w;
}

Complex gl_deriv(const GridFunction& f, FracOrder alpha, std::size_t at_index) {
  if (at_index < 1 || at_index >= f.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "GL evaluation index " + std::to_string(at_index) + " outside [1, " +
                    std::to_string(f.size() - 1) + "]");
  }
  const std::vector<double> w = gl_weights(alpha, at_index + 1);
  const auto values = f.values();
  Complex sum{};
  for (std::size_t j = 0; j <= at_index; ++j) sum += w[j] * values[at_index - j];
  return std::pow(f.step(), -alpha.value()) * sum;
}

Complex distributed_operator(const std::function<Complex(double)>& y_deriv, double beta,
                             const QuadratureConfig& config) {
  if (!(beta > 0.0 && beta <= 2.0)) throw_invalid("beta must lie in (0, 2]");
  const std::vector<double> breaks{0.0, 0.25 * beta, 0.5 * beta, 0.75 * beta, beta};
  // Integrand values are themselves quadratures accurate to about rel_tol.
  return integrate(y_deriv, breaks, config, config.rel_tol).value;
}

}  // namespace dorder
