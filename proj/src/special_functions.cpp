#include "dorder/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "dorder/errors.hpp"

namespace dorder {

namespace {

// Godfrey's coefficients for the Lanczos approximation with g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Largest x |lambda| accepted; exp(r) must stay well inside double range.
constexpr double kMaxScale = 600.0;

// sin(pi z) with exact zeros at the integers.
double sin_pi(double z) {
  double r = z - 2.0 * std::round(0.5 * z);  // r in [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

// 1/Gamma(z) for z >= 1/2.
double recip_gamma_lanczos(double z) {
  const double zm1 = z - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (zm1 + static_cast<double>(i));
  }
  const double t = zm1 + kLanczosG + 0.5;
  const double log_scale = t - (zm1 + 0.5) * std::log(t);
  return std::exp(log_scale) / (std::sqrt(2.0 * std::numbers::pi) * sum);
}

}  // namespace

double classical_reciprocal_gamma(double z) {
  if (!std::isfinite(z)) throw_invalid("reciprocal gamma argument must be finite");
  if (z == std::floor(z)) {
    if (z <= 0.0) return 0.0;
    if (z <= 23.0) {  // (z - 1)! is exact in a double up to 22!
      double f = 1.0;
      for (double j = 2.0; j < z; j += 1.0) f *= j;
      return 1.0 / f;
    }
  }
  if (z >= 0.5) return recip_gamma_lanczos(z);
  // Reflection: 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi.
  return sin_pi(z) / (std::numbers::pi * recip_gamma_lanczos(1.0 - z));
}

double reciprocal_factorial(double v) {
  if (!std::isfinite(v)) throw_invalid("reciprocal factorial argument must be finite");
  if (v <= -1.0) return 0.0;
  return classical_reciprocal_gamma(v + 1.0);
}

double tail_cutoff(double x, double lambda_modulus, double tail_tol) {
  const double r = x * lambda_modulus;
  if (!std::isfinite(r) || r > kMaxScale) {
    throw Error(ErrorKind::Overflow,
                "x |lambda| = " + std::to_string(r) + " exceeds the safe range (" +
                    std::to_string(kMaxScale) + ")");
  }
  if (r <= 0.0) return 30.0;
  const double log_r = std::log(r);
  const double log_tol = std::log(tail_tol);
  double t = std::max(30.0, std::floor(r) + 1.0);
  while (true) {
    const double bound = t * log_r - std::lgamma(t + 1.0) - std::log1p(-r / t);
    if (bound < log_tol) return t;
    t += 1.0;
  }
}

HEvalResult eval_h_detailed(const HEvalRequest& request) {
  const double x = request.x;
  if (!std::isfinite(x) || x <= 0.0) throw_invalid("h(x, lambda) requires x > 0");
  if (!(request.lower >= -3.0 && request.lower <= -1.0)) {
    throw_invalid("lower terminal must lie in [-3, -1]");
  }
  request.config.validate();

  const double cutoff = tail_cutoff(x, request.lambda.modulus(), request.config.tail_tol);
  const Complex log_z = std::log(x) + request.lambda.log();

  std::vector<double> breaks;
  double start = request.lower;
  if (request.convention == KernelConvention::Truncated) start = std::max(start, -1.0);
  breaks.push_back(start);
  for (double p = std::floor(start) + 1.0; p < cutoff; p += 1.0) breaks.push_back(p);
  breaks.push_back(cutoff);

  const bool truncated = request.convention == KernelConvention::Truncated;
  auto integrand = [&](double nu) -> Complex {
    const double kernel = truncated ? reciprocal_factorial(nu) : classical_reciprocal_gamma(nu + 1.0);
    if (kernel == 0.0) return {};
    return kernel * std::exp(nu * log_z);
  };

  const QuadResult q = integrate(integrand, breaks, request.config);
  if (!std::isfinite(q.value.real()) || !std::isfinite(q.value.imag())) {
    throw Error(ErrorKind::Overflow, "h(x, lambda) is not representable");
  }
  return HEvalResult{q.value, q.error, cutoff, q.panels};
}

Complex eval_h(const HEvalRequest& request) { return eval_h_detailed(request).value; }

Complex eval_h(double x, Eigenvalue lambda, const QuadratureConfig& config) {
  HEvalRequest request;
  request.x = x;
  request.lambda = lambda;
  request.config = config;
  return eval_h(request);
}

}  // namespace dorder
