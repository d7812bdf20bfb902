// Reference implementations that share no code with the library's gamma or
// quadrature paths. Slow by design; used only to pin expected values.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace dorder::oracle {

using LComplex = std::complex<long double>;

/// ln Gamma(z), z > 0: shift to z >= 20, then Stirling through z^-11.
inline long double log_gamma_pos(long double z) {
  long double shift = 0.0L;
  while (z < 20.0L) {
    shift += std::log(z);
    z += 1.0L;
  }
  const long double r = 1.0L / z;
  const long double r2 = r * r;
  const long double series =
      r * (1.0L / 12 - r2 * (1.0L / 360 - r2 * (1.0L / 1260 - r2 * (1.0L / 1680 - r2 * (1.0L / 1188 - r2 * 691.0L / 360360)))));
  return (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * std::numbers::pi_v<long double>) + series - shift;
}

/// 1/Gamma(z) for real z; reflection for z <= 0.
inline long double recip_gamma(long double z) {
  if (z > 0.0L) return std::exp(-log_gamma_pos(z));
  if (z == std::floor(z)) return 0.0L;
  // 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi
  const long double pi = std::numbers::pi_v<long double>;
  return std::sin(pi * z) * std::exp(log_gamma_pos(1.0L - z)) / pi;
}

/// integral_lo^hi (x lambda)^mu recip(mu + 1) d mu by the composite trapezoid
/// with n panels plus the first Euler-Maclaurin end correction. lambda^mu is
/// exp(mu * log_lambda), so the caller fixes the branch.
template <class Recip>
LComplex trapezoid(double x, std::complex<double> log_lambda, double lo, double hi, long n, Recip recip) {
  const LComplex ll(log_lambda.real(), log_lambda.imag());
  const long double lx = std::log(static_cast<long double>(x));
  auto f = [&](long double mu) { return std::exp(mu * (ll + lx)) * recip(mu + 1.0L); };
  const long double h = (static_cast<long double>(hi) - lo) / n;
  LComplex sum = 0.5L * (f(lo) + f(hi));
  for (long j = 1; j < n; ++j) sum += f(lo + j * h);
  sum *= h;
  // one-sided second-order differences: the kernel may be cut off outside
  const long double d = 1e-4L;
  const LComplex d_lo = (-3.0L * f(lo) + 4.0L * f(lo + d) - f(lo + 2 * d)) / (2.0L * d);
  const LComplex d_hi = (3.0L * f(hi) - 4.0L * f(hi - d) + f(hi - 2 * d)) / (2.0L * d);
  return sum - h * h / 12.0L * (d_hi - d_lo);
}

/// h(x, lambda) with the truncated kernel on [-1, 50], 10^6 panels.
inline std::complex<double> h_trapezoid(double x, std::complex<double> log_lambda) {
  const auto v = trapezoid(x, log_lambda, -1.0, 50.0, 1000000, [](long double z) {
    return z <= 0.0L ? 0.0L : recip_gamma(z);
  });
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

/// The band the truncation drops: lambda^alpha integral_{-1-alpha}^{-1} of
/// the classical integrand, 10^5 panels.
inline std::complex<double> correction_trapezoid(double x, std::complex<double> log_lambda, double alpha) {
  const auto v = trapezoid(x, log_lambda, -1.0 - alpha, -1.0, 100000, [](long double z) { return recip_gamma(z); });
  const std::complex<double> band{static_cast<double>(v.real()), static_cast<double>(v.imag())};
  return std::exp(alpha * log_lambda) * band;
}

}  // namespace dorder::oracle
