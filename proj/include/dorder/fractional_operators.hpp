#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dorder/quadrature.hpp"
#include "dorder/types.hpp"

namespace dorder {

/// Fractional order alpha in [0, 2).
class FracOrder {
 public:
  explicit FracOrder(double alpha);
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// D^alpha h(x, lambda) by direct quadrature of the shifted integrand
/// x^(nu - alpha) lambda^nu / (nu - alpha)!, with the factorial convention
/// applied to the shifted argument. Equals lambda^alpha h(x, lambda).
Complex termwise_deriv(double x, Eigenvalue lambda, FracOrder alpha,
                       const QuadratureConfig& config = {});

/// What the factorial convention discards:
///   lambda^alpha * integral_{-1-alpha}^{-1} (x lambda)^mu / Gamma(mu + 1) d mu.
/// The classical Riemann-Liouville derivative of h is
/// termwise_deriv + correction_term.
Complex correction_term(double x, Eigenvalue lambda, FracOrder alpha,
                        const QuadratureConfig& config = {});

/// integral_0^x h(t, lambda) dt, evaluated termwise as
/// integral_{-1}^{inf} lambda^nu x^(nu + 1) / Gamma(nu + 2) d nu.
Complex h_antiderivative(double x, Eigenvalue lambda, const QuadratureConfig& config = {});

/// Uniform samples on x0 + j * step. Immutable after construction.
class GridFunction {
 public:
  /// Requires x0 >= 0, step > 0, at least 8 finite samples.
  GridFunction(double x0, double step, std::vector<Complex> values);

  /// Point samples f(x0 + j * step), j = 0..count-1.
  static GridFunction sample(const std::function<Complex(double)>& f, double x0, double step,
                             std::size_t count);

  /// Cell averages of h(., lambda) on [0, (count - 1) * step]: entry j is
  /// (1/step) times the integral of h over [(j - 1/2) step, (j + 1/2) step]
  /// clipped to [0, inf), so the origin cell keeps its full-width weight.
  /// h behaves like 1/(x ln^2 x) at the origin, so point samples would leave
  /// an O(1/|ln step|) error in any Grunwald-Letnikov sum; averages keep it
  /// first order.
  static GridFunction h_cell_averages(Eigenvalue lambda, double step, std::size_t count,
                                      const QuadratureConfig& config = {});

  double x0() const noexcept { return x0_; }
  double step() const noexcept { return step_; }
  std::size_t size() const noexcept { return values_.size(); }
  double abscissa(std::size_t j) const noexcept { return x0_ + static_cast<double>(j) * step_; }
  std::span<const Complex> values() const noexcept { return values_; }

 private:
  double x0_;
  double step_;
  std::vector<Complex> values_;
};

/// Grunwald-Letnikov weights w_0 = 1, w_j = w_{j-1} (j - 1 - alpha) / j.
std::vector<double> gl_weights(FracOrder alpha, std::size_t count);

/// step^-alpha * sum_{j=0}^{at_index} w_j f[at_index - j]: the first-order
/// Grunwald-Letnikov approximation of the Riemann-Liouville derivative with
/// lower terminal f.x0(). Throws IndexOutOfRange unless 1 <= at_index < size.
Complex gl_deriv(const GridFunction& f, FracOrder alpha, std::size_t at_index);

/// integral_0^beta y_deriv(alpha) d alpha by adaptive Gauss-Legendre.
Complex distributed_operator(const std::function<Complex(double)>& y_deriv, double beta,
                             const QuadratureConfig& config = {});

}  // namespace dorder
