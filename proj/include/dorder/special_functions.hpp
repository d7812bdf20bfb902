#pragma once

#include "dorder/quadrature.hpp"
#include "dorder/types.hpp"

namespace dorder {

/// 1/Gamma(z) for real z. Exact zero at the non-positive integers, correct
/// sign between the poles. Lanczos (g = 7, n = 9) with reflection below 1/2.
double classical_reciprocal_gamma(double z);

/// 1/v! with the truncation convention: 1/Gamma(v + 1) for v > -1 and
/// exactly 0 for v <= -1.
double reciprocal_factorial(double v);

enum class KernelConvention {
  Truncated,  // reciprocal_factorial: zero for nu <= -1
  Classical,  // classical_reciprocal_gamma(nu + 1)
};

struct HEvalRequest {
  double x = 1.0;
  Eigenvalue lambda = Eigenvalue::from_log(0.0);
  double lower = -1.0;
  KernelConvention convention = KernelConvention::Truncated;
  QuadratureConfig config{};
};

struct HEvalResult {
  Complex value{};
  double error = 0.0;
  double cutoff = 0.0;  // upper terminal used for the infinite range
  int panels = 0;
};

/// Smallest integer T >= 30 with (r^T / T!) / (1 - r/T) < tail_tol, where
/// r = x |lambda|. Throws Overflow when r is too large for double range.
double tail_cutoff(double x, double lambda_modulus, double tail_tol);

/// h(x, lambda) = integral_{lower}^{inf} x^nu lambda^nu / nu! d nu, the
/// generalized Volterra function invariant under fractional differentiation.
///
/// The lower terminal may be shifted into [-3, -1]; with the Truncated
/// convention the region nu <= -1 then contributes nothing, with the
/// Classical one it contributes through 1/Gamma on negative arguments.
HEvalResult eval_h_detailed(const HEvalRequest& request);

Complex eval_h(const HEvalRequest& request);
Complex eval_h(double x, Eigenvalue lambda, const QuadratureConfig& config = {});

}  // namespace dorder
