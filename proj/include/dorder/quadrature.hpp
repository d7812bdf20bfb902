#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dorder/types.hpp"

namespace dorder {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  double tail_tol = 1e-14;
  int max_panels = 4096;
  int panel_order = 16;

  /// Throws InvalidArgument unless every tolerance lies in (0, 1) and the
  /// counts are positive.
  void validate() const;
};

struct QuadResult {
  Complex value{};
  double error = 0.0;  // estimated absolute error
  int panels = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached per order; computed by Newton iteration on P_n.
const GaussRule& gauss_legendre(int order);

using ComplexIntegrand = std::function<Complex(double)>;

/// Globally adaptive Gauss-Legendre quadrature of a complex integrand.
///
/// `breakpoints` must be ascending with at least two entries; the initial
/// panels are the intervals between them. The worst panel is bisected until
/// the summed |whole - (left + right)| estimate drops below
/// max(abs_tol, rel_tol * |I|). A panel whose estimate is already at the
/// rounding level of its own integral (relative to `noise_floor`) is frozen.
/// Throws NonConvergent once `max_panels` is exhausted.
QuadResult integrate(const ComplexIntegrand& f, std::span<const double> breakpoints,
                     const QuadratureConfig& config, double noise_floor = 0.0);

/// Composite Simpson on uniformly spaced samples (odd count >= 3).
Complex simpson(std::span<const Complex> samples, double step);

}  // namespace dorder
