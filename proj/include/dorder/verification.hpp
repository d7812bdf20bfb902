#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dorder/fractional_operators.hpp"
#include "dorder/quadrature.hpp"
#include "dorder/solvers.hpp"

namespace dorder {

struct CheckResult {
  std::string name;
  double target = 0.0;
  double achieved = 0.0;
  bool pass = false;
  /// Shipped as a known limitation; a failure here does not fail the suite.
  bool expected_fail = false;
  std::string details;
};

class VerificationReport {
 public:
  /// pass is derived as achieved <= target (NaN never passes).
  void add(std::string name, double target, double achieved, std::string details = {},
           bool expected_fail = false);
  void append(const VerificationReport& other);

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  /// True when every check passes or is marked expected-fail.
  bool ok() const noexcept;
  std::size_t unexpected_failures() const noexcept;

 private:
  std::vector<CheckResult> checks_;
};

/// 129-node style composite Simpson of every pairing |k|,|n| <= k_range
/// against mode_inner_product. quad_points odd and >= 65.
VerificationReport check_orthogonality(double beta, int k_range, int quad_points);

/// Max over x_grid of |integral_0^beta D^alpha y(x) d alpha| / (1 + max|y|),
/// with D^alpha y taken from the series representation.
VerificationReport check_equation_residual(const SpectralSeries& s, std::span<const double> x_grid,
                                           const QuadratureConfig& config = {},
                                           double target = 1e-8);

/// The same residual for y = h(., lambda_k), but with D^alpha h computed by
/// termwise_deriv quadrature rather than the eigen-relation.
VerificationReport check_root_annihilation(double beta, std::span<const int> ks,
                                           std::span<const double> x_grid,
                                           const QuadratureConfig& config = {},
                                           double target = 1e-8);

/// max |termwise_deriv(x, lambda, alpha) - lambda^alpha h(x, lambda)| / (1 + |h|)
/// over the full product grid.
VerificationReport check_eigen_relation(std::span<const double> xs, std::span<const double> alphas,
                                        std::span<const Eigenvalue> lambdas,
                                        const QuadratureConfig& config = {}, double target = 1e-8);

/// sup_alpha |D^alpha y(a) - phi(alpha)| over a uniform grid of alpha_points
/// (nearest nodes for sampled phi), target 1e-7 (1 + sup|phi|).
VerificationReport check_initial_residual(const SpectralSeries& s, const CauchyProblem& p,
                                          int alpha_points, bool expected_fail = false);

VerificationReport check_boundary_residual(const SpectralSeries& s, const BoundaryProblem& p,
                                           int alpha_points, bool expected_fail = false);

/// Tabulates |a0 h(a, lambda_m) + b0 h(b, lambda_m)| for 0 < |m| <= k_max;
/// passes iff the minimum exceeds kDegeneracyFloor.
VerificationReport scan_nondegeneracy(double a, double b, double a0, double b0, double beta,
                                      int k_max, const QuadratureConfig& config = {},
                                      bool expected_fail = false);

/// Manufactured data for the Cauchy problem: uniform samples on [0, beta] of
/// phi(alpha) = sum_k c_k mode_fn(k, alpha) h(a, lambda_k).
SampledPhi manufacture_cauchy_phi(double a, const std::map<int, Complex>& coefficients, double beta,
                                  std::size_t nodes, const QuadratureConfig& config = {});

/// phi(alpha) = sum_k c_k mode_fn(k, alpha) [a0 h(a, lambda_k) + b0 h(b, lambda_k)].
SampledPhi manufacture_boundary_phi(double a, double b, double a0, double b0,
                                    const std::map<int, Complex>& coefficients, double beta,
                                    std::size_t nodes, const QuadratureConfig& config = {});

/// c_k = 1 / (1 + k^2) for 0 < |k| <= k_max.
std::map<int, Complex> manufactured_coefficients(int k_max);

struct BoundaryPair {
  double a;
  double b;
  double a0;
  double b0;
};

/// Real boundary coefficients that (numerically) annihilate the m = 1
/// denominator a0 h(a, lambda_1) + b0 h(b, lambda_1). With a = 1e-3 the
/// phase of h(b, lambda_1) relative to h(a, lambda_1) crosses pi for some b
/// in [2, 12]; b is located by bisection on Im(h(a) conj(h(b))). a0 is
/// 1 / |h(a, lambda_1)| and b0 the least-squares real multiplier
/// -a0 Re(h(a) conj(h(b))) / |h(b)|^2.
BoundaryPair construct_near_degenerate(double beta, const QuadratureConfig& config = {});

struct GlStudyPoint {
  double x;
  Complex reference;             // termwise_deriv + correction_term
  Complex h;                     // h(x, lambda)
  std::vector<double> errors;    // |gl - reference| per step
  std::vector<double> orders;    // log2(e_i / e_{i+1}) per halving
};

struct GlStudy {
  std::vector<double> steps;
  std::vector<GlStudyPoint> points;
  double min_order() const;
};

/// Grunwald-Letnikov derivative of cell-averaged h(., lambda) on [0, x_max]
/// against the classical Riemann-Liouville value at each eval point.
/// `steps` should halve successively.
GlStudy gl_convergence_study(Eigenvalue lambda, FracOrder alpha, std::span<const double> steps,
                             std::span<const double> eval_points, double x_max,
                             const QuadratureConfig& config = {});

enum class Suite { Default, Full };

/// The shipped audit. `target_scale` multiplies every target; anything other
/// than 1 is only meant for exercising the failure path.
VerificationReport run_suite(Suite suite, double target_scale = 1.0);

}  // namespace dorder
