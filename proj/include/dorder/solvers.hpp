#pragma once

#include <concepts>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "dorder/quadrature.hpp"
#include "dorder/spectrum.hpp"
#include "dorder/types.hpp"

namespace dorder {

inline constexpr double kDegeneracyFloor = 1e-12;

/// amplitude * mode_fn(k, alpha)
struct ModePhi {
  int k = 1;
  Complex amplitude{1.0, 0.0};
};

/// amplitude * cos(2 pi k alpha / beta)
struct CosinePhi {
  int k = 1;
  Complex amplitude{1.0, 0.0};
};

struct ConstantPhi {
  Complex c{1.0, 0.0};
};

/// Samples on a uniform grid covering [0, beta] exactly; odd count >= 9.
struct SampledPhi {
  std::vector<double> alphas;
  std::vector<Complex> values;
};

/// The data phi(alpha) of the initial and boundary conditions.
class DataFunction {
 public:
  using Kind = std::variant<ModePhi, CosinePhi, ConstantPhi, SampledPhi>;

  template <class T>
    requires std::constructible_from<Kind, T&&>
  DataFunction(T&& kind) : kind_(std::forward<T>(kind)) {}  // NOLINT: implicit by intent

  const Kind& kind() const noexcept { return kind_; }
  bool is_sampled() const noexcept { return std::holds_alternative<SampledPhi>(kind_); }

  /// Throws GridTooCoarse (fewer than 9 samples) or InvalidArgument (even
  /// count, non-uniform, wrong end points, mismatched sizes, k out of range).
  void validate(double beta) const;

  /// phi(alpha). Sampled data is linearly interpolated between nodes.
  Complex operator()(double alpha, double beta) const;

  /// sup |phi| over [0, beta] (over the nodes for sampled data).
  double sup_norm(double beta) const;

 private:
  Kind kind_;
};

struct CauchyProblem {
  double a = 1.0;
  DataFunction phi = ConstantPhi{};
  OrderInterval interval{};
  int k_max = 16;
  QuadratureConfig config{};

  void validate() const;
};

struct BoundaryProblem {
  double a = 1.0;
  double b = 2.0;
  double a0 = 1.0;
  double b0 = 0.0;
  DataFunction phi = ConstantPhi{};
  OrderInterval interval{};
  int k_max = 16;
  QuadratureConfig config{};

  void validate() const;
};

struct SeriesDiagnostics {
  /// h(a, lambda_k) for every retained k, ascending in k.
  std::vector<std::pair<int, Complex>> h_values;
  /// |h(a, lambda_k)| (Cauchy) or |a0 h(a, lambda_k) + b0 h(b, lambda_k)| (boundary).
  std::vector<std::pair<int, double>> denominators;
  double min_denominator = 0.0;
  /// max over k = +-(k_max + 1) of |c_k * denominator_k|, i.e. the size of the
  /// first dropped pair of terms at the data point.
  double neglected_tail = 0.0;
  /// All projections vanish: phi is orthogonal to every retained mode.
  bool zero_projection = false;
};

/// y(x) = sum_{0 < |k| <= k_max} c_k h(x, lambda_k). Immutable.
class SpectralSeries {
 public:
  /// Throws InvalidArgument for an entry at k = 0.
  SpectralSeries(OrderInterval interval, std::map<int, Complex> coefficients,
                 SeriesDiagnostics diagnostics = {});

  double beta() const noexcept { return interval_.beta(); }
  const OrderInterval& interval() const noexcept { return interval_; }
  const std::map<int, Complex>& coefficients() const noexcept { return coefficients_; }
  Complex coefficient(int k) const;
  int k_max() const noexcept;
  const SeriesDiagnostics& diagnostics() const noexcept { return diagnostics_; }

 private:
  OrderInterval interval_;
  std::map<int, Complex> coefficients_;
  SeriesDiagnostics diagnostics_;
};

/// The basis values h(x, lambda_k) of a series at one abscissa, so that
/// D^alpha y(x) can be evaluated for many alpha at the cost of one set of
/// quadratures.
class SeriesAtPoint {
 public:
  SeriesAtPoint(const SpectralSeries& series, double x, const QuadratureConfig& config = {});

  double x() const noexcept { return x_; }
  Complex value() const;
  /// sum c_k lambda_k^alpha h(x, lambda_k), 0 <= alpha <= beta.
  Complex deriv(double alpha) const;

 private:
  double x_;
  double beta_;
  std::vector<std::pair<int, Complex>> weighted_;  // c_k h(x, lambda_k)
};

Complex evaluate_series(const SpectralSeries& s, double x, const QuadratureConfig& config = {});
Complex evaluate_series_deriv(const SpectralSeries& s, double x, double alpha,
                              const QuadratureConfig& config = {});

/// integral_0^beta phi(alpha) mode_fn(-n, alpha) d alpha; closed form for
/// builtins, composite Simpson on the nodes for sampled data.
Complex project_coefficient(const DataFunction& phi, int n, const OrderInterval& interval,
                            const QuadratureConfig& config = {});

/// c_n = projection_n / (beta h(a, lambda_n)). Throws DegenerateMode(n).
SpectralSeries solve_cauchy(const CauchyProblem& p);

/// c_m = projection_m / (beta [a0 h(a, lambda_m) + b0 h(b, lambda_m)]).
/// Throws NonDegeneracyViolated(m).
SpectralSeries solve_bvp(const BoundaryProblem& p);

}  // namespace dorder
