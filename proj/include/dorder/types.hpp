#pragma once

#include <complex>
#include <numbers>

namespace dorder {

using Complex = std::complex<double>;

inline constexpr double kDefaultBeta = std::numbers::sqrt2;

/// A spectral parameter lambda stored through a fixed logarithm, so that
/// lambda^nu = exp(nu * log) is single-valued for every real nu.
///
/// Values supplied by a user go through the principal branch. Characteristic
/// roots carry their lattice logarithm i*2k*pi/beta, which generally lies
/// outside the principal strip; that branch is the one on which
/// integral_0^beta lambda^alpha d alpha vanishes.
class Eigenvalue {
 public:
  /// Principal branch. Throws BranchCut on the closed negative real axis and
  /// InvalidArgument for zero or non-finite input.
  static Eigenvalue from_value(Complex value);
  static Eigenvalue from_log(Complex log);

  Complex log() const noexcept { return log_; }
  Complex value() const { return std::exp(log_); }
  Complex pow(double nu) const { return std::exp(nu * log_); }
  double modulus() const { return std::exp(log_.real()); }
  Eigenvalue conj() const { return Eigenvalue(std::conj(log_)); }

 private:
  explicit Eigenvalue(Complex log) : log_(log) {}
  Complex log_;
};

}  // namespace dorder
