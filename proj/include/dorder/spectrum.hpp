#pragma once

#include <vector>

#include "dorder/types.hpp"

namespace dorder {

/// The order range [0, beta], beta in (0, 2].
class OrderInterval {
 public:
  explicit OrderInterval(double beta = kDefaultBeta);
  double beta() const noexcept { return beta_; }

 private:
  double beta_;
};

struct CharacteristicRoot {
  int k = 0;
  Eigenvalue lambda = Eigenvalue::from_log(0.0);

  Complex value() const { return lambda.value(); }
};

/// Lattice root lambda_k = exp(i 2 k pi / beta) carrying log = i 2 k pi / beta.
Eigenvalue lattice_root(int k, double beta);

/// F(lambda) = integral_0^beta lambda^alpha d alpha = (lambda^beta - 1) / ln lambda,
/// on the branch fixed by `lambda`. For |ln lambda| < 1e-4 the removable
/// singularity is handled by a six-term series of (e^(beta u) - 1)/u.
Complex char_fn(Eigenvalue lambda, double beta);

/// Principal-branch overload; throws BranchCut on the negative real axis.
Complex char_fn(Complex lambda, double beta);

/// Roots for k in [-k_max, k_max] \ {0}, ascending in k. Throws
/// DegenerateLattice when some lambda_k with 0 < |k| <= 2 k_max comes within
/// 1e-12 of 1, which covers both lambda_k = 1 and any pairwise collision.
std::vector<CharacteristicRoot> roots(double beta, int k_max);

/// exp(i 2 k pi alpha / beta), alpha in [0, beta].
Complex mode_fn(int k, double alpha, double beta);

/// integral_0^beta mode_fn(k, a) mode_fn(-n, a) da in closed form: beta when
/// k == n, otherwise exactly zero.
Complex mode_inner_product(int k, int n, double beta);

}  // namespace dorder
