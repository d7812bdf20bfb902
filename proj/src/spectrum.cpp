#include "dorder/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dorder/errors.hpp"

namespace dorder {

namespace {

constexpr double kSeriesThreshold = 1e-4;
constexpr double kCollisionTol = 1e-12;

void require_beta(double beta) {
  if (!(beta > 0.0 && beta <= 2.0)) {
    throw_invalid("beta must lie in (0, 2], got " + describe(beta));
  }
}

}  // namespace

OrderInterval::OrderInterval(double beta) : beta_(beta) { require_beta(beta); }

Eigenvalue lattice_root(int k, double beta) {
  require_beta(beta);
  return Eigenvalue::from_log({0.0, 2.0 * std::numbers::pi * k / beta});
}

Complex char_fn(Eigenvalue lambda, double beta) {
  require_beta(beta);
  const Complex u = lambda.log();
  if (std::abs(u) < kSeriesThreshold) {
    // (e^{beta u} - 1)/u = beta * sum_j (beta u)^j / (j + 1)!
    const Complex bu = beta * u;
    Complex term{1.0, 0.0};
    Complex sum = term;
    for (int j = 1; j < 6; ++j) {
      term *= bu / static_cast<double>(j + 1);
      sum += term;
    }
    return beta * sum;
  }
  return (std::exp(beta * u) - 1.0) / u;
}

Complex char_fn(Complex lambda, double beta) { return char_fn(Eigenvalue::from_value(lambda), beta); }

std::vector<CharacteristicRoot> roots(double beta, int k_max) {
  require_beta(beta);
  if (k_max < 1) throw_invalid("k_max must be at least 1");
  // lambda_j == lambda_k iff lambda_{j-k} == 1, so scanning up to 2 k_max
  // covers every pairwise collision among the emitted roots.
  for (int k = 1; k <= 2 * k_max; ++k) {
    if (std::abs(lattice_root(k, beta).value() - 1.0) < kCollisionTol) {
      throw Error(ErrorKind::DegenerateLattice,
                  "lambda_" + std::to_string(k) + " = 1 for beta = " + describe(beta) +
                      "; the root lattice collapses");
    }
  }
  std::vector<CharacteristicRoot> out;
  out.reserve(2 * static_cast<std::size_t>(k_max));
  for (int k = -k_max; k <= k_max; ++k) {
    if (k != 0) out.push_back({k, lattice_root(k, beta)});
  }
  return out;
}

Complex mode_fn(int k, double alpha, double beta) {
  require_beta(beta);
  return std::exp(Complex{0.0, 2.0 * std::numbers::pi * k * alpha / beta});
}

Complex mode_inner_product(int k, int n, double beta) {
  require_beta(beta);
  return k == n ? Complex{beta, 0.0} : Complex{};
}

}  // namespace dorder
