#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "dorder/errors.hpp"
#include "dorder/spectrum.hpp"

using namespace dorder;

TEST_SUITE("spectrum") {

TEST_CASE("OrderInterval") {
  CHECK(OrderInterval().beta() == std::numbers::sqrt2);
  CHECK(OrderInterval(2.0).beta() == 2.0);
  CHECK_THROWS_AS(OrderInterval(0.0), Error);
  CHECK_THROWS_AS(OrderInterval(2.01), Error);
}

TEST_CASE("char_fn") {
  const double beta = kDefaultBeta;
  CHECK(std::abs(char_fn(Complex{1.0, 0.0}, beta) - beta) < 1e-15);
  CHECK(std::abs(char_fn(lattice_root(1, beta), beta)) < 1e-12);
  CHECK(std::abs(char_fn(Complex{std::numbers::e, 0.0}, beta) - (std::exp(beta) - 1.0)) < 1e-14);

  SUBCASE("series and direct branches join continuously") {
    for (double eps : {1e-5, -1e-5, 0.99e-4, 1.01e-4}) {
      const Complex u{eps, 0.3 * eps};
      const Complex direct = (std::exp(beta * u) - 1.0) / u;
      CHECK(std::abs(char_fn(Eigenvalue::from_log(u), beta) - direct) < 1e-11);
    }
  }
  SUBCASE("principal branch misses the lattice") {
    // lambda_1 reduced to the principal strip is no longer a zero of F
    const Complex principal = char_fn(lattice_root(1, beta).value(), beta);
    CHECK(std::abs(principal) > 0.1);
  }
  CHECK_THROWS_AS(char_fn(Complex{-1.0, 0.0}, beta), Error);
}

TEST_CASE("roots") {
  const auto rs = roots(kDefaultBeta, 3);
  REQUIRE(rs.size() == 6);
  CHECK(rs.front().k == -3);
  CHECK(rs.back().k == 3);
  for (std::size_t i = 1; i < rs.size(); ++i) CHECK(rs[i - 1].k < rs[i].k);

  const Complex l1 = roots(kDefaultBeta, 1)[1].value();
  const Complex want = std::exp(Complex{0.0, std::numbers::sqrt2 * std::numbers::pi});
  CHECK(std::abs(l1 - want) < 1e-15);

  SUBCASE("distinct and annihilated up to k = 20") {
    const auto many = roots(kDefaultBeta, 20);
    REQUIRE(many.size() == 40);
    for (std::size_t i = 0; i < many.size(); ++i) {
      CHECK(std::abs(char_fn(many[i].lambda, kDefaultBeta)) <= 1e-12);
      for (std::size_t j = i + 1; j < many.size(); ++j) {
        CHECK(std::abs(many[i].value() - many[j].value()) > 1e-6);
      }
    }
  }
  SUBCASE("degenerate lattices") {
    auto kind = [](double beta, int k_max) {
      try {
        roots(beta, k_max);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::IndexOutOfRange;
    };
    CHECK(kind(1.0, 1) == ErrorKind::DegenerateLattice);
    CHECK(kind(0.5, 1) == ErrorKind::DegenerateLattice);
    // beta = 2: lambda_1 = lambda_-1 = -1
    CHECK(kind(2.0, 1) == ErrorKind::DegenerateLattice);
    // beta = 1.5: lambda_3 = 1, so lambda_1 = lambda_-2
    CHECK(kind(1.5, 1) == ErrorKind::IndexOutOfRange);
    CHECK(kind(1.5, 2) == ErrorKind::DegenerateLattice);
    CHECK(kind(kDefaultBeta, 0) == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("mode functions") {
  const double beta = kDefaultBeta;
  CHECK(mode_fn(3, 0.0, beta) == Complex{1.0, 0.0});
  CHECK(std::abs(mode_fn(2, beta, beta) - 1.0) < 1e-14);
  CHECK(std::abs(mode_fn(1, beta / 2, beta) + 1.0) < 1e-15);
  CHECK(std::abs(mode_fn(-1, 0.3, beta) - std::conj(mode_fn(1, 0.3, beta))) == 0.0);

  CHECK(mode_inner_product(1, 1, beta) == Complex{beta, 0.0});
  CHECK(mode_inner_product(1, 2, beta) == Complex{});
  CHECK(mode_inner_product(1, -1, beta) == Complex{});
  CHECK(mode_inner_product(-3, -3, 1.7) == Complex{1.7, 0.0});
}

}  // TEST_SUITE
