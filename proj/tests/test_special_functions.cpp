#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fraclap/special_functions.hpp"

using namespace fraclap;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}
}  // namespace

TEST_CASE("gamma matches known values") {
  CHECK(rel_err(fraclap::gamma(0.5), std::sqrt(kPi)) < 1e-13);
  CHECK(rel_err(fraclap::gamma(3.0), 2.0) < 1e-13);
  CHECK(rel_err(fraclap::gamma(6.0), 120.0) < 1e-13);
  CHECK(rel_err(fraclap::gamma(1.0), 1.0) < 1e-14);
  CHECK(rel_err(fraclap::gamma(20.0), 1.21645100408832e17) < 1e-12);
}

TEST_CASE("gamma agrees with the C library over [0.5, 20]") {
  double worst = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double x = 0.5 + i * (19.5 / 400.0);
    worst = std::max(worst, rel_err(fraclap::gamma(x), std::tgamma(x)));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("gamma recurrence x*Gamma(x) = Gamma(x+1)") {
  for (int i = 0; i < 100; ++i) {
    const double x = 0.5 + i * (9.5 / 99.0);
    CHECK(rel_err(x * fraclap::gamma(x), fraclap::gamma(x + 1.0)) < 1e-12);
  }
}

TEST_CASE("gamma reflection below 0.5") {
  // Gamma(x) Gamma(1-x) = pi / sin(pi x)
  for (double x : {0.1, 0.25, 0.4, -0.5, -1.3}) {
    CHECK(rel_err(fraclap::gamma(x) * fraclap::gamma(1.0 - x), kPi / std::sin(kPi * x)) < 1e-12);
  }
}

TEST_CASE("gamma pole errors") {
  CHECK_THROWS_WITH_AS(fraclap::gamma(0.0), doctest::Contains("pole_error"), Error);
  CHECK_THROWS_AS(fraclap::gamma(-1.0), Error);
  CHECK_THROWS_AS(fraclap::gamma(-7.0), Error);
}

TEST_CASE("fractional order domain and branch flag") {
  CHECK_THROWS_AS(FractionalOrder(0.0), Error);
  CHECK_THROWS_AS(FractionalOrder(1.5), Error);
  CHECK_THROWS_AS(FractionalOrder(-0.3), Error);
  CHECK(FractionalOrder(0.5).is_half());
  CHECK(FractionalOrder(0.5 + 5e-7).is_half());
  CHECK_FALSE(FractionalOrder(0.5 + 2e-6).is_half());
  CHECK(FractionalOrder(0.75).distance_exponent() == doctest::Approx(1.5));
}

TEST_CASE("c_hat values and branch error") {
  // s -> 0 limit is 1/(2*Gamma(4)) = 1/12
  CHECK(rel_err(c_hat(FractionalOrder(1e-8)), 1.0 / 12.0) < 1e-6);
  CHECK(rel_err(c_hat(FractionalOrder(1.0)), -0.5) < 1e-14);
  // Gamma(2.5) = (3/4) sqrt(pi) makes c_hat(0.75) = -4 / (3 sqrt(2 pi))
  CHECK(rel_err(c_hat(FractionalOrder(0.75)),
                -4.0 / (3.0 * std::sqrt(2.0 * kPi))) < 1e-13);
  CHECK(c_hat(FractionalOrder(0.25)) > 0.0);
  CHECK(c_hat(FractionalOrder(1.25)) < 0.0);
  CHECK_THROWS_WITH_AS(c_hat(FractionalOrder(0.5)),
                       doctest::Contains("branch_error"), Error);
  CHECK_THROWS_AS(c_hat(FractionalOrder(0.5 + 5e-7)), Error);
  CHECK_NOTHROW(c_hat(FractionalOrder(0.5 + 2e-6)));
}

TEST_CASE("beta function") {
  CHECK(rel_err(fraclap::beta(1.0, 1.0), 1.0) < 1e-14);
  CHECK(rel_err(fraclap::beta(2.0, 2.0), 1.0 / 6.0) < 1e-13);
  CHECK(rel_err(fraclap::beta(2.5, 1.0), 0.4) < 1e-13);
  CHECK(rel_err(fraclap::beta(0.5, 0.5), kPi) < 1e-13);
  CHECK_THROWS_AS(fraclap::beta(0.0, 1.0), Error);
  CHECK_THROWS_AS(fraclap::beta(1.0, -2.0), Error);
}

TEST_CASE("incomplete beta basics") {
  for (double y : {0.0, 0.125, 0.5, 0.875, 1.0}) {
    CHECK(std::abs(incomplete_beta(y, 1.0, 1.0) - y) < 1e-14);
  }
  CHECK(rel_err(incomplete_beta(0.5, 2.0, 2.0), 1.0 / 12.0) < 1e-13);
  CHECK(rel_err(incomplete_beta(1.0, 3.5, 2.25), fraclap::beta(3.5, 2.25)) < 1e-13);
  CHECK_THROWS_AS(incomplete_beta(-0.1, 2.0, 2.0), Error);
  CHECK_THROWS_AS(incomplete_beta(1.1, 2.0, 2.0), Error);
  CHECK_THROWS_AS(incomplete_beta(0.5, 0.5, 2.0), Error);
  CHECK_THROWS_AS(incomplete_beta(0.5, 2.0, 0.9), Error);
}

TEST_CASE("incomplete beta reflection identity") {
  // B(y; a, b) + B(1-y; b, a) = B(a, b), including the large-alpha regime
  const double abs_ok = 1e-12;
  for (double a : {1.0, 2.0, 4.0, 10.0, 20.0}) {
    for (double b : {1.0, 3.0, 8.0, 20.0}) {
      const double total = fraclap::beta(a, b);
      for (int i = 1; i < 16; ++i) {
        const double y = i / 16.0;
        const double lhs = incomplete_beta(y, a, b) + incomplete_beta(1.0 - y, b, a);
        CHECK(std::abs(lhs - total) < abs_ok * std::max(1.0, total));
      }
    }
  }
}

TEST_CASE("incomplete beta strictly increasing in y") {
  for (double a : {1.0, 2.5, 12.0}) {
    for (double b : {1.0, 6.0}) {
      double prev = 0.0;
      for (int i = 1; i <= 40; ++i) {
        const double y = i / 40.0;
        const double v = incomplete_beta(y, a, b);
        CHECK(v > prev);
        prev = v;
      }
    }
  }
}

TEST_CASE("incomplete beta against midpoint quadrature oracle") {
  // brute-force reference: composite midpoint rule on the integrand
  auto brute = [](double y, double a, double b) {
    const int steps = 200000;
    double acc = 0.0;
    for (int i = 0; i < steps; ++i) {
      const double t = y * (i + 0.5) / steps;
      acc += std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0);
    }
    return acc * y / steps;
  };
  for (double y : {0.2, 0.7}) {
    for (double a : {1.5, 4.0}) {
      for (double b : {1.0, 2.5}) {
        CHECK(rel_err(incomplete_beta(y, a, b), brute(y, a, b)) < 1e-6);
      }
    }
  }
}
