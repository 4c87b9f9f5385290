#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fraclap/experiments.hpp"
#include "fraclap/oracle.hpp"

using namespace fraclap;

namespace {

Mesh random_mesh(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.35, 0.35);
  std::vector<double> nodes(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    double x = static_cast<double>(j) / n;
    if (j > 0 && j < n) x += jitter(rng) / n;
    nodes[static_cast<size_t>(j)] = x;
  }
  return Mesh::from_nodes(std::move(nodes));
}

}  // namespace

TEST_CASE("tridiagonal reference matrices") {
  const Mesh uni = build_uniform(0.0, 1.0, 8);
  const double h = 0.125;
  const SymmetricMatrix M = mass_matrix_reference(uni);
  CHECK(M(3, 3) == doctest::Approx(2.0 * h / 3.0));
  CHECK(M(3, 4) == doctest::Approx(h / 6.0));
  CHECK(M(0, 5) == 0.0);
  const SymmetricMatrix L = laplacian_stiffness_reference(uni);
  CHECK(L(3, 3) == doctest::Approx(2.0 / h));
  CHECK(L(3, 4) == doctest::Approx(-1.0 / h));

  const Mesh two = build_uniform(0.0, 1.0, 2);
  CHECK(mass_matrix_reference(two)(0, 0) == doctest::Approx(1.0 / 3.0));
  CHECK(laplacian_stiffness_reference(two)(0, 0) == doctest::Approx(4.0));

  const Mesh skew = Mesh::from_nodes({0.0, 0.25, 1.0});
  CHECK(mass_matrix_reference(skew)(0, 0) == doctest::Approx(1.0 / 3.0));
  CHECK(laplacian_stiffness_reference(skew)(0, 0) ==
        doctest::Approx(4.0 + 4.0 / 3.0));
}

TEST_CASE("fourier integrand envelope and domain") {
  const Mesh mesh = random_mesh(6, 3);
  const FractionalOrder s(0.6);
  // |f| <= sum |c_j| * sum |c_k|; translate to the integrand scale
  const int j = 2, k = 4;
  const double cj = 1.0 / mesh.spacing(j) + 1.0 / mesh.spacing(j) +
                    2.0 / mesh.spacing(j + 1);
  const double ck = 1.0 / mesh.spacing(k) + 1.0 / mesh.spacing(k) +
                    2.0 / mesh.spacing(k + 1);
  for (double xi : {0.5, 3.0, 17.0, 211.0}) {
    const double f =
        fourier_integrand(mesh, s, j, k, xi) * std::pow(xi, 4.0 - 2.0 * s.value());
    CHECK(std::abs(f) <= cj * ck * (1.0 + 1e-12));
  }
  CHECK_THROWS_AS(fourier_integrand(mesh, s, 2, 4, 0.0), Error);
  CHECK_THROWS_AS(fourier_integrand(mesh, s, 0, 4, 1.0), Error);
}

TEST_CASE("small-xi triple zero: fitted slope of |f| at least cubic") {
  for (unsigned seed : {5u, 11u}) {
    const Mesh mesh = random_mesh(8, seed);
    const FractionalOrder s(0.7);
    for (auto [j, k] : std::vector<std::pair<int, int>>{{1, 5}, {3, 3}, {2, 6}}) {
      std::vector<double> xs, ys;
      for (int i = 0; i <= 10; ++i) {
        const double xi = std::pow(10.0, -2.4 + 0.04 * i);
        const double f = fourier_integrand(mesh, s, j, k, xi) *
                         std::pow(xi, 4.0 - 2.0 * s.value());
        xs.push_back(xi);
        ys.push_back(std::abs(f));
      }
      const FitResult fit = fit_slope(xs, ys);
      CHECK(fit.slope >= 2.9);
    }
  }
}

TEST_CASE("oracle reproduces the integer Laplacian entry") {
  const Mesh mesh = build_uniform(-1.0, 1.0, 4);  // h = 0.5
  const double q = stiffness_entry_quadrature(mesh, FractionalOrder(1.0), 1, 1);
  CHECK(std::abs(q - 4.0) < 1e-6 * 4.0);
}

TEST_CASE("oracle matches the closed form on the reference mesh") {
  const Mesh mesh = Mesh::from_nodes({0.0, 0.1, 0.4, 1.0});
  {
    const FractionalOrder s(0.75);
    const double cf = stiffness_entry(mesh, s, 1, 2);
    const double q = stiffness_entry_quadrature(mesh, s, 1, 2);
    CHECK(std::abs(cf - q) <= 1e-6 * std::abs(cf));
  }
  {
    const FractionalOrder s(0.5);  // log branch
    const double cf = stiffness_entry(mesh, s, 1, 1);
    const double q = stiffness_entry_quadrature(mesh, s, 1, 1);
    CHECK(std::abs(cf - q) <= 1e-6 * std::abs(cf));
  }
}

TEST_CASE("oracle vs closed form across random meshes and orders") {
  // lighter sibling of the acceptance criterion (5 meshes instead of 20)
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const Mesh mesh = random_mesh(4 + static_cast<int>(seed), seed * 7);
    for (double sv : {0.3, 0.75, 1.2}) {
      const FractionalOrder s(sv);
      for (int j = 1; j <= mesh.interior_nodes(); ++j) {
        for (int k = j; k <= mesh.interior_nodes(); ++k) {
          const double cf = stiffness_entry(mesh, s, j, k);
          const double q = stiffness_entry_quadrature(mesh, s, j, k);
          CHECK(std::abs(cf - q) <=
                std::max(1e-6 * std::abs(cf), 1e-10));
        }
      }
    }
  }
}

TEST_CASE("quadrature spec validation and manual truncation") {
  const Mesh mesh = Mesh::from_nodes({0.0, 0.1, 0.4, 1.0});
  const FractionalOrder s(0.75);
  QuadratureSpec spec;
  spec.tolerance = -1.0;
  CHECK_THROWS_AS(stiffness_entry_quadrature(mesh, s, 1, 1, spec), Error);
  spec.tolerance = 1e-8;
  spec.truncation = 2000.0;  // explicit T; the analytic tail covers beyond
  const double q = stiffness_entry_quadrature(mesh, s, 1, 1, spec);
  const double cf = stiffness_entry(mesh, s, 1, 1);
  CHECK(std::abs(cf - q) <= 1e-6 * std::abs(cf));
}
