#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fraclap/experiments.hpp"

using namespace fraclap;

TEST_CASE("fit_slope on exact power data") {
  const std::vector<double> xs = {2.0, 4.0, 8.0, 16.0};
  {
    std::vector<double> ys;
    for (double x : xs) ys.push_back(x * x);
    const FitResult fit = fit_slope(xs, ys);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.residual < 1e-13);
  }
  {
    const std::vector<double> ys(xs.size(), 5.0);
    CHECK(fit_slope(xs, ys).slope == doctest::Approx(0.0));
  }
  {
    std::vector<double> ys;
    for (double x : xs) ys.push_back(3.0 / x);
    const FitResult fit = fit_slope(xs, ys);
    CHECK(fit.slope == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  }
}

TEST_CASE("fit_slope validation") {
  CHECK_THROWS_AS(fit_slope(std::vector<double>{1.0, 2.0},
                            std::vector<double>{1.0, 2.0}),
                  Error);
  CHECK_THROWS_AS(fit_slope(std::vector<double>{1.0, 2.0, 3.0},
                            std::vector<double>{1.0, -2.0, 3.0}),
                  Error);
  CHECK_THROWS_WITH_AS(fit_slope(std::vector<double>{2.0, 2.0, 2.0},
                                 std::vector<double>{1.0, 2.0, 3.0}),
                       doctest::Contains("degenerate_fit"), Error);
}

TEST_CASE("n_list validation") {
  const std::vector<int> bad_order = {8, 8, 16};
  CHECK_THROWS_AS(convergence_study(0.75, 2.0, bad_order), Error);
  const std::vector<int> short_list = {8, 16};
  CHECK_THROWS_AS(conditioning_study(0.75, 2.0, short_list), Error);
}

TEST_CASE("convergence study: second order for s=1, alpha=2") {
  const std::vector<int> ladder = {16, 32, 64, 128};
  const StudyReport report = convergence_study(1.0, 2.0, ladder);
  REQUIRE(report.rows.size() == 4);
  const FitResult fit = report.fits.at("max_error");
  CHECK(std::abs(fit.slope - (-2.0)) < 0.3);
  CHECK(report.expected.at("max_error_slope") == doctest::Approx(-2.0));
  // error quarters when N doubles
  for (size_t i = 1; i < report.rows.size(); ++i) {
    const double ratio = report.rows[i - 1][4] / report.rows[i][4];
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
  }
  // rows sorted by N
  for (size_t i = 1; i < report.rows.size(); ++i) {
    CHECK(report.rows[i][0] > report.rows[i - 1][0]);
  }
}

TEST_CASE("conditioning study: classical slope 2 for s=1 uniform") {
  const std::vector<int> ladder = {16, 32, 64, 128};
  const StudyReport report =
      conditioning_study(1.0, 1.0, ladder, GradingKind::PowerSymmetric);
  REQUIRE(report.rows.size() == 4);
  CHECK(std::abs(report.fits.at("cond").slope - 2.0) < 0.3);
  CHECK(report.expected.at("cond_slope") == doctest::Approx(3.0 * 1.0 - 2.0 + 0.0).epsilon(1));
  // monotone cond growth
  for (size_t i = 1; i < report.rows.size(); ++i) {
    CHECK(report.rows[i][6] > report.rows[i - 1][6]);
  }
}

TEST_CASE("study reports are byte-deterministic") {
  const std::vector<int> ladder = {8, 16, 32};
  const StudyReport a = convergence_study(0.75, 2.0, ladder);
  const StudyReport b = convergence_study(0.75, 2.0, ladder);
  CHECK(a.csv() == b.csv());
  CHECK(a.json_summary() == b.json_summary());
  const StudyReport c = conditioning_study(0.75, 2.0, ladder);
  const StudyReport d = conditioning_study(0.75, 2.0, ladder);
  CHECK(c.csv() == d.csv());
  CHECK(c.json_summary() == d.json_summary());
}

TEST_CASE("csv layout") {
  const std::vector<int> ladder = {8, 16, 32};
  const StudyReport report = convergence_study(0.75, 2.0, ladder);
  const std::string csv = report.csv();
  CHECK(csv.rfind("N,h_max,h_min,ratio,max_error\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
}

TEST_CASE("mu_scan validation and degeneracy flag") {
  const std::vector<int> ladder = {8, 16, 32, 48};
  CHECK_THROWS_AS(mu_scan(0.75, 4.0, ladder), Error);   // s >= 1/2
  CHECK_THROWS_AS(mu_scan(0.3, 1.0, ladder), Error);    // alpha == 1
  // s just below 1/2: the implied-mu denominator collapses
  const MuEstimate near_half = mu_scan(0.5 - 1e-13, 4.0, ladder);
  CHECK_FALSE(near_half.finite);
}

TEST_CASE("mu_scan produces a finite estimate for s=0.3") {
  const std::vector<int> ladder = {16, 32, 64, 128};
  const MuEstimate est = mu_scan(0.3, 2.0 / 0.3, ladder);
  CHECK(est.finite);
  CHECK(est.rows_used >= 3);
  CHECK(est.implied_mu > 0.0);
  CHECK(est.implied_mu < 1.5);
  CHECK(est.implied_mu_alt == doctest::Approx(-est.implied_mu));
  const std::string json = est.json();
  CHECK(json.find("implied_mu") != std::string::npos);
}
