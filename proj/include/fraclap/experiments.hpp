#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fraclap/error.hpp"

namespace fraclap {

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS of log deviations
};

// Least-squares line through (ln x, ln y).  Requires >= 3 positive points;
// throws "degenerate_fit" when all xs coincide.
FitResult fit_slope(std::span<const double> xs, std::span<const double> ys);

// Symmetric grading generator used by the studies on (-1, 1).
enum class GradingKind { BetaMapped, PowerSymmetric };

// Eigenvalue rows are dropped (with a recorded note) once lambda_min falls
// below this fraction of lambda_max: past that point double precision
// carries no information about the small end of the spectrum.
inline constexpr double kEigenFloor = 1e-13;

// Tabular record of one study: rows of per-N measurements plus fitted
// log-log slopes.  Two runs with the same inputs produce identical bytes.
struct StudyReport {
  std::string kind;  // "convergence" | "conditioning"
  double s = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  std::vector<std::string> columns;            // first column is N
  std::vector<std::vector<double>> rows;       // sorted by N
  std::map<std::string, FitResult> fits;       // keyed by column name
  std::map<std::string, double> expected;      // reference slopes
  std::vector<std::string> truncations;        // rows excluded, with reason

  std::string csv() const;
  std::string json_summary() const;
};

// f = 1 model problem on (-1, 1) over a ladder of N: per N, build the
// symmetric graded mesh, assemble, solve, and record the sampled maximum
// error; fits the error slope (expected -min{2, alpha*s}).  A null f means
// f = 1 (the case with the closed-form reference solution).
StudyReport convergence_study(double s, double alpha, std::span<const int> n_list,
                              const std::function<double(double)>& f = nullptr,
                              GradingKind grading = GradingKind::BetaMapped);

// Extreme eigenvalues and condition number over a ladder of N; fits cond
// and lambda_min slopes.  Rows beyond double-precision reach are excluded
// and recorded in truncations.
StudyReport conditioning_study(double s, double alpha,
                               std::span<const int> n_list,
                               GradingKind grading = GradingKind::BetaMapped);

// Implied grading-sensitivity exponent mu for s in (0, 1/2): the total cond
// exponent e fitted against N combined with ratio ~ N^(alpha-1) gives
// mu = (e - 2s) / ((alpha-1)(1-2s)).  implied_mu_alt records the opposite
// sign convention for the ratio exponent.
struct MuEstimate {
  double s = 0.0;
  double alpha = 0.0;
  double fitted_exponent = 0.0;
  double fit_residual = 0.0;
  double implied_mu = 0.0;
  double implied_mu_alt = 0.0;
  bool finite = false;
  int rows_used = 0;
  std::vector<std::string> truncations;

  std::string json() const;
};

MuEstimate mu_scan(double s, double alpha, std::span<const int> n_list);

}  // namespace fraclap
