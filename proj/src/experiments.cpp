#include "fraclap/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "fraclap/assembly.hpp"
#include "fraclap/mesh.hpp"
#include "fraclap/solver.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_n_list(std::span<const int> n_list) {
  if (n_list.size() < 3) {
    throw Error("domain_error", "study needs at least 3 ladder entries");
  }
  for (size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) {
      throw Error("domain_error", "study ladder must be increasing");
    }
  }
}

Mesh make_study_mesh(double s_unused, double alpha, int n, GradingKind grading) {
  (void)s_unused;
  if (grading == GradingKind::PowerSymmetric) {
    if (alpha == 1.0) return build_uniform(-1.0, 1.0, n);
    return build_power_symmetric(-1.0, 1.0, n, alpha);
  }
  return build_beta_mapped(-1.0, 1.0, n, alpha, alpha);
}

// Fits excluding the smallest N when the ladder allows it; the smallest
// rung is pre-asymptotic and biases the slope.
FitResult fit_excluding_smallest(const std::vector<double>& xs,
                                 const std::vector<double>& ys) {
  if (xs.size() >= 4) {
    return fit_slope(std::span(xs).subspan(1), std::span(ys).subspan(1));
  }
  return fit_slope(xs, ys);
}

json fit_to_json(const FitResult& f) {
  return json{{"slope", f.slope},
              {"intercept", f.intercept},
              {"residual", f.residual}};
}

json report_common_json(const StudyReport& r) {
  json out;
  out["kind"] = r.kind;
  out["s"] = r.s;
  out["alpha"] = r.alpha;
  out["beta"] = r.beta;
  out["domain"] = json::array({r.a, r.b});
  out["columns"] = r.columns;
  out["rows"] = r.rows;
  json fits = json::object();
  for (const auto& [name, fit] : r.fits) fits[name] = fit_to_json(fit);
  out["fits"] = fits;
  out["expected_slopes"] = r.expected;
  out["truncations"] = r.truncations;
  return out;
}

}  // namespace

FitResult fit_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error("domain_error", "fit_slope needs matching lengths");
  }
  if (xs.size() < 3) {
    throw Error("domain_error", "fit_slope needs at least 3 points");
  }
  const size_t n = xs.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw Error("domain_error", "fit_slope needs positive data");
    }
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double det = n * sxx - sx * sx;
  if (!(std::abs(det) > 1e-12 * n * sxx) || sxx == 0.0) {
    throw Error("degenerate_fit", "all abscissae coincide");
  }
  FitResult fit;
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double dev =
        std::log(ys[i]) - (fit.intercept + fit.slope * std::log(xs[i]));
    ss += dev * dev;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

std::string StudyReport::csv() const {
  std::ostringstream out;
  for (size_t c = 0; c < columns.size(); ++c) {
    out << columns[c] << (c + 1 < columns.size() ? "," : "\n");
  }
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      out << fmt17(row[c]) << (c + 1 < row.size() ? "," : "\n");
    }
  }
  return out.str();
}

std::string StudyReport::json_summary() const {
  return report_common_json(*this).dump(2) + "\n";
}

StudyReport convergence_study(double s, double alpha,
                              std::span<const int> n_list,
                              const std::function<double(double)>& f,
                              GradingKind grading) {
  check_n_list(n_list);
  if (!(alpha >= 1.0)) {
    throw Error("domain_error", "convergence study needs alpha >= 1");
  }
  const FractionalOrder order(s);
  StudyReport report;
  report.kind = "convergence";
  report.s = s;
  report.alpha = alpha;
  report.beta = alpha;
  report.a = -1.0;
  report.b = 1.0;
  report.columns = {"N", "h_max", "h_min", "ratio", "max_error"};

  const std::function<double(double)> rhs =
      f ? f : [](double) { return 1.0; };
  for (int n : n_list) {
    const Mesh mesh = make_study_mesh(s, alpha, n, grading);
    const MeshStats stats = mesh_stats(mesh);
    const StiffnessMatrix S = assemble(mesh, order);
    const LoadVector b = assemble_load(mesh, rhs);
    const FemSolution u = solve(S, b);
    const double err = max_error(u, order);
    report.rows.push_back({static_cast<double>(n), stats.h_max, stats.h_min,
                           stats.ratio, err});
  }

  std::vector<double> ns, errs;
  for (const auto& row : report.rows) {
    ns.push_back(row[0]);
    errs.push_back(row[4]);
  }
  report.fits["max_error"] = fit_excluding_smallest(ns, errs);
  report.expected["max_error_slope"] = -std::min(2.0, alpha * s);
  return report;
}

namespace {

struct ConditioningRows {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> truncations;
};

ConditioningRows conditioning_rows(double s, double alpha,
                                   std::span<const int> n_list,
                                   GradingKind grading) {
  const FractionalOrder order(s);
  ConditioningRows out;
  for (int n : n_list) {
    try {
      const Mesh mesh = make_study_mesh(s, alpha, n, grading);
      const MeshStats stats = mesh_stats(mesh);
      const StiffnessMatrix S = assemble(mesh, order);
      const SpectralSummary sum = condition_number(S);
      if (sum.lambda_min <= kEigenFloor * sum.lambda_max) {
        out.truncations.push_back(
            "N=" + std::to_string(n) +
            " excluded: lambda_min below 1e-13 * lambda_max");
        continue;
      }
      out.rows.push_back({static_cast<double>(n), stats.h_max, stats.h_min,
                          stats.ratio, sum.lambda_min, sum.lambda_max,
                          sum.cond});
    } catch (const Error& e) {
      out.truncations.push_back("N=" + std::to_string(n) +
                                " excluded: " + std::string(e.what()));
    }
  }
  return out;
}

}  // namespace

StudyReport conditioning_study(double s, double alpha,
                               std::span<const int> n_list,
                               GradingKind grading) {
  check_n_list(n_list);
  if (!(alpha >= 1.0)) {
    throw Error("domain_error", "conditioning study needs alpha >= 1");
  }
  StudyReport report;
  report.kind = "conditioning";
  report.s = s;
  report.alpha = alpha;
  report.beta = alpha;
  report.a = -1.0;
  report.b = 1.0;
  report.columns = {"N",          "h_max",      "h_min", "ratio",
                    "lambda_min", "lambda_max", "cond"};

  ConditioningRows data = conditioning_rows(s, alpha, n_list, grading);
  report.rows = std::move(data.rows);
  report.truncations = std::move(data.truncations);

  if (report.rows.size() >= 3) {
    std::vector<double> ns, lmins, conds;
    for (const auto& row : report.rows) {
      ns.push_back(row[0]);
      lmins.push_back(row[4]);
      conds.push_back(row[6]);
    }
    report.fits["cond"] = fit_excluding_smallest(ns, conds);
    report.fits["lambda_min"] = fit_excluding_smallest(ns, lmins);
  } else {
    report.truncations.push_back("fit skipped: fewer than 3 surviving rows");
  }
  if (s >= 0.5 && s <= 1.0) {
    report.expected["cond_slope"] = alpha * (2.0 * s - 1.0) + 1.0;
    report.expected["lambda_min_slope"] = -1.0;
  }
  return report;
}

MuEstimate mu_scan(double s, double alpha, std::span<const int> n_list) {
  check_n_list(n_list);
  if (!(s > 0.0) || !(s < 0.5)) {
    throw Error("domain_error", "mu scan needs s in (0, 1/2)");
  }
  if (!(alpha > 1.0)) {
    throw Error("domain_error", "mu scan needs alpha > 1");
  }
  MuEstimate est;
  est.s = s;
  est.alpha = alpha;

  ConditioningRows data =
      conditioning_rows(s, alpha, n_list, GradingKind::BetaMapped);
  est.truncations = std::move(data.truncations);

  const double nan = std::nan("");
  if (data.rows.size() < 3) {
    est.truncations.push_back("fit skipped: fewer than 3 surviving rows");
    est.fitted_exponent = nan;
    est.fit_residual = nan;
    est.implied_mu = nan;
    est.implied_mu_alt = nan;
    est.finite = false;
    est.rows_used = 0;
    return est;
  }
  std::vector<double> ns, conds;
  for (const auto& row : data.rows) {
    ns.push_back(row[0]);
    conds.push_back(row[6]);
  }
  const FitResult fit = fit_excluding_smallest(ns, conds);
  est.fitted_exponent = fit.slope;
  est.fit_residual = fit.residual;
  est.rows_used =
      static_cast<int>(ns.size() >= 4 ? ns.size() - 1 : ns.size());
  const double den = (alpha - 1.0) * (1.0 - 2.0 * s);
  if (std::abs(den) < 1e-12 || !std::isfinite(fit.slope)) {
    est.implied_mu = nan;
    est.implied_mu_alt = nan;
    est.finite = false;
  } else {
    est.implied_mu = (fit.slope - 2.0 * s) / den;
    est.implied_mu_alt = -est.implied_mu;
    est.finite = std::isfinite(est.implied_mu);
  }
  return est;
}

std::string MuEstimate::json() const {
  nlohmann::json out;
  out["s"] = s;
  out["alpha"] = alpha;
  out["fitted_exponent"] = fitted_exponent;
  out["fit_residual"] = fit_residual;
  out["implied_mu"] = implied_mu;
  out["implied_mu_alt_convention"] = implied_mu_alt;
  out["finite"] = finite;
  out["rows_used"] = rows_used;
  out["truncations"] = truncations;
  return out.dump(2) + "\n";
}

}  // namespace fraclap
