// Command-line front end: mesh generation, matrix assembly, closed-form vs
// quadrature verification, model-problem solves, and the convergence /
// conditioning study drivers.  All tabular output is CSV with 17
// significant digits; summaries are JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fraclap/assembly.hpp"
#include "fraclap/experiments.hpp"
#include "fraclap/mesh.hpp"
#include "fraclap/oracle.hpp"
#include "fraclap/solver.hpp"
#include "fraclap/spectral.hpp"

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) {
    throw fraclap::Error("domain_error", "empty --n-list");
  }
  return out;
}

fraclap::Mesh build_mesh_from_flags(const std::string& kind, double a, double b,
                                    int n, double alpha, double beta) {
  if (kind == "uniform") return fraclap::build_uniform(a, b, n);
  if (kind == "power-left") return fraclap::build_power_left(a, b, n, alpha);
  if (kind == "power-sym") return fraclap::build_power_symmetric(a, b, n, alpha);
  if (kind == "beta") {
    return fraclap::build_beta_mapped(a, b, n, alpha, beta > 0 ? beta : alpha);
  }
  throw fraclap::Error("domain_error", "unknown mesh kind: " + kind);
}

// Jittered uniform partition of (0, 1); node interiors move by at most 35%
// of the uniform spacing, so spacings stay bounded away from zero.
fraclap::Mesh random_mesh(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.35, 0.35);
  std::vector<double> nodes(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    double x = static_cast<double>(j) / n;
    if (j > 0 && j < n) x += jitter(rng) / n;
    nodes[static_cast<size_t>(j)] = x;
  }
  return fraclap::Mesh::from_nodes(std::move(nodes));
}

void emit_report(const fraclap::StudyReport& report, const std::string& csv_path,
                 const std::string& json_path) {
  if (csv_path.empty()) {
    std::cout << report.csv();
  } else {
    std::ofstream out(csv_path);
    if (!out) throw fraclap::Error("io_error", "cannot open " + csv_path);
    out << report.csv();
  }
  if (json_path.empty()) {
    if (csv_path.empty()) std::cout << "\n";
    std::cout << report.json_summary();
  } else {
    std::ofstream out(json_path);
    if (!out) throw fraclap::Error("io_error", "cannot open " + json_path);
    out << report.json_summary();
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact piecewise-linear FEM stiffness matrices for the 1D "
               "integral fractional Laplacian on non-uniform meshes"};
  app.require_subcommand(1);

  // shared mesh flags
  std::string kind = "uniform";
  double a = -1.0, b = 1.0;
  int n = 8;
  double alpha = 1.0, beta = -1.0;
  double s = 0.75;

  auto add_mesh_flags = [&](CLI::App* cmd) {
    cmd->add_option("--kind", kind,
                    "uniform | power-left | power-sym | beta");
    cmd->add_option("--a", a, "left endpoint");
    cmd->add_option("--b", b, "right endpoint");
    cmd->add_option("--n", n, "number of elements");
    cmd->add_option("--alpha", alpha, "grading exponent");
    cmd->add_option("--beta", beta, "right grading exponent (beta kind)");
  };

  auto* mesh_cmd = app.add_subcommand("mesh", "print mesh nodes, one per line");
  add_mesh_flags(mesh_cmd);

  auto* assemble_cmd =
      app.add_subcommand("assemble", "print the stiffness matrix as CSV");
  std::string mesh_file;
  std::string out_file;
  assemble_cmd->add_option("--s", s, "fractional order");
  assemble_cmd->add_option("--mesh-file", mesh_file,
                           "read nodes from file instead of --kind flags");
  assemble_cmd->add_option("--out", out_file, "write CSV here instead of stdout");
  add_mesh_flags(assemble_cmd);

  auto* verify_cmd = app.add_subcommand(
      "verify", "closed form vs Fourier quadrature on a random mesh");
  unsigned seed = 1;
  double verify_tol = 1e-8;
  verify_cmd->add_option("--s", s, "fractional order");
  verify_cmd->add_option("--n", n, "number of elements");
  verify_cmd->add_option("--seed", seed, "mesh jitter seed");
  verify_cmd->add_option("--tol", verify_tol, "quadrature tolerance");

  auto* solve_cmd = app.add_subcommand(
      "solve", "solve the f = 1 model problem on a graded mesh");
  int samples = 8;
  solve_cmd->add_option("--s", s, "fractional order");
  solve_cmd->add_option("--alpha", alpha, "grading exponent (alpha = beta)");
  solve_cmd->add_option("--n", n, "number of elements");
  solve_cmd->add_option("--samples", samples, "interior samples per element");

  std::string n_list_text = "64,128,256,512";
  std::string grading_text = "beta";
  std::string csv_path, json_path;
  auto add_study_flags = [&](CLI::App* cmd) {
    cmd->add_option("--s", s, "fractional order");
    cmd->add_option("--alpha", alpha, "grading exponent (alpha = beta)");
    cmd->add_option("--n-list", n_list_text, "comma-separated ladder of N");
    cmd->add_option("--grading", grading_text, "beta | power-sym");
    cmd->add_option("--csv", csv_path, "write rows CSV here");
    cmd->add_option("--json", json_path, "write JSON summary here");
  };
  auto* conv_cmd =
      app.add_subcommand("convergence", "max-error decay study vs N");
  add_study_flags(conv_cmd);
  auto* cond_cmd =
      app.add_subcommand("conditioning", "cond and lambda_min scaling vs N");
  add_study_flags(cond_cmd);
  auto* mu_cmd = app.add_subcommand(
      "mu-scan", "implied conditioning exponent mu for s < 1/2");
  mu_cmd->add_option("--s", s, "fractional order in (0, 1/2)");
  mu_cmd->add_option("--alpha", alpha, "grading exponent");
  mu_cmd->add_option("--n-list", n_list_text, "comma-separated ladder of N");

  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "extreme eigenvalues and condition number per N");
  spectrum_cmd->add_option("--s", s, "fractional order");
  spectrum_cmd->add_option("--alpha", alpha, "grading exponent (alpha = beta)");
  spectrum_cmd->add_option("--n-list", n_list_text, "comma-separated ladder of N");

  CLI11_PARSE(app, argc, argv);

  auto grading = [&]() {
    if (grading_text == "beta") return fraclap::GradingKind::BetaMapped;
    if (grading_text == "power-sym") return fraclap::GradingKind::PowerSymmetric;
    throw fraclap::Error("domain_error", "unknown grading: " + grading_text);
  };

  if (mesh_cmd->parsed()) {
    const fraclap::Mesh mesh = build_mesh_from_flags(kind, a, b, n, alpha, beta);
    fraclap::write_nodes(mesh, std::cout);
    return 0;
  }

  if (assemble_cmd->parsed()) {
    fraclap::Mesh mesh = [&]() {
      if (!mesh_file.empty()) {
        std::ifstream in(mesh_file);
        if (!in) throw fraclap::Error("io_error", "cannot open " + mesh_file);
        return fraclap::read_nodes(in);
      }
      return build_mesh_from_flags(kind, a, b, n, alpha, beta);
    }();
    const fraclap::StiffnessMatrix S =
        fraclap::assemble(mesh, fraclap::FractionalOrder(s));
    if (out_file.empty()) {
      fraclap::write_matrix_csv(S.values(), std::cout);
    } else {
      std::ofstream out(out_file);
      if (!out) throw fraclap::Error("io_error", "cannot open " + out_file);
      fraclap::write_matrix_csv(S.values(), out);
    }
    return 0;
  }

  if (verify_cmd->parsed()) {
    const fraclap::Mesh mesh = random_mesh(n, seed);
    const fraclap::FractionalOrder order(s);
    fraclap::QuadratureSpec spec;
    spec.tolerance = verify_tol;
    std::cout << "j,k,closed_form,oracle,rel_diff\n";
    for (int j = 1; j <= mesh.interior_nodes(); ++j) {
      for (int k = j; k <= mesh.interior_nodes(); ++k) {
        const double cf = fraclap::stiffness_entry(mesh, order, j, k);
        const double q =
            fraclap::stiffness_entry_quadrature(mesh, order, j, k, spec);
        const double denom = std::max(std::abs(cf), std::abs(q));
        const double rel = denom > 0.0 ? std::abs(cf - q) / denom : 0.0;
        std::cout << j << "," << k << "," << fmt17(cf) << "," << fmt17(q)
                  << "," << fmt17(rel) << "\n";
      }
    }
    return 0;
  }

  if (solve_cmd->parsed()) {
    const fraclap::FractionalOrder order(s);
    const fraclap::Mesh mesh =
        alpha == 1.0 ? fraclap::build_uniform(-1.0, 1.0, n)
                     : fraclap::build_beta_mapped(-1.0, 1.0, n, alpha, alpha);
    const fraclap::StiffnessMatrix S = fraclap::assemble(mesh, order);
    const fraclap::LoadVector load =
        fraclap::assemble_load(mesh, [](double) { return 1.0; });
    const fraclap::FemSolution u = fraclap::solve(S, load);
    std::cout << "x,u_h,u_exact,abs_diff\n";
    auto emit = [&](double x) {
      const double uh = u(x);
      const double ue = fraclap::exact_solution(order, x);
      std::cout << fmt17(x) << "," << fmt17(uh) << "," << fmt17(ue) << ","
                << fmt17(std::abs(uh - ue)) << "\n";
    };
    for (int e = 1; e <= mesh.intervals(); ++e) {
      emit(mesh.node(e - 1));
      for (int i = 1; i <= samples; ++i) {
        emit(mesh.node(e - 1) + mesh.spacing(e) * i / (samples + 1.0));
      }
    }
    emit(mesh.node(mesh.intervals()));
    std::cout << "max_error," << fmt17(fraclap::max_error(u, order, samples))
              << "\n";
    return 0;
  }

  if (conv_cmd->parsed()) {
    const std::vector<int> ladder = parse_n_list(n_list_text);
    const fraclap::StudyReport report =
        fraclap::convergence_study(s, alpha, ladder, nullptr, grading());
    emit_report(report, csv_path, json_path);
    return 0;
  }

  if (cond_cmd->parsed()) {
    const std::vector<int> ladder = parse_n_list(n_list_text);
    const fraclap::StudyReport report =
        fraclap::conditioning_study(s, alpha, ladder, grading());
    emit_report(report, csv_path, json_path);
    return 0;
  }

  if (mu_cmd->parsed()) {
    const std::vector<int> ladder = parse_n_list(n_list_text);
    const fraclap::MuEstimate est = fraclap::mu_scan(s, alpha, ladder);
    std::cout << est.json();
    return 0;
  }

  if (spectrum_cmd->parsed()) {
    const fraclap::FractionalOrder order(s);
    std::cout << "s,alpha,N,h_max,h_min,ratio,lambda_min,lambda_max,cond\n";
    for (int nn : parse_n_list(n_list_text)) {
      const fraclap::Mesh mesh =
          alpha == 1.0 ? fraclap::build_uniform(-1.0, 1.0, nn)
                       : fraclap::build_beta_mapped(-1.0, 1.0, nn, alpha, alpha);
      const fraclap::MeshStats stats = fraclap::mesh_stats(mesh);
      const fraclap::SpectralSummary sum =
          fraclap::condition_number(fraclap::assemble(mesh, order));
      std::cout << fmt17(s) << "," << fmt17(alpha) << "," << nn << ","
                << fmt17(stats.h_max) << "," << fmt17(stats.h_min) << ","
                << fmt17(stats.ratio) << "," << fmt17(sum.lambda_min) << ","
                << fmt17(sum.lambda_max) << "," << fmt17(sum.cond) << "\n";
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fraclap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
}
