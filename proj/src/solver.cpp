#include "fraclap/solver.hpp"

#include <algorithm>
#include <cmath>

#include "fraclap/quadrature.hpp"
#include "fraclap/special_functions.hpp"

namespace fraclap {

LoadVector::LoadVector(Mesh mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != mesh_.interior_nodes()) {
    throw Error("domain_error", "load vector length must be N - 1");
  }
}

LoadVector assemble_load(const Mesh& mesh,
                         const std::function<double(double)>& f,
                         int quad_order) {
  if (quad_order < 2) {
    throw Error("domain_error", "load quadrature order must be >= 2");
  }
  const GaussRule rule = gauss_legendre(quad_order);
  const int n = mesh.intervals();
  std::vector<double> b(static_cast<size_t>(n - 1), 0.0);
  for (int e = 1; e <= n; ++e) {
    const double xl = mesh.node(e - 1);
    const double xr = mesh.node(e);
    const double mid = 0.5 * (xl + xr);
    const double rad = 0.5 * (xr - xl);
    for (size_t q = 0; q < rule.nodes.size(); ++q) {
      const double x = mid + rad * rule.nodes[q];
      const double fw = f(x) * rule.weights[q] * rad;
      const double t = (x - xl) / (xr - xl);
      if (e - 1 >= 1) b[static_cast<size_t>(e - 2)] += fw * (1.0 - t);
      if (e <= n - 1) b[static_cast<size_t>(e - 1)] += fw * t;
    }
  }
  return LoadVector(mesh, std::move(b));
}

FemSolution::FemSolution(Mesh mesh, FractionalOrder order,
                         std::vector<double> coeffs, double residual_inf)
    : mesh_(std::move(mesh)),
      order_(order),
      coeffs_(std::move(coeffs)),
      residual_inf_(residual_inf) {
  if (static_cast<int>(coeffs_.size()) != mesh_.interior_nodes()) {
    throw Error("domain_error", "coefficient length must be N - 1");
  }
}

double FemSolution::operator()(double x) const {
  const auto& nodes = mesh_.nodes();
  if (x <= nodes.front() || x >= nodes.back()) return 0.0;
  const auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  const size_t e = static_cast<size_t>(it - nodes.begin());  // x in [x_{e-1}, x_e)
  const double t = (x - nodes[e - 1]) / (nodes[e] - nodes[e - 1]);
  const double left = e - 1 >= 1 ? coeffs_[e - 2] : 0.0;
  const double right = e < nodes.size() - 1 ? coeffs_[e - 1] : 0.0;
  return left * (1.0 - t) + right * t;
}

FemSolution solve(const StiffnessMatrix& S, const LoadVector& b) {
  if (S.dimension() != b.size()) {
    throw Error("domain_error", "system dimension mismatch");
  }
  const Cholesky chol = Cholesky::factor(S.values());
  std::vector<double> u = chol.solve(b.values());
  const std::vector<double> su = S.values().multiply(u);
  double res = 0.0;
  for (size_t i = 0; i < su.size(); ++i) {
    res = std::max(res, std::abs(su[i] - b.values()[i]));
  }
  return FemSolution(S.mesh(), S.order(), std::move(u), res);
}

double exact_solution(FractionalOrder s, double x) {
  const double core = std::max(1.0 - x * x, 0.0);
  if (core == 0.0) return 0.0;
  return std::pow(core, s.value()) / gamma(2.0 * s.value() + 1.0);
}

double max_error(const FemSolution& solution, FractionalOrder s,
                 int samples_per_element) {
  if (samples_per_element < 0) {
    throw Error("domain_error", "samples_per_element must be >= 0");
  }
  const Mesh& mesh = solution.mesh();
  double worst = 0.0;
  auto probe = [&](double x) {
    worst = std::max(worst, std::abs(solution(x) - exact_solution(s, x)));
  };
  for (int j = 0; j <= mesh.intervals(); ++j) probe(mesh.node(j));
  for (int e = 1; e <= mesh.intervals(); ++e) {
    const double xl = mesh.node(e - 1);
    const double h = mesh.spacing(e);
    for (int i = 1; i <= samples_per_element; ++i) {
      probe(xl + h * i / (samples_per_element + 1.0));
    }
  }
  return worst;
}

}  // namespace fraclap
