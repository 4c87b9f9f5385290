#pragma once

#include <functional>
#include <vector>

#include "fraclap/assembly.hpp"
#include "fraclap/fractional_order.hpp"
#include "fraclap/mesh.hpp"

namespace fraclap {

// Right-hand side b_j = integral of f * phi_j, one value per interior node.
class LoadVector {
 public:
  LoadVector(Mesh mesh, std::vector<double> values);

  const Mesh& mesh() const noexcept { return mesh_; }
  const std::vector<double>& values() const noexcept { return values_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }

 private:
  Mesh mesh_;
  std::vector<double> values_;
};

// Element-wise Gauss-Legendre quadrature of the given order (points per
// element); exact for constant f.
LoadVector assemble_load(const Mesh& mesh,
                         const std::function<double(double)>& f,
                         int quad_order = 4);

// Piecewise-linear Galerkin solution: interior nodal coefficients, zero at
// the endpoints and identically zero outside [a, b].
class FemSolution {
 public:
  FemSolution(Mesh mesh, FractionalOrder order, std::vector<double> coeffs,
              double residual_inf);

  const Mesh& mesh() const noexcept { return mesh_; }
  FractionalOrder order() const noexcept { return order_; }
  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  // max-norm of S u - b recorded at solve time
  double residual_inf() const noexcept { return residual_inf_; }

  double operator()(double x) const;

 private:
  Mesh mesh_;
  FractionalOrder order_;
  std::vector<double> coeffs_;
  double residual_inf_;
};

// Dense symmetric (Cholesky) solve of S u = b.  Throws
// "factorization_failure" on a non-positive pivot.
FemSolution solve(const StiffnessMatrix& S, const LoadVector& b);

// Reference solution of the f = 1 model problem on (-1, 1):
// (1 - x^2)_+^s / Gamma(2s + 1).
double exact_solution(FractionalOrder s, double x);

// max |u_h - u| over all nodes plus samples_per_element equispaced interior
// points per element (0 = nodes only).
double max_error(const FemSolution& solution, FractionalOrder s,
                 int samples_per_element = 8);

}  // namespace fraclap
