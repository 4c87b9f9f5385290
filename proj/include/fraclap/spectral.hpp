#pragma once

#include <utility>

#include "fraclap/assembly.hpp"

namespace fraclap {

// Extreme-eigenvalue summary of one assembled matrix.  residual_* are the
// scale-free diagnostics ||S v - lambda v||_2 / lambda_max for the returned
// eigenpairs; they grow when conditioning exhausts double precision.
struct SpectralSummary {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double cond = 0.0;  // lambda_max / lambda_min
  int n = 0;          // number of mesh elements
  double mesh_ratio = 0.0;
  double s = 0.0;
  double residual_min = 0.0;
  double residual_max = 0.0;
};

// (lambda_min, lambda_max) by full Householder/QL eigendecomposition;
// lambda_min is refined by inverse iteration through the Cholesky factors
// when the matrix is positive definite.
std::pair<double, double> eigen_extremes(const StiffnessMatrix& S);

// 2-norm condition number for the symmetric positive definite case.
// Throws "pd_violation" when lambda_min <= 0.
SpectralSummary condition_number(const StiffnessMatrix& S);

}  // namespace fraclap
