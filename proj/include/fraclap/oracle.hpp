#pragma once

#include "fraclap/assembly.hpp"
#include "fraclap/fractional_order.hpp"
#include "fraclap/linalg.hpp"
#include "fraclap/mesh.hpp"

namespace fraclap {

// Controls for the Fourier-integral quadrature.
struct QuadratureSpec {
  // Upper end of the panel-quadrature range; 0 selects it automatically so
  // the analytic tail meets the tolerance.
  double truncation = 0.0;
  // Absolute error budget for one entry.
  double tolerance = 1e-8;
  // Recursive bisection depth budget per base panel.
  int max_subdivisions = 40;
};

// Integrand of the frequency-space representation of S_jk at xi > 0:
// xi^(2s-4) * sum over the 3x3 node block of cosine terms.
double fourier_integrand(const Mesh& mesh, FractionalOrder s, int j, int k,
                         double xi);

// S_jk = (1/pi) * integral_0^inf xi^(2s-4) f_jk(xi) dxi, evaluated
// numerically and independently of the closed form: a term-wise power
// series below the first oscillation, oscillation-aligned adaptive
// Gauss-Legendre panels up to the truncation point, and an analytic
// per-cosine tail beyond it.  Throws "convergence_failure" when the
// requested tolerance cannot be certified.
double stiffness_entry_quadrature(const Mesh& mesh, FractionalOrder s, int j,
                                  int k, const QuadratureSpec& spec = {});

// Exact tridiagonal FEM mass matrix (h_j/6, (h_j+h_{j+1})/3, h_{j+1}/6):
// the s -> 0 limit of the stiffness matrix.
SymmetricMatrix mass_matrix_reference(const Mesh& mesh);

// Exact tridiagonal integer-order stiffness matrix
// (-1/h_j, 1/h_j+1/h_{j+1}, -1/h_{j+1}): the s = 1 limit.
SymmetricMatrix laplacian_stiffness_reference(const Mesh& mesh);

}  // namespace fraclap
