#pragma once

#include <iosfwd>

#include "fraclap/fractional_order.hpp"
#include "fraclap/linalg.hpp"
#include "fraclap/mesh.hpp"

namespace fraclap {

// Distance kernel whose double second difference over the 3x3 node block
// yields the stiffness entries:
//   C_hat(s) |x-y|^(3-2s)            for s != 1/2,
//   (x-y)^2 ln|x-y| / (2 pi)         for s  = 1/2,
// and 0 at x = y in both branches.
double hat_distance(double x, double y, FractionalOrder s);

// Stiffness entry S_jk as the nested double second difference of
// hat_distance, 1 <= j, k <= N-1.  Far-apart index pairs are evaluated with
// cancellation-stable kernel differences; see the implementation notes.
double stiffness_entry(const Mesh& mesh, FractionalOrder s, int j, int k);

// The same entry as the explicit 3x3 quadratic form c_j D_j^k c_k^T.
// Algebraically identical to stiffness_entry; kept as an independent
// arithmetic route for cross-checking.
double stiffness_entry_matrix_form(const Mesh& mesh, FractionalOrder s, int j,
                                   int k);

enum class AssemblyPath { Auto, Generic, Toeplitz };

// Assembled Galerkin matrix tied to its mesh and order.  Symmetric bitwise
// by construction (upper triangle computed once and mirrored).
class StiffnessMatrix {
 public:
  StiffnessMatrix(Mesh mesh, FractionalOrder order, SymmetricMatrix values,
                  bool toeplitz_path);

  const Mesh& mesh() const noexcept { return mesh_; }
  FractionalOrder order() const noexcept { return order_; }
  const SymmetricMatrix& values() const noexcept { return values_; }
  int dimension() const noexcept { return values_.size(); }
  bool used_toeplitz_path() const noexcept { return toeplitz_path_; }

  // 1-based interior-node indexing, matching stiffness_entry.
  double entry(int j, int k) const;

 private:
  Mesh mesh_;
  FractionalOrder order_;
  SymmetricMatrix values_;
  bool toeplitz_path_;
};

// Assembles the full matrix.  Auto selects the Toeplitz fast path when the
// mesh is uniform to 1e-14 relative spacing variation and s is outside the
// 1/2 branch window.
StiffnessMatrix assemble(const Mesh& mesh, FractionalOrder s,
                         AssemblyPath path = AssemblyPath::Auto);

// Uniform-mesh band form: S_jk depends only on |j-k|, so the N-1 distinct
// band values are computed once and broadcast.  Throws "branch_error" for
// the s = 1/2 branch (the generic path handles it).
StiffnessMatrix assemble_uniform_toeplitz(double h, int n, FractionalOrder s);

// Full matrix, row-major CSV, 17 significant digits.
void write_matrix_csv(const SymmetricMatrix& m, std::ostream& out);

}  // namespace fraclap
