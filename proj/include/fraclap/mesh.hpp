#pragma once

#include <iosfwd>
#include <vector>

#include "fraclap/error.hpp"

namespace fraclap {

// Partition a = x_0 < x_1 < ... < x_N = b.  Immutable after construction;
// spacings are recomputed from the nodes on demand so the two can never
// drift apart.
class Mesh {
 public:
  // Validates ordering and size (N >= 2).
  static Mesh from_nodes(std::vector<double> nodes);

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  double a() const noexcept { return nodes_.front(); }
  double b() const noexcept { return nodes_.back(); }

  // Number of elements N.
  int intervals() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
  // Number of interior nodes N - 1 (the Galerkin dimension).
  int interior_nodes() const noexcept { return intervals() - 1; }

  // x_j for 0 <= j <= N.
  double node(int j) const { return nodes_.at(static_cast<size_t>(j)); }
  // h_j = x_j - x_{j-1} for 1 <= j <= N.
  double spacing(int j) const {
    return nodes_.at(static_cast<size_t>(j)) -
           nodes_.at(static_cast<size_t>(j) - 1);
  }

  // True when max_j |h_j - h_1| <= rel_tol * h_1.
  bool nearly_uniform(double rel_tol = 1e-14) const;

 private:
  explicit Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {}
  std::vector<double> nodes_;
};

struct MeshStats {
  double h_max;
  double h_min;
  double ratio;  // h_max / h_min
};

// x_j = a + j (b-a)/N.
Mesh build_uniform(double a, double b, int n);

// x_j = a + (b-a) (j/N)^alpha, alpha >= 1: clustering near the left end.
Mesh build_power_left(double a, double b, int n, double alpha);

// Two power-graded halves meeting at the midpoint; N even, N >= 4.
Mesh build_power_symmetric(double a, double b, int n, double alpha);

// x_j = a + (b-a) B(j/N; alpha, beta) / B(alpha, beta): incomplete-Beta
// mapped grading with exponents alpha (left) and beta (right).
Mesh build_beta_mapped(double a, double b, int n, double alpha, double beta);

MeshStats mesh_stats(const Mesh& mesh);

// One node per line, plain decimal text (round-trip exact).
void write_nodes(const Mesh& mesh, std::ostream& out);
Mesh read_nodes(std::istream& in);

}  // namespace fraclap
