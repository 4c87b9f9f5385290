#pragma once

#include <span>
#include <vector>

#include "fraclap/error.hpp"

namespace fraclap {

// Dense symmetric matrix with full row-major storage.  set() mirrors the
// (j,i) entry so symmetry holds bitwise by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n);

  int size() const noexcept { return n_; }

  double operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }

  void set(int i, int j, double value) {
    a_[static_cast<size_t>(i) * n_ + j] = value;
    a_[static_cast<size_t>(j) * n_ + i] = value;
  }

  double max_abs() const noexcept;
  std::vector<double> multiply(std::span<const double> x) const;

  const std::vector<double>& data() const noexcept { return a_; }

 private:
  int n_;
  std::vector<double> a_;
};

// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
// Throws "factorization_failure" on a non-positive pivot.
class Cholesky {
 public:
  static Cholesky factor(const SymmetricMatrix& m);

  std::vector<double> solve(std::span<const double> rhs) const;
  int size() const noexcept { return n_; }

 private:
  Cholesky(int n, std::vector<double> l) : n_(n), l_(std::move(l)) {}
  int n_;
  std::vector<double> l_;  // row-major, lower triangle populated
};

// Full symmetric eigendecomposition: Householder tridiagonalization followed
// by implicit-shift QL iteration.  values ascending; vectors(k, i) is the
// i-th component of the eigenvector for values[k].
struct SymmetricEigen {
  std::vector<double> values;
  std::vector<double> vectors;  // row-major, row k = eigenvector k
  int n = 0;

  std::vector<double> vector(int k) const {
    return std::vector<double>(vectors.begin() + static_cast<size_t>(k) * n,
                               vectors.begin() + static_cast<size_t>(k + 1) * n);
  }
};

SymmetricEigen symmetric_eigen(const SymmetricMatrix& m);

// Compensated (Neumaier) summation.
double neumaier_sum(std::span<const double> terms);

}  // namespace fraclap
