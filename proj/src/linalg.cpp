#include "fraclap/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace fraclap {

SymmetricMatrix::SymmetricMatrix(int n) : n_(n) {
  if (n < 1) throw Error("domain_error", "matrix dimension must be positive");
  a_.assign(static_cast<size_t>(n) * n, 0.0);
}

double SymmetricMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> SymmetricMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(static_cast<size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    const double* row = a_.data() + static_cast<size_t>(i) * n_;
    for (int j = 0; j < n_; ++j) acc += row[j] * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = acc;
  }
  return y;
}

Cholesky Cholesky::factor(const SymmetricMatrix& m) {
  const int n = m.size();
  std::vector<double> l(static_cast<size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    double diag = m(j, j);
    for (int k = 0; k < j; ++k) {
      const double v = l[static_cast<size_t>(j) * n + k];
      diag -= v * v;
    }
    if (!(diag > 0.0)) {
      throw Error("factorization_failure",
                  "non-positive pivot at column " + std::to_string(j));
    }
    const double ljj = std::sqrt(diag);
    l[static_cast<size_t>(j) * n + j] = ljj;
    for (int i = j + 1; i < n; ++i) {
      double acc = m(i, j);
      const double* ri = l.data() + static_cast<size_t>(i) * n;
      const double* rj = l.data() + static_cast<size_t>(j) * n;
      for (int k = 0; k < j; ++k) acc -= ri[k] * rj[k];
      l[static_cast<size_t>(i) * n + j] = acc / ljj;
    }
  }
  return Cholesky(n, std::move(l));
}

std::vector<double> Cholesky::solve(std::span<const double> rhs) const {
  if (static_cast<int>(rhs.size()) != n_) {
    throw Error("domain_error", "right-hand side dimension mismatch");
  }
  std::vector<double> y(rhs.begin(), rhs.end());
  // forward: L y = rhs
  for (int i = 0; i < n_; ++i) {
    double acc = y[static_cast<size_t>(i)];
    const double* row = l_.data() + static_cast<size_t>(i) * n_;
    for (int k = 0; k < i; ++k) acc -= row[k] * y[static_cast<size_t>(k)];
    y[static_cast<size_t>(i)] = acc / row[i];
  }
  // backward: L^T x = y
  for (int i = n_ - 1; i >= 0; --i) {
    double acc = y[static_cast<size_t>(i)];
    for (int k = i + 1; k < n_; ++k) {
      acc -= l_[static_cast<size_t>(k) * n_ + i] * y[static_cast<size_t>(k)];
    }
    y[static_cast<size_t>(i)] = acc / l_[static_cast<size_t>(i) * n_ + i];
  }
  return y;
}

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form with
// accumulated transformations (EISPACK tred2 lineage).  v is row-major;
// on exit column j of v holds the j-th accumulated transform.
void tred2(int n, std::vector<double>& v, std::vector<double>& d,
           std::vector<double>& e) {
  auto V = [&](int r, int c) -> double& {
    return v[static_cast<size_t>(r) * n + c];
  };

  for (int j = 0; j < n; ++j) d[static_cast<size_t>(j)] = V(n - 1, j);

  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[static_cast<size_t>(k)]);
    if (scale == 0.0) {
      e[static_cast<size_t>(i)] = d[static_cast<size_t>(i - 1)];
      for (int j = 0; j < i; ++j) {
        d[static_cast<size_t>(j)] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[static_cast<size_t>(k)] /= scale;
        h += d[static_cast<size_t>(k)] * d[static_cast<size_t>(k)];
      }
      double f = d[static_cast<size_t>(i - 1)];
      double g = std::sqrt(h);
      if (f > 0.0) g = -g;
      e[static_cast<size_t>(i)] = scale * g;
      h -= f * g;
      d[static_cast<size_t>(i - 1)] = f - g;
      for (int j = 0; j < i; ++j) e[static_cast<size_t>(j)] = 0.0;

      for (int j = 0; j < i; ++j) {
        f = d[static_cast<size_t>(j)];
        V(j, i) = f;
        g = e[static_cast<size_t>(j)] + V(j, j) * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += V(k, j) * d[static_cast<size_t>(k)];
          e[static_cast<size_t>(k)] += V(k, j) * f;
        }
        e[static_cast<size_t>(j)] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[static_cast<size_t>(j)] /= h;
        f += e[static_cast<size_t>(j)] * d[static_cast<size_t>(j)];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[static_cast<size_t>(j)] -= hh * d[static_cast<size_t>(j)];
      for (int j = 0; j < i; ++j) {
        f = d[static_cast<size_t>(j)];
        g = e[static_cast<size_t>(j)];
        for (int k = j; k <= i - 1; ++k) {
          V(k, j) -= (f * e[static_cast<size_t>(k)] + g * d[static_cast<size_t>(k)]);
        }
        d[static_cast<size_t>(j)] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[static_cast<size_t>(i)] = h;
  }

  for (int i = 0; i < n - 1; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[static_cast<size_t>(i + 1)];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[static_cast<size_t>(k)] = V(k, i + 1) / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (int k = 0; k <= i; ++k) V(k, j) -= g * d[static_cast<size_t>(k)];
      }
    }
    for (int k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[static_cast<size_t>(j)] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL iteration on the tridiagonal (d, e), updating the
// accumulated transforms (EISPACK tql2 lineage).
void tql2(int n, std::vector<double>& v, std::vector<double>& d,
          std::vector<double>& e) {
  auto V = [&](int r, int c) -> double& {
    return v[static_cast<size_t>(r) * n + c];
  };

  for (int i = 1; i < n; ++i) e[static_cast<size_t>(i - 1)] = e[static_cast<size_t>(i)];
  e[static_cast<size_t>(n - 1)] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[static_cast<size_t>(l)]) +
                              std::abs(e[static_cast<size_t>(l)]));
    int m = l;
    while (m < n) {
      if (std::abs(e[static_cast<size_t>(m)]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > 60) {
          throw Error("convergence_failure", "QL eigen-iteration stalled");
        }
        double g = d[static_cast<size_t>(l)];
        double p = (d[static_cast<size_t>(l + 1)] - g) / (2.0 * e[static_cast<size_t>(l)]);
        double r = std::hypot(p, 1.0);
        if (p < 0.0) r = -r;
        d[static_cast<size_t>(l)] = e[static_cast<size_t>(l)] / (p + r);
        d[static_cast<size_t>(l + 1)] = e[static_cast<size_t>(l)] * (p + r);
        const double dl1 = d[static_cast<size_t>(l + 1)];
        double h = g - d[static_cast<size_t>(l)];
        for (int i = l + 2; i < n; ++i) d[static_cast<size_t>(i)] -= h;
        f += h;

        p = d[static_cast<size_t>(m)];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[static_cast<size_t>(l + 1)];
        double s = 0.0;
        double s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[static_cast<size_t>(i)];
          h = c * p;
          r = std::hypot(p, e[static_cast<size_t>(i)]);
          e[static_cast<size_t>(i + 1)] = s * r;
          s = e[static_cast<size_t>(i)] / r;
          c = p / r;
          p = c * d[static_cast<size_t>(i)] - s * g;
          d[static_cast<size_t>(i + 1)] = h + s * (c * g + s * d[static_cast<size_t>(i)]);
          for (int k = 0; k < n; ++k) {
            h = V(k, i + 1);
            V(k, i + 1) = s * V(k, i) + c * h;
            V(k, i) = c * V(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[static_cast<size_t>(l)] / dl1;
        e[static_cast<size_t>(l)] = s * p;
        d[static_cast<size_t>(l)] = c * p;
      } while (std::abs(e[static_cast<size_t>(l)]) > eps * tst1);
    }
    d[static_cast<size_t>(l)] += f;
    e[static_cast<size_t>(l)] = 0.0;
  }

  // sort ascending, carrying the vectors along
  for (int i = 0; i < n - 1; ++i) {
    int k = i;
    double p = d[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      if (d[static_cast<size_t>(j)] < p) {
        k = j;
        p = d[static_cast<size_t>(j)];
      }
    }
    if (k != i) {
      std::swap(d[static_cast<size_t>(k)], d[static_cast<size_t>(i)]);
      for (int r = 0; r < n; ++r) std::swap(V(r, i), V(r, k));
    }
  }
}

}  // namespace

SymmetricEigen symmetric_eigen(const SymmetricMatrix& m) {
  const int n = m.size();
  SymmetricEigen out;
  out.n = n;
  out.values.assign(static_cast<size_t>(n), 0.0);
  if (n == 1) {
    out.values[0] = m(0, 0);
    out.vectors = {1.0};
    return out;
  }
  std::vector<double> v(m.data());
  std::vector<double> d(static_cast<size_t>(n), 0.0);
  std::vector<double> e(static_cast<size_t>(n), 0.0);
  tred2(n, v, d, e);
  tql2(n, v, d, e);
  out.values = std::move(d);
  // transpose: row k of the result = eigenvector (column k of v)
  out.vectors.assign(static_cast<size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      out.vectors[static_cast<size_t>(k) * n + i] = v[static_cast<size_t>(i) * n + k];
    }
  }
  return out;
}

double neumaier_sum(std::span<const double> terms) {
  double sum = 0.0;
  double comp = 0.0;
  for (double t : terms) {
    const double s = sum + t;
    if (std::abs(sum) >= std::abs(t)) {
      comp += (sum - s) + t;
    } else {
      comp += (t - s) + sum;
    }
    sum = s;
  }
  return sum + comp;
}

}  // namespace fraclap
