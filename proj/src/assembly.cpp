#include "fraclap/assembly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "fraclap/special_functions.hpp"

namespace fraclap {

namespace {

constexpr double kPi = std::numbers::pi;

// Branch-resolved kernel.  diff() evaluates h(d + step) - h(d) from the
// exact step (a mesh spacing or a sum of spacings), which keeps far-field
// entries from dissolving into rounding noise: the naive difference of two
// nearly equal kernel values loses all significance once step << d.
// Evaluated in extended precision; the entries are fourth-order differences
// of this kernel and the stencil cancellation eats ~4 digits even with the
// stable difference form.
struct HatKernel {
  long double coef;  // C_hat(s), or 1/(2 pi) on the log branch
  long double expo;  // 3 - 2s (generic branch)
  bool log_branch;

  static HatKernel make(FractionalOrder s) {
    if (s.is_half()) {
      return HatKernel{0.5L / static_cast<long double>(kPi), 2.0L, true};
    }
    return HatKernel{static_cast<long double>(c_hat(s)),
                     static_cast<long double>(s.distance_exponent()), false};
  }

  long double operator()(long double d) const {
    if (d == 0.0L) return 0.0L;
    if (log_branch) return coef * d * d * std::log(d);
    return coef * std::pow(d, expo);
  }

  long double diff(long double d, long double step) const {
    if (d == 0.0L) return (*this)(step);
    if (log_branch) {
      const long double d1 = d + step;
      return coef *
             (step * (d1 + d) * std::log(d) + d1 * d1 * std::log1p(step / d));
    }
    return coef * std::pow(d, expo) * std::expm1(expo * std::log1p(step / d));
  }
};

void check_indices(const Mesh& mesh, int j, int k) {
  const int dim = mesh.interior_nodes();
  if (j < 1 || j > dim || k < 1 || k > dim) {
    throw Error("index_error", "stiffness index outside [1, N-1]");
  }
}

// Nested double second difference over the 3x3 block; adequate when the two
// index stencils overlap or touch (|j-k| <= 2), where no catastrophic
// cancellation occurs.
double entry_near(const Mesh& mesh, const HatKernel& hk, int j, int k) {
  const long double hj1 = mesh.spacing(j);
  const long double hj2 = mesh.spacing(j + 1);
  std::array<long double, 3> a{};
  for (int q = -1; q <= 1; ++q) {
    const long double y = mesh.node(k + q);
    const long double v0 = hk(std::abs(static_cast<long double>(mesh.node(j - 1)) - y));
    const long double v1 = hk(std::abs(static_cast<long double>(mesh.node(j)) - y));
    const long double v2 = hk(std::abs(static_cast<long double>(mesh.node(j + 1)) - y));
    a[static_cast<size_t>(q + 1)] = (v1 - v0) / hj1 - (v2 - v1) / hj2;
  }
  const long double hk1 = mesh.spacing(k);
  const long double hk2 = mesh.spacing(k + 1);
  return static_cast<double>((a[1] - a[0]) / hk1 - (a[2] - a[1]) / hk2);
}

// Well-separated stencils: double second difference by Taylor expansion of
// the kernel about the distance D between the two center nodes.  The hat
// weights annihilate every order below 4 exactly, so
//   S = sum_{n>=4} h^(n)(D)/n! * sum_{m=2}^{n-2} C(n,m) (-1)^(n-m) U_m V_{n-m}
// with U_m = (-1)^m h_r^(m-1) + h_{r+1}^(m-1) (likewise V from the other
// block).  Converges geometrically once the block half-widths sum to less
// than half of D, and keeps full relative accuracy for entries that sit
// tens of orders below the kernel scale (deeply graded corner pairs).
double entry_far_series(const Mesh& mesh, const HatKernel& hk, int r, int l) {
  constexpr int kMaxOrder = 80;
  const long double hr1 = mesh.spacing(r);
  const long double hr2 = mesh.spacing(r + 1);
  const long double hl1 = mesh.spacing(l);
  const long double hl2 = mesh.spacing(l + 1);
  const long double dist = static_cast<long double>(mesh.node(r)) -
                           static_cast<long double>(mesh.node(l));

  long double u_pow[kMaxOrder + 1];  // U_m, index m
  long double v_pow[kMaxOrder + 1];
  long double pr1 = 1.0L, pr2 = 1.0L, pl1 = 1.0L, pl2 = 1.0L;  // h^(m-1)
  for (int m = 2; m <= kMaxOrder; ++m) {
    pr1 *= hr1;
    pr2 *= hr2;
    pl1 *= hl1;
    pl2 *= hl2;
    const long double sgn = (m % 2 == 0) ? 1.0L : -1.0L;
    u_pow[m] = sgn * pr1 + pr2;
    v_pow[m] = sgn * pl1 + pl2;
  }

  // derivative coefficient h^(n)(D)/n!, advanced recursively in n
  long double deriv_over_fact;
  if (hk.log_branch) {
    // h = coef d^2 ln d: h^(n)/n! = coef * 2 (-1)^(n-3) (n-3)! / n! * D^(2-n)
    deriv_over_fact = -hk.coef * 2.0L / (4.0L * 3.0L * 2.0L) *
                      std::pow(dist, -2.0L);  // n = 4 term
  } else {
    long double binom = hk.expo * (hk.expo - 1.0L) * (hk.expo - 2.0L) *
                        (hk.expo - 3.0L) / 24.0L;
    deriv_over_fact = hk.coef * binom * std::pow(dist, hk.expo - 4.0L);
  }

  long double sum = 0.0L;
  int small_streak = 0;  // odd-order terms vanish on symmetric blocks
  for (int n = 4; n <= kMaxOrder; ++n) {
    // inner sum over the split of n between the two blocks
    long double inner = 0.0L;
    long double choose = static_cast<long double>(n) * (n - 1) / 2.0L;  // C(n,2)
    for (int m = 2; m <= n - 2; ++m) {
      const long double sgn = ((n - m) % 2 == 0) ? 1.0L : -1.0L;
      inner += choose * sgn * u_pow[m] * v_pow[n - m];
      choose *= static_cast<long double>(n - m) / (m + 1);
    }
    const long double term = deriv_over_fact * inner;
    sum += term;
    small_streak = (std::abs(term) <= 1e-21L * std::abs(sum)) ? small_streak + 1 : 0;
    if (small_streak >= 2 && n > 7) break;
    // advance h^(n)/n! -> h^(n+1)/(n+1)!
    if (hk.log_branch) {
      deriv_over_fact *= -static_cast<long double>(n - 2) /
                         ((n + 1) * dist);
    } else {
      deriv_over_fact *= (hk.expo - n) / ((n + 1) * dist);
    }
  }
  return static_cast<double>(sum);
}

// Disjoint stencils (|j-k| >= 3).  The block further right is labelled R,
// the other L; all nine distances are positive.  One direction uses the
// relative-accurate kernel diff(); the plain divided difference runs along
// whichever block has the larger local spacing, since that is where the
// 1/h amplification of rounding noise lands.
double entry_far(const Mesh& mesh, const HatKernel& hk, int j, int k) {
  const int r = mesh.node(j) > mesh.node(k) ? j : k;
  const int l = r == j ? k : j;
  const long double hr1 = mesh.spacing(r);
  const long double hr2 = mesh.spacing(r + 1);
  const long double hl1 = mesh.spacing(l);
  const long double hl2 = mesh.spacing(l + 1);

  const long double gap = static_cast<long double>(mesh.node(r)) -
                          static_cast<long double>(mesh.node(l));
  if (std::max(hr1, hr2) + std::max(hl1, hl2) <= 0.45L * gap) {
    return entry_far_series(mesh, hk, r, l);
  }

  long double d[3][3];  // d[p][q] = x_{r+p-1} - x_{l+q-1} > 0
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) {
      d[p][q] = static_cast<long double>(mesh.node(r + p - 1)) -
                static_cast<long double>(mesh.node(l + q - 1));
    }
  }

  if (std::min(hr1, hr2) >= std::min(hl1, hl2)) {
    // stable second difference along L (step sums are exact spacings),
    // plain along R
    std::array<long double, 3> b{};
    for (int p = 0; p < 3; ++p) {
      b[static_cast<size_t>(p)] = -hk.diff(d[p][1], hl1) / hl1 +
                                  hk.diff(d[p][2], hl2) / hl2;
    }
    return static_cast<double>((b[1] - b[0]) / hr1 - (b[2] - b[1]) / hr2);
  }
  // stable along R, plain along L
  std::array<long double, 3> a{};
  for (int q = 0; q < 3; ++q) {
    a[static_cast<size_t>(q)] = hk.diff(d[0][q], hr1) / hr1 -
                                hk.diff(d[1][q], hr2) / hr2;
  }
  return static_cast<double>((a[1] - a[0]) / hl1 - (a[2] - a[1]) / hl2);
}

// Bracket of the uniform band value: sum_i w_i ||m|+i|^gamma with the
// second-difference weights w = (1,-4,6,-4,1).  For m >= 8 the alternating
// sum is evaluated through the binomial series of m^gamma sum w_i (1+i/m)^gamma,
// whose first three orders vanish identically; this keeps far bands at full
// relative accuracy (and yields exact zeros at gamma = 1).
double toeplitz_bracket(double gamma_, int m) {
  static constexpr double kW[5] = {1.0, -4.0, 6.0, -4.0, 1.0};
  if (m <= 7) {
    std::array<double, 5> terms{};
    for (int i = -2; i <= 2; ++i) {
      const double base = std::abs(static_cast<double>(m + i));
      terms[static_cast<size_t>(i + 2)] =
          base == 0.0 ? 0.0 : kW[i + 2] * std::pow(base, gamma_);
    }
    return neumaier_sum(terms);
  }
  const double dm = static_cast<double>(m);
  double coef = gamma_ * (gamma_ - 1.0) * (gamma_ - 2.0) * (gamma_ - 3.0) / 24.0;
  double mpow = std::pow(dm, gamma_ - 4.0);
  double two_n = 16.0;  // 2^n at n = 4
  double sum = 0.0;
  for (int n = 4; n <= 200; n += 2) {
    const double term = coef * 2.0 * (two_n - 4.0) * mpow;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    coef *= (gamma_ - n) * (gamma_ - n - 1.0) / ((n + 1.0) * (n + 2.0));
    mpow /= dm * dm;
    two_n *= 4.0;
  }
  return sum;
}

SymmetricMatrix assemble_generic_values(const Mesh& mesh, FractionalOrder s) {
  const int dim = mesh.interior_nodes();
  const HatKernel hk = HatKernel::make(s);
  SymmetricMatrix values(dim);
  for (int j = 1; j <= dim; ++j) {
    for (int k = j; k <= dim; ++k) {
      const double v = (k - j <= 2) ? entry_near(mesh, hk, j, k)
                                    : entry_far(mesh, hk, j, k);
      values.set(j - 1, k - 1, v);
    }
  }
  return values;
}

SymmetricMatrix toeplitz_values(double h, int dim, FractionalOrder s) {
  const double gamma_ = s.distance_exponent();
  const double pref = c_hat(s) * std::pow(h, 1.0 - 2.0 * s.value());
  std::vector<double> band(static_cast<size_t>(dim));
  for (int m = 0; m < dim; ++m) {
    band[static_cast<size_t>(m)] = pref * toeplitz_bracket(gamma_, m);
  }
  SymmetricMatrix values(dim);
  for (int j = 0; j < dim; ++j) {
    for (int k = j; k < dim; ++k) {
      values.set(j, k, band[static_cast<size_t>(k - j)]);
    }
  }
  return values;
}

}  // namespace

double hat_distance(double x, double y, FractionalOrder s) {
  return HatKernel::make(s)(std::abs(x - y));
}

double stiffness_entry(const Mesh& mesh, FractionalOrder s, int j, int k) {
  check_indices(mesh, j, k);
  const HatKernel hk = HatKernel::make(s);
  return std::abs(j - k) <= 2 ? entry_near(mesh, hk, j, k)
                              : entry_far(mesh, hk, j, k);
}

double stiffness_entry_matrix_form(const Mesh& mesh, FractionalOrder s, int j,
                                   int k) {
  check_indices(mesh, j, k);
  // Evaluated in extended precision: this route exists to cross-check the
  // finite-difference path, so its own rounding must sit well below the
  // comparison tolerance.
  const bool log_branch = s.is_half();
  const long double coef =
      log_branch ? 0.5L / static_cast<long double>(kPi)
                 : static_cast<long double>(c_hat(s));
  const long double expo = s.distance_exponent();
  const long double cj[3] = {1.0L / mesh.spacing(j),
                             -1.0L / mesh.spacing(j) - 1.0L / mesh.spacing(j + 1),
                             1.0L / mesh.spacing(j + 1)};
  const long double ck[3] = {1.0L / mesh.spacing(k),
                             -1.0L / mesh.spacing(k) - 1.0L / mesh.spacing(k + 1),
                             1.0L / mesh.spacing(k + 1)};
  long double acc = 0.0L;
  for (int p = -1; p <= 1; ++p) {
    for (int q = -1; q <= 1; ++q) {
      const long double d = std::abs(static_cast<long double>(mesh.node(j + p)) -
                                     static_cast<long double>(mesh.node(k + q)));
      if (d == 0.0L) continue;
      const long double hd =
          log_branch ? coef * d * d * std::log(d) : coef * std::pow(d, expo);
      acc += cj[p + 1] * ck[q + 1] * hd;
    }
  }
  return static_cast<double>(acc);
}

StiffnessMatrix::StiffnessMatrix(Mesh mesh, FractionalOrder order,
                                 SymmetricMatrix values, bool toeplitz_path)
    : mesh_(std::move(mesh)),
      order_(order),
      values_(std::move(values)),
      toeplitz_path_(toeplitz_path) {
  if (values_.size() != mesh_.interior_nodes()) {
    throw Error("domain_error", "matrix dimension does not match mesh");
  }
}

double StiffnessMatrix::entry(int j, int k) const {
  if (j < 1 || j > dimension() || k < 1 || k > dimension()) {
    throw Error("index_error", "stiffness index outside [1, N-1]");
  }
  return values_(j - 1, k - 1);
}

StiffnessMatrix assemble(const Mesh& mesh, FractionalOrder s,
                         AssemblyPath path) {
  if (mesh.interior_nodes() < 1) {
    throw Error("domain_error", "mesh has no interior nodes");
  }
  const bool uniform = mesh.nearly_uniform();
  bool use_toeplitz = false;
  switch (path) {
    case AssemblyPath::Auto:
      use_toeplitz = uniform && !s.is_half();
      break;
    case AssemblyPath::Generic:
      use_toeplitz = false;
      break;
    case AssemblyPath::Toeplitz:
      if (!uniform) {
        throw Error("domain_error",
                    "Toeplitz path requires a uniform mesh");
      }
      if (s.is_half()) {
        throw Error("branch_error",
                    "Toeplitz band form is invalid on the s = 1/2 branch");
      }
      use_toeplitz = true;
      break;
  }
  if (use_toeplitz) {
    return StiffnessMatrix(mesh, s,
                           toeplitz_values(mesh.spacing(1),
                                           mesh.interior_nodes(), s),
                           true);
  }
  return StiffnessMatrix(mesh, s, assemble_generic_values(mesh, s), false);
}

StiffnessMatrix assemble_uniform_toeplitz(double h, int n, FractionalOrder s) {
  if (!(h > 0.0)) throw Error("domain_error", "spacing h must be positive");
  if (n < 2) throw Error("domain_error", "requires N >= 2");
  if (s.is_half()) {
    throw Error("branch_error",
                "Toeplitz band form is invalid on the s = 1/2 branch");
  }
  return StiffnessMatrix(build_uniform(0.0, h * n, n), s,
                         toeplitz_values(h, n - 1, s), true);
}

void write_matrix_csv(const SymmetricMatrix& m, std::ostream& out) {
  char buf[40];
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << buf << (j + 1 < m.size() ? "," : "\n");
    }
  }
}

}  // namespace fraclap
