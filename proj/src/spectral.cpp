#include "fraclap/spectral.hpp"

#include <cmath>

#include "fraclap/mesh.hpp"

namespace fraclap {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

struct Extremes {
  double lambda_min, lambda_max;
  std::vector<double> v_min, v_max;
};

Extremes extreme_eigenpairs(const SymmetricMatrix& m) {
  const SymmetricEigen eig = symmetric_eigen(m);
  Extremes ext{eig.values.front(), eig.values.back(), eig.vector(0),
               eig.vector(eig.n - 1)};

  // QL places lambda_min only to an absolute eps*||S|| accuracy; when the
  // matrix is PD, a few inverse-iteration steps through the Cholesky
  // factors recover the small end far more sharply.
  if (ext.lambda_min > 0.0) {
    try {
      const Cholesky chol = Cholesky::factor(m);
      std::vector<double> v = ext.v_min;
      double lambda = ext.lambda_min;
      for (int iter = 0; iter < 3; ++iter) {
        std::vector<double> w = chol.solve(v);
        const double wn = norm2(w);
        if (!(wn > 0.0) || !std::isfinite(wn)) break;
        // S w = v, so the Rayleigh quotient of w is (w.v)/(w.w)
        const double rq = dot(w, v) / dot(w, w);
        for (double& c : w) c /= wn;
        v = std::move(w);
        if (std::isfinite(rq) && rq > 0.0) lambda = rq;
      }
      ext.lambda_min = lambda;
      ext.v_min = std::move(v);
    } catch (const Error&) {
      // not PD to working precision; keep the QL estimate
    }
  }
  return ext;
}

double residual(const SymmetricMatrix& m, const std::vector<double>& v,
                double lambda) {
  std::vector<double> r = m.multiply(v);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= lambda * v[i];
  const double vn = norm2(v);
  return vn > 0.0 ? norm2(r) / vn : 0.0;
}

}  // namespace

std::pair<double, double> eigen_extremes(const StiffnessMatrix& S) {
  const Extremes ext = extreme_eigenpairs(S.values());
  return {ext.lambda_min, ext.lambda_max};
}

SpectralSummary condition_number(const StiffnessMatrix& S) {
  const Extremes ext = extreme_eigenpairs(S.values());
  if (!(ext.lambda_min > 0.0)) {
    throw Error("pd_violation",
                "smallest eigenvalue is not positive; matrix is not PD at "
                "working precision");
  }
  SpectralSummary out;
  out.lambda_min = ext.lambda_min;
  out.lambda_max = ext.lambda_max;
  out.cond = ext.lambda_max / ext.lambda_min;
  out.n = S.mesh().intervals();
  out.mesh_ratio = mesh_stats(S.mesh()).ratio;
  out.s = S.order().value();
  const double scale = ext.lambda_max > 0.0 ? ext.lambda_max : 1.0;
  out.residual_min = residual(S.values(), ext.v_min, ext.lambda_min) / scale;
  out.residual_max = residual(S.values(), ext.v_max, ext.lambda_max) / scale;
  return out;
}

}  // namespace fraclap
