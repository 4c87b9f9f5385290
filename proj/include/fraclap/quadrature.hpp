#pragma once

#include <vector>

namespace fraclap {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Computed by Newton iteration on the Legendre recurrence; deterministic to
// machine precision.  points in [1, 64].
GaussRule gauss_legendre(int points);

}  // namespace fraclap
