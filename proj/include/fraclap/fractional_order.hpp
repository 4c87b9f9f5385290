#pragma once

#include <cmath>

#include "fraclap/error.hpp"

namespace fraclap {

// Orders closer to 1/2 than this use the logarithmic closed form; the
// generic formula loses ~6 digits to the cos(s*pi) -> 0 cancellation there.
inline constexpr double kHalfBranchTol = 1e-6;

// Fractional order s of the operator, restricted to (0, 3/2) where the
// closed-form stiffness entries are valid.  s in (0, 1] is the regime the
// numerical studies exercise.
class FractionalOrder {
 public:
  explicit FractionalOrder(double s) : s_(s) {
    if (!(s > 0.0) || !(s < 1.5)) {
      throw Error("domain_error", "fractional order s must lie in (0, 3/2)");
    }
  }

  double value() const noexcept { return s_; }

  // True when the s = 1/2 logarithmic branch applies.
  bool is_half() const noexcept { return std::abs(s_ - 0.5) <= kHalfBranchTol; }

  // Exponent gamma = 3 - 2s of the distance kernel |x - y|^gamma.
  double distance_exponent() const noexcept { return 3.0 - 2.0 * s_; }

 private:
  double s_;
};

}  // namespace fraclap
