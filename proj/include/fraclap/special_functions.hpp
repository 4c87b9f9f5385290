#pragma once

#include "fraclap/fractional_order.hpp"

namespace fraclap {

// Gamma function for real arguments, Lanczos approximation with reflection
// below 0.5.  Relative error is a few 1e-15 on [0.5, 20].  Throws
// "pole_error" at non-positive integers.
double gamma(double x);

// Scaling constant of the distance kernel, 1/(2*Gamma(4-2s)*cos(s*pi)).
// Negative for s in (1/2, 3/2).  Throws "branch_error" inside the s = 1/2
// branch window where the expression degenerates.
double c_hat(FractionalOrder s);

// Complete Beta function Gamma(a)Gamma(b)/Gamma(a+b), a, b > 0.
double beta(double a, double b);

// Non-regularized incomplete Beta function
//   B(y; a, b) = integral_0^y t^(a-1) (1-t)^(b-1) dt,
// for y in [0, 1] and a, b >= 1, via the continued-fraction expansion with
// the symmetry switch at y = a/(a+b).  Strictly increasing in y.
double incomplete_beta(double y, double a, double b);

}  // namespace fraclap
