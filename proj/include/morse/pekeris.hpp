#pragma once

#include <vector>

#include "morse/exec.hpp"

namespace morse::pekeris {

// Coefficients of the three-term exponential fit replacing the centrifugal
// factor 1/(1+r)^2 near r = 0:
//
//   1/(1+r)^2  ~  c0 + c1 e^{-alpha r} + c2 e^{-2 alpha r}
//
// The fit matches the Taylor series of 1/(1+r)^2 through order r^2, which
// fixes c0 + c1 + c2 = 1, f'(0) = -2 and f''(0) = 6 for every alpha.
struct Coefficients {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double alpha = 0.0;  // the alpha the coefficients were built for
};

// c0 = 1 - 3/a + 3/a^2, c1 = 4/a - 6/a^2, c2 = -1/a + 3/a^2.
// Throws std::domain_error for non-finite or non-positive alpha.
Coefficients coefficients(double alpha);

// 1/(1+r)^2. Throws std::domain_error for r <= -1 (pole / unphysical side).
double centrifugal_exact(double r);

// c0 + c1 e^{-alpha r} + c2 e^{-2 alpha r}.
double centrifugal_approx(const Coefficients& c, double r);

struct DiscrepancyProfile {
    std::vector<double> r;        // relative displacement grid
    std::vector<double> exact;    // 1/(1+r)^2
    std::vector<double> approx;   // three-term exponential value
    std::vector<double> rel_err;  // |approx - exact| / |exact|
};

// Uniform grid of `samples` points on [r_min, r_max], -1 < r_min < r_max,
// samples >= 2.
DiscrepancyProfile discrepancy_profile(double alpha, double r_min, double r_max,
                                       int samples, Exec exec = Exec::OpenMP);

}  // namespace morse::pekeris
