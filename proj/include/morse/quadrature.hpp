#pragma once

#include <functional>
#include <vector>

#include "morse/exec.hpp"

namespace morse::quad {

struct GaussLegendre {
    std::vector<double> node;    // on (-1, 1), symmetric
    std::vector<double> weight;
};

// Cached Newton-iterated nodes/weights; thread-safe.
const GaussLegendre& gauss_legendre(int order);

// Integrate f over [a, b], 0 < a < b, split into `panels` geometrically
// spaced panels with fixed-order Gauss-Legendre on each. Panel partial sums
// are accumulated in index order for both policies, so Serial and OpenMP
// agree bitwise.
double integrate_log_panels(const std::function<double(double)>& f, double a,
                            double b, int panels, int order,
                            Exec exec = Exec::Serial);

// Panel-doubling driver: starts at 8 panels of order 512 and doubles until
// two successive results differ by less than atol. Throws std::runtime_error
// if 4096 panels are not enough.
double integrate_to_tolerance(const std::function<double(double)>& f, double a,
                              double b, double atol, Exec exec = Exec::Serial);

}  // namespace morse::quad
