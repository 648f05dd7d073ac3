#include "morse/pekeris.hpp"

#include <cmath>
#include <stdexcept>

namespace morse::pekeris {

Coefficients coefficients(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::domain_error("pekeris: alpha must be finite and positive");
    const double ia = 1.0 / alpha;
    const double ia2 = ia * ia;
    Coefficients c;
    c.c0 = 1.0 - 3.0 * ia + 3.0 * ia2;
    c.c1 = 4.0 * ia - 6.0 * ia2;
    c.c2 = -ia + 3.0 * ia2;
    c.alpha = alpha;
    return c;
}

double centrifugal_exact(double r) {
    if (!(r > -1.0))
        throw std::domain_error("centrifugal_exact: r must be > -1");
    const double s = 1.0 + r;
    return 1.0 / (s * s);
}

double centrifugal_approx(const Coefficients& c, double r) {
    const double e1 = std::exp(-c.alpha * r);
    return c.c0 + c.c1 * e1 + c.c2 * e1 * e1;
}

DiscrepancyProfile discrepancy_profile(double alpha, double r_min, double r_max,
                                       int samples, Exec exec) {
    if (!(r_min > -1.0) || !(r_min < r_max))
        throw std::domain_error("discrepancy_profile: need -1 < r_min < r_max");
    if (samples < 2)
        throw std::domain_error("discrepancy_profile: samples must be >= 2");
    const Coefficients c = coefficients(alpha);

    DiscrepancyProfile p;
    p.r.resize(samples);
    p.exact.resize(samples);
    p.approx.resize(samples);
    p.rel_err.resize(samples);

    const double step = (r_max - r_min) / (samples - 1);
    auto fill = [&](int i) {
        const double r = r_min + step * i;
        const double ex = centrifugal_exact(r);
        const double ap = centrifugal_approx(c, r);
        p.r[i] = r;
        p.exact[i] = ex;
        p.approx[i] = ap;
        p.rel_err[i] = std::fabs(ap - ex) / std::fabs(ex);
    };

    if (exec == Exec::OpenMP) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < samples; ++i) fill(i);
    } else {
        for (int i = 0; i < samples; ++i) fill(i);
    }
    return p;
}

}  // namespace morse::pekeris
