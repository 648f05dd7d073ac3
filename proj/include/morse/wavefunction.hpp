#pragma once

#include <vector>

#include "morse/exec.hpp"
#include "morse/molecule.hpp"
#include "morse/spectrum.hpp"

namespace morse::wf {

// Generalized Laguerre polynomial L_n^a(y) via the three-term recurrence
//   L_k = ((2k - 1 + a - y) L_{k-1} - (k - 1 + a) L_{k-2}) / k.
// Requires n >= 0, a > -1, y >= 0.
double laguerre(int n, double a, double y);

// ln Gamma(x) for x > 0. Thin validated front over std::lgamma (all uses in
// this project have positive argument, so no reflection is ever needed).
double ln_gamma(double x);

// N_n = sqrt(alpha n! (kappa - 2n - 1) / (r0 Gamma(kappa - n))), evaluated
// entirely in log space. Units: 1/sqrt(r0's unit). Requires
// kappa - 2n - 1 > 0.
double normalization_constant(double kappa, int n, double alpha, double r0);
double ln_normalization_constant(double kappa, int n, double alpha, double r0);

// y = (2 eta / alpha) e^{-alpha r} and its inverse. y_of_r(0) = 2 eta/alpha.
double y_of_r(double eta, double alpha, double r);
double r_of_y(double eta, double alpha, double y);

// A fully specified normalized radial eigenfunction
//
//   R(y) = N_n y^{kappa/2 - (n + 1/2)} e^{-y/2} L_n^{kappa - 2n - 1}(y).
//
// Magnitudes are handled in log space throughout: kappa ~ 35 already makes
// the bare power/Gamma factors overflow-prone, and they cancel only in the
// product.
struct RadialEigenfunction {
    spectrum::BoundState state;
    double kappa = 0.0;
    double norm_constant = 0.0;  // N_n; may underflow for extreme kappa
    double ln_norm = 0.0;        // ln N_n, always finite
    double y_scale = 0.0;        // 2 eta / alpha = y at r = 0
    double alpha = 0.0;
    double r0 = 0.0;
};

RadialEigenfunction eigenfunction(const MoleculeParams& mol, int n, int ell,
                                  int dimension_N);

double value_y(const RadialEigenfunction& eig, double y);  // y >= 0; value_y(0) = 0
double value_r(const RadialEigenfunction& eig, double r);

struct Sample {
    double r;
    double y;
    double R;
};

// Uniform r grid, samples >= 2.
std::vector<Sample> sample(const RadialEigenfunction& eig, double r_min,
                           double r_max, int samples, Exec exec = Exec::OpenMP);

// r0 * integral R^2 / (alpha y) dy over (0, inf). Equals 1 for a normalized
// state, independent of r0 (the r-space norm in units of r0). Panel-doubling
// quadrature converged to 1e-10.
double norm_check(const RadialEigenfunction& eig, Exec exec = Exec::OpenMP);

// r0 * integral R_a R_b / (alpha y) dy; a and b must share molecule, ell, N.
double overlap(const RadialEigenfunction& a, const RadialEigenfunction& b,
               Exec exec = Exec::OpenMP);

// Max residual of the y-form radial equation
//   y^2 R'' + y R' + (-y^2/4 + kappa y/2 - beta^2) R = 0,
// beta = (kappa - 2n - 1)/2, over a uniform grid on [y_lo, y_hi], scaled by
// max|R| * max|coefficient|. Derivatives by 4th-order central differences.
double ode_residual(const RadialEigenfunction& eig, double y_lo, double y_hi,
                    int samples);

}  // namespace morse::wf
