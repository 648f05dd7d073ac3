#pragma once

#include <string>
#include <vector>

#include "morse/exec.hpp"
#include "morse/molecule.hpp"

namespace morse::spectrum {

// lambda = ell - 1 + N/2 unifies the centrifugal barrier across dimensions:
// the radial equation in N dimensions carries (lambda^2 - 1/4)/r^2, and
// N = 3 reduces to lambda = ell + 1/2, lambda^2 - 1/4 = ell(ell+1).
// Requires ell >= 0 and N >= 2.
double lambda_index(int ell, int dimension_N);

// Derived dimensionless quantities of one rotational channel. With
// d = D/eps and L = lambda^2 - 1/4:
//
//   eta^2  = d + L c2
//   zeta^2 = 2 d - L c1
//   kappa  = zeta^2 / (eta alpha)
//
// eta > 0 is the positive root (the y coordinate 2 eta/alpha e^{-alpha r}
// must be positive). eta^2 <= 0 or zeta^2 <= 0 means the three-term
// approximation admits no bound spectrum for this channel and is an error.
struct SpectralParams {
    double lambda = 0.0;
    double eta_sq = 0.0;
    double zeta_sq = 0.0;
    double kappa = 0.0;
    int dimension_N = 3;
    int ell = 0;

    double barrier() const { return lambda * lambda - 0.25; }  // L
    double eta() const;
};

SpectralParams spectral_params(const MoleculeParams& mol, int ell, int dimension_N);

struct BoundState {
    int n = 0;
    int ell = 0;
    int dimension_N = 3;
    double energy_eV = 0.0;
    SpectralParams params;
};

// Closed-form level
//
//   E = eps [ L c0 - alpha^2 (n + 1/2 - kappa/2)^2 ]
//
// valid only while kappa - 2n - 1 > 0 (normalizability; the quantization
// condition kappa - (2 beta + 1) = 2n requires beta > 0). Larger n is an
// error ("n exceeds bound-state count").
double energy(const MoleculeParams& mol, int n, int ell, int dimension_N);

// Number of n >= 0 with kappa - 2n - 1 > 0; the boundary state is excluded
// (its normalization constant vanishes).
int bound_state_count(const MoleculeParams& mol, int ell, int dimension_N);

struct CellDiagnostic {
    int n = 0;
    int ell = 0;
    std::string reason;
};

// All valid (n, ell) pairs with n <= n_max, ell <= ell_max, in (ell, n)
// lexicographic order. Invalid pairs are omitted; when `diagnostics` is
// given, one entry per omitted pair explains why.
std::vector<BoundState> spectrum_table(const MoleculeParams& mol, int n_max,
                                       int ell_max, int dimension_N,
                                       Exec exec = Exec::OpenMP,
                                       std::vector<CellDiagnostic>* diagnostics = nullptr);

}  // namespace morse::spectrum
