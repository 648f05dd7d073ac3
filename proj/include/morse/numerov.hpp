#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "morse/exec.hpp"
#include "morse/molecule.hpp"

namespace morse::oracle {

enum class Variant { PekerisApprox, ExactCentrifugal };

struct BracketingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One radial eigenproblem u'' = (W(r) - e) u on [r_min, r_max], everything
// dimensionless (units of energy_scale_eV). For ExactCentrifugal problems
// whose r_min sits at the centrifugal pole, pole_exponent = lambda + 1/2
// seeds the forward integration with the (1 + r)^{lambda + 1/2} power law;
// otherwise both ends use exponentially decaying seeds.
struct RadialProblem {
    std::function<double(double)> effective_potential;  // W(r)
    double r_min = 0.0;
    double r_max = 0.0;
    int grid_points = 20000;
    Variant variant = Variant::PekerisApprox;
    double energy_scale_eV = 1.0;
    double pole_exponent = 0.0;
    double pole_origin = -1.0;
};

enum class Direction { Forward, Backward };

struct Integration {
    std::vector<double> u;      // sampled solution, rescaled in place on overflow
    int node_count = 0;         // strict sign changes over the traversed range
    double log_derivative = 0;  // u'/u at the matching index (5-point stencil)
    double value = 0;           // u at the matching index
    double derivative = 0;      // u' at the matching index
};

// Numerov O(h^4) pass from one boundary up to two points past match_index
// (Forward) or down to two points before it (Backward). Running overflow is
// handled by rescaling; only ratios matter.
Integration numerov_integrate(const RadialProblem& p, double e, Direction dir,
                              int match_index);

// Node count of the full forward sweep at energy e: the number of
// eigenvalues below e.
int eigenvalues_below(const RadialProblem& p, double e);

struct NumerovResult {
    double eigenvalue_eV = 0.0;
    int node_count = 0;
    double bracket_lo_eV = 0.0;
    double bracket_hi_eV = 0.0;
    double residual = 0.0;  // normalized matching defect at the solution
    int grid_points = 0;
    double r_min = 0.0;
    double r_max = 0.0;
};

// Shooting search for the n-th eigenvalue: node-counting bisection to an
// (n, n+1)-count bracket, then a bisection/secant hybrid on the matching
// defect at the outer classical turning point. The window is widened by the
// node scan when it does not contain the target. Fixed grid.
NumerovResult find_eigenvalue_fixed_grid(const RadialProblem& p, int n,
                                         double window_lo_eV, double window_hi_eV,
                                         double tol_eV);

// Same, doubling the grid until the eigenvalue moves by less than tol/10.
NumerovResult find_eigenvalue(const RadialProblem& p, int n, double window_lo_eV,
                              double window_hi_eV, double tol_eV);

// Effective potential for a molecule channel:
//   PekerisApprox:    L (c0 + c1 e^{-ar} + c2 e^{-2ar}) + d (e^{-2ar} - 2 e^{-ar})
//   ExactCentrifugal: L / (1+r)^2                       + d (e^{-2ar} - 2 e^{-ar})
// with L = lambda^2 - 1/4. The domain is chosen from the energy estimate:
// r_min by accumulating ~70 WKB decay e-folds into the inner wall (capped at
// -5/alpha for PekerisApprox and at -1 + 1e-6 for ExactCentrifugal), r_max
// far enough that both the potential tail and the bound-state tail are
// negligible.
RadialProblem build_problem(const MoleculeParams& mol, int ell, int dimension_N,
                            Variant variant, double e_estimate);

// Closed-form estimate +-10% window around spectrum::energy, then
// find_eigenvalue. Result in eV.
NumerovResult oracle_energy(const MoleculeParams& mol, int n, int ell,
                            int dimension_N, Variant variant, double tol_eV);

struct SweepEntry {
    int n = 0;
    int ell = 0;
    double closed_eV = 0.0;
    NumerovResult oracle;
    bool ok = false;
    std::string error;

    double rel_gap() const;
};

// Oracle solve for every closed-form bound state with n <= n_max,
// ell <= ell_max, in (ell, n) order. Cells are independent; the OpenMP and
// Serial paths agree bitwise. Per-cell failures are recorded, not thrown.
std::vector<SweepEntry> sweep(const MoleculeParams& mol, int n_max, int ell_max,
                              int dimension_N, Variant variant, double tol_eV,
                              Exec exec = Exec::OpenMP);

}  // namespace morse::oracle
