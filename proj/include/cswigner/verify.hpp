#pragma once

// Cross-checking suites: oracle path equivalence, identity verification,
// normalization/marginal integrals, eigenfunction validity, zero geometry
// and figure phenomenology.  Shared between the CLI `verify` command and
// the acceptance harness.

#include <string>
#include <vector>

namespace cswigner::verify {

struct CheckResult {
    std::string name;
    double deviation = 0; // the measured figure of merit
    double tolerance = 0; // what it must stay below (or equal, if 0)
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<CheckResult>& checks);

// Exact origin values: cm ell <= ell_max gives (-1)^ell, g=0 index
// j <= j_max gives (-1)^j, both bit-exact.
std::vector<CheckResult> origin_values_suite(int ell_max = 6, int j_max = 6);

// Operator, series and quadrature paths agree pointwise to
// max(tol_abs, tol_rel * scale) on a 9x9 grid over [-3,3]^2.
std::vector<CheckResult> three_path_suite(int n_max = 4, int alpha_max = 4,
                                          const std::vector<double>& omega_bars = {},
                                          double tol_abs = 1e-8, double tol_rel = 1e-8);

// Operator path at alpha in {0,1} collapses to the explicit g=0 closed
// forms and to the combined-index form.
std::vector<CheckResult> g0_collapse_suite(int n_max = 4, double tol = 1e-10,
                                           const std::vector<double>& omega_bars = {});

// Hermite-Laguerre identity (relative tol) and half-odd operator identity
// (coefficient-level relative tol).
std::vector<CheckResult> identities_suite(int n_max_hl = 10, double tol_hl = 1e-9,
                                          int n_max_halfodd = 6, double tol_halfodd = 1e-10);

// Iterated-quadrature phase-space integrals: relative 2*pi, cm pi/2.
std::vector<CheckResult> normalization_suite(int n_max = 3, int alpha_max = 3,
                                             int ell_max = 3, double tol = 1e-6,
                                             double omega_bar = 1.0);

// Momentum marginals against the position densities.
std::vector<CheckResult> marginals_suite(int n_max = 3, int alpha_max = 3, double tol = 1e-6,
                                         double omega_bar = 1.0);

// Full-line norm of the relative eigenfunctions and the transformed-ODE
// residual at sample points.
std::vector<CheckResult> eigenfunction_suite(int n_max = 3, int alpha_max = 3,
                                             double tol_norm = 1e-8, double tol_ode = 1e-5);

// Sign changes of the g=0 form along the q-axis against the asymptotic
// zero radii (relative deviation in r, per k), plus the pointwise
// asymptotic accuracy at r = 2.
std::vector<CheckResult> zeros_suite(int j = 20, int k_max = 4, double tol_zero_rel = 0.02,
                                     double tol_asym_rel = 0.05);

// Figure presets: negativity, and extrema moving inward along q /
// outward along p as omega_bar goes 1 -> 3 (paired by index).
std::vector<CheckResult> figure_suite();

// Closed Hermite form of the Gaussian moment integral against direct
// quadrature.
std::vector<CheckResult> f_integral_suite(int idx_max = 8, double tol = 1e-10);

} // namespace cswigner::verify
