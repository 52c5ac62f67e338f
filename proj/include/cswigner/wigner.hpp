#pragma once

// Wigner-function evaluators for the center-of-mass and relative motions,
// plus the identities, asymptotics and zero-locus geometry that go with
// them.  The relative function has three independent evaluation routes:
//
//   operator    exact Laguerre-operator calculus applied to the momentum
//               Gaussian (the default: no quadrature error, and the
//               carrier ansatz is reusable across grid points),
//   series      the explicit finite sum over Hermite-form Gaussian
//               moments,
//   quadrature  direct numerical integration of the overlap kernel,
//               which uses none of the derivation steps of the other two
//               and therefore serves as the trusted oracle.
//
// Dimensionless conventions (unit length l, hbar = 1):
//   Wcm(Q,P)  = (-1)^ell exp(-2Q^2 - 2P^2) L_ell(4Q^2 + 4P^2)
//   Wrel(q,p) = integral dy psi(q+y) psi(q-y) exp(i p y)
// Both carry a factor pi*hbar relative to the raw phase-space density, so
//   integral Wrel dq dp = 2 pi,    integral Wcm dQ dP = pi / 2,
//   integral Wrel dp = 2 pi |psi(q)|^2,  integral Wcm dP = (pi/2) |phi(Q)|^2.

#include <complex>
#include <vector>

#include "cswigner/polygauss.hpp"
#include "cswigner/quad.hpp"

namespace cswigner::wigner {

enum class Method { operator_calculus, series, quadrature, closed_g0, asymptotic };
enum class Kind { center_of_mass, relative, total };

const char* method_name(Method m);
const char* kind_name(Kind k);

struct PhasePoint {
    double q = 0;
    double p = 0;
};

struct EvalResult {
    double value = 0;
    Method method = Method::operator_calculus;
    double imag_residue = 0; // diagnostic; 0 on exact paths
    double quad_error = 0;   // quadrature error estimate; 0 on exact paths
};

struct WignerSpec {
    Kind kind = Kind::relative;
    int ell = 0;        // center-of-mass quantum number
    int n = 0;          // relative quantum number
    double alpha = 0;   // sector exponent (integer for operator/series)
    double omega_bar = 1;
    Method method = Method::operator_calculus;
};

// Throws std::domain_error on violated invariants (integer alpha for
// operator/series, alpha in {0,1} for closed_g0, omega_bar >= 1).
void validate(const WignerSpec& spec);

// Center-of-mass Wigner function, exact closed form.
EvalResult cm_wigner(int ell, double Q, double P);

// The operator-path carrier for fixed (n, alpha, omega_bar): the operator
// product L_n L_n ((w/2)(q^2 + d_p^2))^alpha applied to exp(-p^2/(2w)),
// realified, with the exp(-w q^2/2) prefactor folded into the envelope.
// Built once and shared (read-only) across grid points and threads.
class RelOperatorAnsatz {
public:
    RelOperatorAnsatz(int n, int alpha, double omega_bar,
                      double residue_tol = polygauss::kDefaultResidueTol);

    EvalResult eval(double q, double p) const;
    double imag_residue() const { return residue_; }
    const polygauss::GaussianAnsatzT<long double>& ansatz() const { return ansatz_; }

private:
    polygauss::GaussianAnsatzT<long double> ansatz_;
    double residue_ = 0;
};

EvalResult rel_wigner_operator(int n, int alpha, double omega_bar, PhasePoint pt);

// Explicit finite-sum route (binomial expansions + Hermite-form moments),
// accumulated in extended precision.
EvalResult rel_wigner_series(int n, int alpha, double omega_bar, PhasePoint pt,
                             double residue_tol = polygauss::kDefaultResidueTol);

// Oracle route: direct quadrature of the overlap kernel.  Non-integer
// alpha is admitted here (even-extension convention, |q|^alpha).
EvalResult rel_wigner_quad(int n, double alpha, double omega_bar, PhasePoint pt,
                           const quad::QuadConfig& cfg = {});

// g = 0 closed form, combined oscillator index j (j = 2n for alpha = 0,
// j = 2n + 1 for alpha = 1):
//   (-1)^j exp(-w q^2/2 - p^2/(2w)) L_j(w q^2 + p^2/w)
EvalResult rel_wigner_g0(int j, double omega_bar, PhasePoint pt);

// Large-order asymptotic of the g = 0 form, valid away from r = 0:
//   (-1)^j/sqrt(pi) [(j+1/2) r]^{-1/4} cos(2 sqrt((j+1/2) r) - pi/4),
// r = w q^2 + p^2/w.  Throws SingularPointError for r < 1e-8.
double rel_wigner_asymptotic(int j, double omega_bar, PhasePoint pt);

// Product of the center-of-mass and relative functions.
EvalResult total_wigner(int ell, int n, double alpha, double omega_bar,
                        double Q, double P, double q, double p,
                        Method rel_method = Method::operator_calculus);

// Gaussian moment integral  F_idx(pt) = integral y^idx exp(-b y^2 + 2 i pt y / hbar) dy
// in its closed Hermite form.
std::complex<double> f_integral_closed(int idx, double p_tilde, double b, double hbar);

// Zero curves of the asymptotic form: ellipses w q^2 + p^2/w = r_k with
//   r_k = pi^2 (k - 1/4)^2 / (4 (j + 1/2)),   k = 1, 2, ...
// (only k >= 1 yields admissible radii).  The symplectic area is r_k in
// hbar = 1 units; gromov_ok flags area >= 1.
struct ZeroEllipse {
    int k = 0;
    double r = 0;
    double semi_axis_q = 0; // sqrt(r / w)
    double semi_axis_p = 0; // sqrt(r * w)
    double symplectic_area = 0;
    bool gromov_ok = false;
};

std::vector<ZeroEllipse> zero_ellipses(int j, double omega_bar, int k_max);

struct IdentityReport {
    double max_abs_deviation = 0;
    double reference_scale = 0; // max |RHS| over the comparison set
    double tolerance = 0;
    bool pass = false;
};

// H_n(u + (i/2) d_v) H_n(u - (i/2) d_v) e^{-v^2}
//   = (-1)^n 2^n n! L_n[2(u^2 + v^2)] e^{-v^2},
// both sides built through the ansatz calculus and compared on the grid.
IdentityReport identity_hermite_laguerre_check(int n, const std::vector<double>& u_grid,
                                               const std::vector<double>& v_grid, double tol);

// sqrt(w/2)(q -+ i d_p) L_n^{1/2}[(w/2)(q -+ i d_p)^2]
//   = (-1)^n / (2^{2n+1} n!) H_{2n+1}[sqrt(w/2)(q -+ i d_p)],
// checked for both signs at coefficient level after application to the
// momentum Gaussian.
IdentityReport identity_operator_halfodd_check(int n, double omega_bar, double tol);

// Rectangular sampling of a Wigner surface.
struct GridSpec {
    double q_min = -4, q_max = 4;
    double p_min = -4, p_max = 4;
    int n_q = 121, n_p = 121;
};

void validate(const GridSpec& grid);

struct GridResult {
    GridSpec grid;
    std::vector<EvalResult> cells; // row-major over p then q: cells[ip * n_q + iq]
    double max_imag_residue = 0;
    double max_quad_error = 0;

    const EvalResult& at(int ip, int iq) const {
        return cells[static_cast<size_t>(ip) * grid.n_q + iq];
    }
};

// Evaluate the spec on the grid.  The operator-path ansatz is constructed
// once and shared; rows are fanned out across `threads` workers
// (0 = hardware concurrency).  Output order is deterministic.
GridResult grid_eval(const WignerSpec& spec, const GridSpec& grid, int threads = 0);

} // namespace cswigner::wigner
