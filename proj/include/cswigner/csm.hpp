#pragma once

// Two-particle model in a harmonic trap with a pairwise harmonic plus
// inverse-square interaction: parameter derivation, spectra, and the
// relative-motion eigenfunctions in dimensional and dimensionless form.
//
// Everything downstream consumes only the dimensionless set
// (n, ell, alpha, omega_bar); dimensional quantities live here.

namespace cswigner::csm {

struct RawParams {
    double m;          // particle mass
    double omega_trap; // confining frequency (omega_bullet)
    double omega_pair; // pair frequency (omega_0)
    double g;          // inverse-square coupling, energy * length^2
    double hbar;
};

// beta = +/- sqrt(1/4 + 2 mu g / hbar^2).  The negative root is the even
// harmonic-oscillator sector and is only admissible at g = 0.
enum class SectorRoot { positive, negative };

struct ModelParams {
    RawParams raw;
    double mu;          // reduced mass m/2
    double total_mass;  // 2m
    double omega;       // hybrid frequency sqrt(omega_trap^2 + 2 omega_pair^2)
    double omega_bar;   // omega / omega_trap  (>= 1)
    double b;           // mu * omega / hbar
    double beta;
    double alpha;       // beta + 1/2, exponent of the q^alpha prefactor
    double length_unit; // l = sqrt(hbar / (m * omega_trap))
};

ModelParams derive_params(const RawParams& raw, SectorRoot root = SectorRoot::positive);

// E_q = hbar * omega * (2n + beta + 1)
double energy_rel(int n, const ModelParams& p);

// E_Q = hbar * omega_trap * (ell + 1/2)
double energy_cm(int ell, const ModelParams& p);

// Dimensionless normalized relative eigenfunction
//   psi_n(qbar) = (w/2)^{1/4} sqrt(n!/Gamma(n+alpha+1/2)) (w/2)^{alpha/2}
//                 qbar^alpha exp(-w qbar^2/4) L_n^{alpha-1/2}(w qbar^2/2)
// extended to the full line: qbar^alpha is the signed power for integer
// alpha and |qbar|^alpha (even extension) for non-integer alpha.
double wavefunction_rel(int n, double qbar, double alpha, double omega_bar);
double wavefunction_rel(int n, double qbar, const ModelParams& p);

// Dimensionless center-of-mass oscillator eigenfunction
//   phi_ell(Qbar) = (2/pi)^{1/4} (2^ell ell!)^{-1/2} H_ell(sqrt(2) Qbar) e^{-Qbar^2}
double wavefunction_cm(int ell, double Qbar);

// Relative eigenfunction in the scaled radial variable z = sqrt(b) q
// (unit decay rate), the form that satisfies the transformed ODE.
double eigenfunction_z(int n, double alpha, double z);

// Residual of psi'' + (4n + 2 beta + 2 - z^2 + (1/4 - beta^2)/z^2) psi
// with psi'' from fourth-order central differences at step h.
// energy_n_shift perturbs n in the eigenvalue term only (test hook for
// rejecting non-eigenfunctions).  Throws SingularPointError for |z| < 1e-6.
double ode_residual(int n, double z, const ModelParams& p,
                    double energy_n_shift = 0.0, double h = 1e-3);

} // namespace cswigner::csm
