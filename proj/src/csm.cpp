#include "cswigner/csm.hpp"

#include <cmath>
#include <stdexcept>

#include "cswigner/errors.hpp"
#include "cswigner/specfun.hpp"

namespace cswigner::csm {

ModelParams derive_params(const RawParams& raw, SectorRoot root) {
    if (!(raw.m > 0) || !(raw.omega_trap > 0) || !(raw.hbar > 0))
        throw std::domain_error("derive_params: m, omega_trap, hbar must be > 0");
    if (!(raw.omega_pair >= 0))
        throw std::domain_error("derive_params: omega_pair must be >= 0");

    ModelParams p;
    p.raw = raw;
    p.mu = raw.m / 2.0;
    p.total_mass = 2.0 * raw.m;

    const double bound = -raw.hbar * raw.hbar / (8.0 * p.mu);
    if (raw.g < bound)
        throw CouplingOutOfRangeError("derive_params: g below -hbar^2/(8 mu)");

    // 1/4 - beta^2 = -2 mu g / hbar^2
    double beta_sq = 0.25 + 2.0 * p.mu * raw.g / (raw.hbar * raw.hbar);
    if (beta_sq < 0) beta_sq = 0; // roundoff at the coupling bound
    p.beta = std::sqrt(beta_sq);
    if (root == SectorRoot::negative) {
        if (raw.g != 0.0)
            throw SectorInvalidError("derive_params: negative root requires g = 0");
        p.beta = -p.beta;
    }
    p.alpha = p.beta + 0.5;

    p.omega = std::sqrt(raw.omega_trap * raw.omega_trap + 2.0 * raw.omega_pair * raw.omega_pair);
    p.omega_bar = p.omega / raw.omega_trap;
    p.b = p.mu * p.omega / raw.hbar;
    p.length_unit = std::sqrt(raw.hbar / (raw.m * raw.omega_trap));
    return p;
}

double energy_rel(int n, const ModelParams& p) {
    if (n < 0) throw std::domain_error("energy_rel: n must be >= 0");
    return p.raw.hbar * p.omega * (2.0 * n + p.beta + 1.0);
}

double energy_cm(int ell, const ModelParams& p) {
    if (ell < 0) throw std::domain_error("energy_cm: ell must be >= 0");
    return p.raw.hbar * p.raw.omega_trap * (ell + 0.5);
}

namespace {

// qbar^alpha with the full-line extension convention.
double alpha_power(double qbar, double alpha) {
    const bool integer_alpha = std::floor(alpha) == alpha;
    if (integer_alpha) {
        const int ia = static_cast<int>(alpha);
        if (ia == 0) return 1.0;
        double v = 1.0;
        for (int i = 0; i < ia; ++i) v *= qbar;
        return v;
    }
    return std::pow(std::abs(qbar), alpha);
}

} // namespace

double wavefunction_rel(int n, double qbar, double alpha, double omega_bar) {
    if (n < 0) throw std::domain_error("wavefunction_rel: n must be >= 0");
    if (!(alpha >= 0)) throw std::domain_error("wavefunction_rel: alpha must be >= 0");
    if (!(omega_bar > 0)) throw std::domain_error("wavefunction_rel: omega_bar must be > 0");
    const double half_w = omega_bar / 2.0;
    const double norm = std::pow(half_w, 0.25) *
                        std::exp(0.5 * (specfun::log_gamma(n + 1.0) -
                                        specfun::log_gamma(n + alpha + 0.5)));
    return norm * std::pow(half_w, alpha / 2.0) * alpha_power(qbar, alpha) *
           std::exp(-omega_bar * qbar * qbar / 4.0) *
           specfun::laguerre(n, alpha - 0.5, half_w * qbar * qbar);
}

double wavefunction_rel(int n, double qbar, const ModelParams& p) {
    return wavefunction_rel(n, qbar, p.alpha, p.omega_bar);
}

double wavefunction_cm(int ell, double Qbar) {
    if (ell < 0) throw std::domain_error("wavefunction_cm: ell must be >= 0");
    const double norm = std::pow(2.0 / 3.14159265358979323846, 0.25) *
                        std::exp(-0.5 * (ell * std::log(2.0) + specfun::log_gamma(ell + 1.0)));
    return norm * specfun::hermite(ell, std::sqrt(2.0) * Qbar) * std::exp(-Qbar * Qbar);
}

double eigenfunction_z(int n, double alpha, double z) {
    if (n < 0) throw std::domain_error("eigenfunction_z: n must be >= 0");
    const double norm = std::exp(0.5 * (specfun::log_gamma(n + 1.0) -
                                        specfun::log_gamma(n + alpha + 0.5)));
    return norm * alpha_power(z, alpha) * std::exp(-z * z / 2.0) *
           specfun::laguerre(n, alpha - 0.5, z * z);
}

double ode_residual(int n, double z, const ModelParams& p, double energy_n_shift, double h) {
    if (std::abs(z) < 1e-6)
        throw SingularPointError("ode_residual: |z| below singular-point cutoff");
    auto psi = [&](double zz) { return eigenfunction_z(n, p.alpha, zz); };
    // fourth-order central second derivative
    const double d2 = (-psi(z + 2 * h) + 16 * psi(z + h) - 30 * psi(z) + 16 * psi(z - h) -
                       psi(z - 2 * h)) /
                      (12 * h * h);
    const double coeff = 4.0 * (n + energy_n_shift) + 2.0 * p.beta + 2.0 - z * z +
                         (0.25 - p.beta * p.beta) / (z * z);
    return d2 + coeff * psi(z);
}

} // namespace cswigner::csm
