#pragma once

// Adaptive Gauss-Kronrod (G7/K15) quadrature for the oracle evaluators and
// all normalization / marginal checks.  Complex integrands are handled
// componentwise with a shared refinement decision.

#include <complex>
#include <functional>

namespace cswigner::quad {

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_depth = 50;
    double window_halfwidth_sigmas = 12.0;
    // Largest angular frequency expected in the integrand (|p| of an
    // exp(i p y) kernel).  Drives the minimum initial subdivision so the
    // rule cannot falsely converge on an under-sampled oscillation.
    double osc_freq = 0.0;
};

struct QuadResult {
    std::complex<double> value;
    double abs_error_estimate = 0;
    long long evaluations = 0;
};

using Integrand = std::function<std::complex<double>(double)>;

// Adaptive bisection with the embedded G7/K15 pair on [a, b].
// Throws NoConvergenceError if subdivision depth is exhausted while the
// accumulated error estimate exceeds 10x the requested tolerance.
QuadResult integrate_interval(const Integrand& f, double a, double b,
                              const QuadConfig& cfg = {});

// integral of f(y) * exp(-decay_rate * y^2) over the real line, truncated
// at window_halfwidth_sigmas / sqrt(decay_rate).  Every in-scope integrand
// carries an explicit Gaussian factor, which makes the truncation error
// analytically negligible.
QuadResult integrate_gaussian_weighted(const Integrand& f, double decay_rate,
                                       const QuadConfig& cfg = {});

} // namespace cswigner::quad
