#pragma once

// Orthogonal polynomials and log-gamma, the scalar kernels everything
// else is built from.  Everything here is a pure function; templated on
// the real type so the series evaluator can run in extended precision.

#include <cmath>
#include <stdexcept>

namespace cswigner::specfun {

// Generalized Laguerre polynomial L_n^k(x) by upward recurrence in n:
//   L_{m+1}^k = ((2m + 1 + k - x) L_m^k - (m + k) L_{m-1}^k) / (m + 1).
// The alternating power series loses precision for large x and is kept
// only as a test oracle.
template <class Real>
Real laguerre(int n, Real k, Real x) {
    if (n < 0) throw std::domain_error("laguerre: degree must be >= 0");
    if (!(k > Real(-1))) throw std::domain_error("laguerre: order must be > -1");
    if (n == 0) return Real(1);
    Real lm1 = Real(1);
    Real lm = Real(1) + k - x;
    for (int m = 1; m < n; ++m) {
        Real next = ((Real(2 * m + 1) + k - x) * lm - (Real(m) + k) * lm1) / Real(m + 1);
        lm1 = lm;
        lm = next;
    }
    return lm;
}

// Hermite polynomial H_n(u): H_{m+1} = 2u H_m - 2m H_{m-1}.
template <class Real>
Real hermite(int n, Real u) {
    if (n < 0) throw std::domain_error("hermite: degree must be >= 0");
    if (n == 0) return Real(1);
    Real hm1 = Real(1);
    Real hm = Real(2) * u;
    for (int m = 1; m < n; ++m) {
        Real next = Real(2) * u * hm - Real(2 * m) * hm1;
        hm1 = hm;
        hm = next;
    }
    return hm;
}

// ln Gamma(x) for x > 0, 14-term Lanczos approximation (relative error
// below 1e-14 on the range used here).  Ratios such as n!/Gamma(n+a+1/2)
// are formed in log space and exponentiated once.
template <class Real>
Real log_gamma(Real x) {
    if (!(x > Real(0))) throw std::domain_error("log_gamma: argument must be > 0");
    static const double cof[14] = {
        57.1562356658629235,     -59.5979603554754912,
        14.1360979747417471,     -0.491913816097620199,
        0.339946499848118887e-4,  0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3,
        -0.210264441724104883e-3, 0.217439618115212643e-3,
        -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5};
    Real y = x;
    Real tmp = x + Real(5.24218750000000000);
    tmp = (x + Real(0.5)) * std::log(tmp) - tmp;
    Real ser = Real(0.999999999999997092);
    for (int j = 0; j < 14; ++j) ser += Real(cof[j]) / ++y;
    return tmp + std::log(Real(2.5066282746310005) * ser / x);
}

// Generalized binomial coefficient a(a-1)...(a-j+1)/j! for real a.
// For integer a with 0 <= a < j one factor vanishes exactly, giving 0.
template <class Real>
Real binomial_general(Real a, int j) {
    if (j < 0) throw std::domain_error("binomial_general: lower index must be >= 0");
    Real num = Real(1);
    Real den = Real(1);
    for (int i = 0; i < j; ++i) {
        num *= a - Real(i);
        den *= Real(i + 1);
    }
    return num / den;
}

// exp(log_gamma(a) - log_gamma(b)); the one-exponentiation ratio helper.
template <class Real>
Real gamma_ratio(Real a, Real b) {
    return std::exp(log_gamma(a) - log_gamma(b));
}

} // namespace cswigner::specfun
