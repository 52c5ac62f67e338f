#include "cswigner/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>

#include "cswigner/csm.hpp"
#include "cswigner/output.hpp"
#include "cswigner/quad.hpp"
#include "cswigner/specfun.hpp"
#include "cswigner/wigner.hpp"

namespace cswigner::verify {

namespace {

constexpr double kPi = std::numbers::pi;

using wigner::PhasePoint;

std::string fmt(const char* f, auto... args) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return v;
}

// Iterated 1D quadrature for the 2D phase-space integrals.
double iterated_integral(const std::function<double(double, double)>& f, double half_x,
                         double half_y) {
    quad::QuadConfig inner{1e-10, 1e-12, 50, 16.0, 0.0};
    quad::QuadConfig outer{1e-9, 1e-11, 50, 16.0, 0.0};
    auto outer_f = [&](double x) {
        auto inner_f = [&](double y) { return std::complex<double>(f(x, y)); };
        return quad::integrate_interval(inner_f, -half_y, half_y, inner).value;
    };
    return quad::integrate_interval(outer_f, -half_x, half_x, outer).value.real();
}

double line_integral(const std::function<double(double)>& f, double half) {
    quad::QuadConfig cfg{1e-11, 1e-13, 50, 16.0, 0.0};
    auto cf = [&](double y) { return std::complex<double>(f(y)); };
    return quad::integrate_interval(cf, -half, half, cfg).value.real();
}

// Explicit coefficient forms of the g=0 relative functions (odd and even
// oscillator towers) for the collapse check.
double g0_odd_form(int n, double w, double q, double p) {
    const double r = w * q * q + p * p / w;
    const double coeff = std::sqrt(kPi) *
                         std::exp(specfun::log_gamma(2.0 * n + 2.0) -
                                  specfun::log_gamma(n + 1.0) -
                                  (2 * n + 1) * std::log(2.0) -
                                  specfun::log_gamma(n + 1.5));
    return -coeff * std::exp(-r / 2.0) * specfun::laguerre(2 * n + 1, 0.0, r);
}

double g0_even_form(int n, double w, double q, double p) {
    const double r = w * q * q + p * p / w;
    const double coeff = std::sqrt(kPi) *
                         std::exp(specfun::log_gamma(2.0 * n + 1.0) -
                                  specfun::log_gamma(n + 1.0) - 2 * n * std::log(2.0) -
                                  specfun::log_gamma(n + 0.5));
    return coeff * std::exp(-r / 2.0) * specfun::laguerre(2 * n, 0.0, r);
}

// ModelParams with the coupling tuned so the sector exponent equals alpha
// (negative root for alpha = 0).
csm::ModelParams params_for_alpha(int alpha, double omega_pair = 0.0) {
    const double beta = alpha - 0.5;
    const double g = beta * beta - 0.25; // m = hbar = 1: 2 mu g / hbar^2 = g
    csm::RawParams raw{1.0, 1.0, omega_pair, g, 1.0};
    return csm::derive_params(raw, alpha == 0 ? csm::SectorRoot::negative
                                              : csm::SectorRoot::positive);
}

// Positions of interior local extrema of a sampled profile, smallest
// distance first.  Tiny tail values are ignored so monotone decay cannot
// register spurious wiggles.
std::vector<double> extremum_positions(const std::vector<double>& x,
                                       const std::vector<double>& v) {
    double scale = 0;
    for (double val : v) scale = std::max(scale, std::abs(val));
    std::vector<double> out;
    for (size_t i = 1; i + 1 < v.size(); ++i) {
        const double dl = v[i] - v[i - 1];
        const double dr = v[i + 1] - v[i];
        if (dl * dr < 0 && std::abs(v[i]) > 1e-9 * scale) out.push_back(x[i]);
    }
    return out;
}

} // namespace

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<CheckResult> origin_values_suite(int ell_max, int j_max) {
    std::vector<CheckResult> out;
    for (int ell = 0; ell <= ell_max; ++ell) {
        const double expected = (ell % 2 == 0) ? 1.0 : -1.0;
        const double got = wigner::cm_wigner(ell, 0.0, 0.0).value;
        CheckResult c{fmt("cm origin l=%d", ell), std::abs(got - expected), 0.0,
                      got == expected, fmt("value %.17g", got)};
        out.push_back(c);
    }
    for (int j = 0; j <= j_max; ++j) {
        const double expected = (j % 2 == 0) ? 1.0 : -1.0;
        const double got = wigner::rel_wigner_g0(j, 1.0, {0.0, 0.0}).value;
        CheckResult c{fmt("g0 origin j=%d", j), std::abs(got - expected), 0.0, got == expected,
                      fmt("value %.17g", got)};
        out.push_back(c);
    }
    return out;
}

std::vector<CheckResult> three_path_suite(int n_max, int alpha_max,
                                          const std::vector<double>& omega_bars,
                                          double tol_abs, double tol_rel) {
    std::vector<double> omegas = omega_bars;
    if (omegas.empty()) omegas = {1.0, std::sqrt(3.0), 3.0};
    const auto qs = linspace(-3.0, 3.0, 9);
    const auto ps = linspace(-3.0, 3.0, 9);

    std::vector<CheckResult> out;
    for (double w : omegas)
        for (int n = 0; n <= n_max; ++n)
            for (int a = 0; a <= alpha_max; ++a) {
                wigner::RelOperatorAnsatz op(n, a, w);
                double worst_ratio = 0;
                for (double q : qs)
                    for (double p : ps) {
                        const double v_op = op.eval(q, p).value;
                        const double v_se = wigner::rel_wigner_series(n, a, w, {q, p}).value;
                        const double v_qd = wigner::rel_wigner_quad(n, a, w, {q, p}).value;
                        const double scale = std::max({std::abs(v_op), std::abs(v_se),
                                                       std::abs(v_qd)});
                        const double allowed = std::max(tol_abs, tol_rel * scale);
                        const double dev = std::max({std::abs(v_op - v_se),
                                                     std::abs(v_op - v_qd),
                                                     std::abs(v_se - v_qd)});
                        worst_ratio = std::max(worst_ratio, dev / allowed);
                    }
                out.push_back({fmt("three-path n=%d alpha=%d w=%.6g", n, a, w), worst_ratio,
                               1.0, worst_ratio <= 1.0,
                               "max deviation / allowed over 9x9 grid"});
            }
    return out;
}

std::vector<CheckResult> g0_collapse_suite(int n_max, double tol,
                                           const std::vector<double>& omega_bars) {
    std::vector<double> omegas = omega_bars;
    if (omegas.empty()) omegas = {1.0, std::sqrt(3.0), 3.0};
    const auto qs = linspace(-3.0, 3.0, 9);
    const auto ps = linspace(-3.0, 3.0, 9);

    std::vector<CheckResult> out;
    for (double w : omegas)
        for (int a : {0, 1})
            for (int n = 0; n <= n_max; ++n) {
                wigner::RelOperatorAnsatz op(n, a, w);
                double worst = 0;
                for (double q : qs)
                    for (double p : ps) {
                        const double v_op = op.eval(q, p).value;
                        const double v_form = a == 0 ? g0_even_form(n, w, q, p)
                                                     : g0_odd_form(n, w, q, p);
                        const double v_g0 =
                            wigner::rel_wigner_g0(2 * n + a, w, {q, p}).value;
                        worst = std::max({worst, std::abs(v_op - v_form),
                                          std::abs(v_op - v_g0), std::abs(v_form - v_g0)});
                    }
                out.push_back({fmt("g0 collapse n=%d alpha=%d w=%.6g", n, a, w), worst, tol,
                               worst <= tol, ""});
            }
    return out;
}

std::vector<CheckResult> identities_suite(int n_max_hl, double tol_hl, int n_max_halfodd,
                                          double tol_halfodd) {
    std::vector<CheckResult> out;
    const auto grid = linspace(-2.0, 2.0, 21);
    for (int n = 0; n <= n_max_hl; ++n) {
        const auto rep = wigner::identity_hermite_laguerre_check(n, grid, grid, tol_hl);
        const double rel = rep.reference_scale > 0
                               ? rep.max_abs_deviation / rep.reference_scale
                               : rep.max_abs_deviation;
        out.push_back({fmt("hermite-laguerre identity n=%d", n), rel, tol_hl, rep.pass,
                       fmt("max |lhs-rhs| %.3e, scale %.3e", rep.max_abs_deviation,
                           rep.reference_scale)});
    }
    for (double w : {1.0, 3.0})
        for (int n = 0; n <= n_max_halfodd; ++n) {
            const auto rep = wigner::identity_operator_halfodd_check(n, w, tol_halfodd);
            const double rel = rep.reference_scale > 0
                                   ? rep.max_abs_deviation / rep.reference_scale
                                   : rep.max_abs_deviation;
            out.push_back({fmt("half-odd operator identity n=%d w=%.6g", n, w), rel,
                           tol_halfodd, rep.pass, "coefficient-level comparison"});
        }
    return out;
}

std::vector<CheckResult> normalization_suite(int n_max, int alpha_max, int ell_max, double tol,
                                             double omega_bar) {
    std::vector<CheckResult> out;
    const double half_q = 16.0 / std::sqrt(omega_bar);
    const double half_p = 16.0 * std::sqrt(omega_bar);
    for (int n = 0; n <= n_max; ++n)
        for (int a = 0; a <= alpha_max; ++a) {
            wigner::RelOperatorAnsatz op(n, a, omega_bar);
            auto f = [&](double q, double p) { return op.eval(q, p).value; };
            const double integral = iterated_integral(f, half_q, half_p);
            const double dev = std::abs(integral - 2.0 * kPi);
            out.push_back({fmt("rel normalization n=%d alpha=%d", n, a), dev, tol, dev <= tol,
                           fmt("integral %.12f, target 2pi", integral)});
        }
    for (int ell = 0; ell <= ell_max; ++ell) {
        auto f = [&](double Q, double P) { return wigner::cm_wigner(ell, Q, P).value; };
        const double integral = iterated_integral(f, 8.0, 8.0);
        const double dev = std::abs(integral - kPi / 2.0);
        out.push_back({fmt("cm normalization l=%d", ell), dev, tol, dev <= tol,
                       fmt("integral %.12f, target pi/2", integral)});
    }
    return out;
}

std::vector<CheckResult> marginals_suite(int n_max, int alpha_max, double tol,
                                         double omega_bar) {
    const double samples[] = {0.25, 0.5, 1.0, 2.0};
    const double half_p = 16.0 * std::sqrt(omega_bar);
    std::vector<CheckResult> out;
    for (int n = 0; n <= n_max; ++n)
        for (int a = 0; a <= alpha_max; ++a) {
            wigner::RelOperatorAnsatz op(n, a, omega_bar);
            double worst = 0;
            for (double q : samples) {
                const double marginal =
                    line_integral([&](double p) { return op.eval(q, p).value; }, half_p);
                const double psi = csm::wavefunction_rel(n, q, a, omega_bar);
                worst = std::max(worst, std::abs(marginal - 2.0 * kPi * psi * psi));
            }
            out.push_back({fmt("rel marginal n=%d alpha=%d", n, a), worst, tol, worst <= tol,
                           "four q samples"});
        }
    for (int ell = 0; ell <= n_max; ++ell) {
        double worst = 0;
        for (double Q : samples) {
            const double marginal = line_integral(
                [&](double P) { return wigner::cm_wigner(ell, Q, P).value; }, 8.0);
            const double phi = csm::wavefunction_cm(ell, Q);
            worst = std::max(worst, std::abs(marginal - kPi / 2.0 * phi * phi));
        }
        out.push_back({fmt("cm marginal l=%d", ell), worst, tol, worst <= tol,
                       "four Q samples"});
    }
    return out;
}

std::vector<CheckResult> eigenfunction_suite(int n_max, int alpha_max, double tol_norm,
                                             double tol_ode) {
    std::vector<CheckResult> out;
    for (int a = 0; a <= alpha_max; ++a) {
        const auto params = params_for_alpha(a);
        for (int n = 0; n <= n_max; ++n) {
            const double norm = line_integral(
                [&](double q) {
                    const double psi = csm::wavefunction_rel(n, q, params);
                    return psi * psi;
                },
                16.0 / std::sqrt(params.omega_bar));
            const double dev = std::abs(norm - 1.0);
            out.push_back({fmt("norm n=%d alpha=%d", n, a), dev, tol_norm, dev <= tol_norm,
                           fmt("norm %.12f", norm)});

            double worst = 0;
            for (double z : {0.5, 1.0, 2.0})
                worst = std::max(worst, std::abs(csm::ode_residual(n, z, params)));
            out.push_back({fmt("ode residual n=%d alpha=%d", n, a), worst, tol_ode,
                           worst <= tol_ode, "z in {0.5, 1, 2}"});
        }
    }
    return out;
}

std::vector<CheckResult> zeros_suite(int j, int k_max, double tol_zero_rel,
                                     double tol_asym_rel) {
    const double w = 1.0;
    auto wf = [&](double q) { return wigner::rel_wigner_g0(j, w, {q, 0.0}).value; };

    // locate the first k_max sign changes along the q axis by scan + bisection
    std::vector<double> crossings_r;
    double prev_q = 1e-4, prev_v = wf(prev_q);
    const double dq = 1e-3;
    for (double q = prev_q + dq; q < 6.0 && static_cast<int>(crossings_r.size()) < k_max;
         q += dq) {
        const double v = wf(q);
        if (prev_v * v < 0) {
            double lo = prev_q, hi = q, flo = prev_v;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = wf(mid);
                if (flo * fm <= 0) hi = mid;
                else { lo = mid; flo = fm; }
            }
            const double qc = 0.5 * (lo + hi);
            crossings_r.push_back(w * qc * qc);
        }
        prev_q = q;
        prev_v = v;
    }

    const auto ellipses = wigner::zero_ellipses(j, w, k_max);
    std::vector<CheckResult> out;
    for (int k = 1; k <= k_max; ++k) {
        const double rk = ellipses[static_cast<size_t>(k - 1)].r;
        if (static_cast<int>(crossings_r.size()) < k) {
            out.push_back({fmt("zero radius j=%d k=%d", j, k), 1.0, tol_zero_rel, false,
                           "sign change not found"});
            continue;
        }
        const double rel = std::abs(crossings_r[static_cast<size_t>(k - 1)] - rk) / rk;
        out.push_back({fmt("zero radius j=%d k=%d", j, k), rel, tol_zero_rel,
                       rel <= tol_zero_rel,
                       fmt("crossing r %.6f vs asymptotic r_k %.6f",
                           crossings_r[static_cast<size_t>(k - 1)], rk)});
    }

    // pointwise asymptotic accuracy at r = 2 (q = sqrt(2), p = 0)
    const PhasePoint pt{std::sqrt(2.0), 0.0};
    const double exact = wigner::rel_wigner_g0(j, w, pt).value;
    const double asym = wigner::rel_wigner_asymptotic(j, w, pt);
    const double rel = std::abs(asym - exact) / std::abs(exact);
    out.push_back({fmt("asymptotic accuracy j=%d r=2", j), rel, tol_asym_rel,
                   rel <= tol_asym_rel, fmt("exact %.8f vs asymptotic %.8f", exact, asym)});
    return out;
}

std::vector<CheckResult> figure_suite() {
    std::vector<CheckResult> out;
    const auto grid = output::preset_grid();
    for (int a : {2, 3}) {
        wigner::GridResult res[2];
        double omegas[2] = {1.0, 3.0};
        for (int i = 0; i < 2; ++i) {
            wigner::WignerSpec spec{wigner::Kind::relative, 0, 0, static_cast<double>(a),
                                    omegas[i], wigner::Method::operator_calculus};
            res[i] = wigner::grid_eval(spec, grid);
        }

        for (int i = 0; i < 2; ++i) {
            double min_v = 0;
            for (const auto& cell : res[i].cells) min_v = std::min(min_v, cell.value);
            out.push_back({fmt("negativity alpha=%d w=%g", a, omegas[i]), min_v, 0.0,
                           min_v < 0, fmt("grid minimum %.6f", min_v)});
        }

        // positive semi-axes through the origin (center row / column)
        const int ic = grid.n_q / 2;
        std::vector<double> coords, row[2], col[2];
        for (int idx = ic; idx < grid.n_q; ++idx)
            coords.push_back(grid.q_min + idx * (grid.q_max - grid.q_min) / (grid.n_q - 1));
        for (int i = 0; i < 2; ++i)
            for (int idx = ic; idx < grid.n_q; ++idx) {
                row[i].push_back(res[i].at(ic, idx).value);  // along q at p = 0
                col[i].push_back(res[i].at(idx, ic).value);  // along p at q = 0
            }

        const auto q1 = extremum_positions(coords, row[0]);
        const auto q3 = extremum_positions(coords, row[1]);
        const auto p1 = extremum_positions(coords, col[0]);
        const auto p3 = extremum_positions(coords, col[1]);

        const size_t nq = std::min(q1.size(), q3.size());
        const size_t np = std::min(p1.size(), p3.size());
        bool q_inward = nq > 0, p_outward = np > 0;
        for (size_t k = 0; k < nq; ++k) q_inward = q_inward && q3[k] < q1[k];
        for (size_t k = 0; k < np; ++k) p_outward = p_outward && p3[k] > p1[k];

        out.push_back({fmt("localization in q alpha=%d", a), 0.0, 0.0, q_inward,
                       fmt("%zu extremum pairs, outermost %.3f -> %.3f", nq,
                           nq ? q1[nq - 1] : 0.0, nq ? q3[nq - 1] : 0.0)});
        out.push_back({fmt("delocalization in p alpha=%d", a), 0.0, 0.0, p_outward,
                       fmt("%zu extremum pairs, innermost %.3f -> %.3f", np,
                           np ? p1[0] : 0.0, np ? p3[0] : 0.0)});
    }
    return out;
}

std::vector<CheckResult> f_integral_suite(int idx_max, double tol) {
    std::vector<CheckResult> out;
    for (double b : {0.5, 1.0, 1.5}) {
        double worst = 0;
        for (int idx = 0; idx <= idx_max; ++idx)
            for (double pt = -3.0; pt <= 3.0 + 1e-12; pt += 0.5) {
                const auto closed = wigner::f_integral_closed(idx, pt, b, 1.0);
                quad::QuadConfig cfg{1e-12, 1e-13, 50, 14.0, 2.0 * std::abs(pt)};
                auto f = [idx, pt](double y) {
                    double yk = 1;
                    for (int i = 0; i < idx; ++i) yk *= y;
                    return yk * std::complex<double>(std::cos(2.0 * pt * y),
                                                     std::sin(2.0 * pt * y));
                };
                const auto direct = quad::integrate_gaussian_weighted(f, b, cfg);
                worst = std::max(worst, std::abs(closed - direct.value));
            }
        out.push_back({fmt("f-integral closed form b=%.2g", b), worst, tol, worst <= tol,
                       fmt("idx <= %d, p in [-3,3]", idx_max)});
    }
    return out;
}

} // namespace cswigner::verify
