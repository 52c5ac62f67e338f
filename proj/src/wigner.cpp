#include "cswigner/wigner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "cswigner/csm.hpp"
#include "cswigner/errors.hpp"
#include "cswigner/specfun.hpp"

namespace cswigner::wigner {

namespace pg = cswigner::polygauss;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long double kPiL = std::numbers::pi_v<long double>;

bool is_integer(double x) { return std::floor(x) == x; }

std::complex<long double> i_power(int idx) {
    switch (((idx % 4) + 4) % 4) {
        case 0: return {1.0L, 0.0L};
        case 1: return {0.0L, 1.0L};
        case 2: return {-1.0L, 0.0L};
        default: return {0.0L, -1.0L};
    }
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::operator_calculus: return "operator";
        case Method::series: return "series";
        case Method::quadrature: return "quadrature";
        case Method::closed_g0: return "closed-g0";
        case Method::asymptotic: return "asymptotic";
    }
    return "?";
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::center_of_mass: return "cm";
        case Kind::relative: return "rel";
        case Kind::total: return "total";
    }
    return "?";
}

void validate(const WignerSpec& spec) {
    if (spec.ell < 0 || spec.n < 0)
        throw std::domain_error("WignerSpec: quantum numbers must be >= 0");
    if (!(spec.alpha >= 0) || !std::isfinite(spec.alpha))
        throw std::domain_error("WignerSpec: alpha must be finite and >= 0");
    if (!(spec.omega_bar >= 1))
        throw std::domain_error("WignerSpec: omega_bar must be >= 1 (omega >= omega_trap)");
    if ((spec.method == Method::operator_calculus || spec.method == Method::series) &&
        !is_integer(spec.alpha))
        throw std::domain_error("WignerSpec: operator and series methods require integer alpha");
    if (spec.method == Method::closed_g0 && spec.alpha != 0 && spec.alpha != 1)
        throw std::domain_error("WignerSpec: closed-g0 requires alpha in {0, 1}");
}

void validate(const GridSpec& grid) {
    if (!(grid.q_min < grid.q_max) || !(grid.p_min < grid.p_max))
        throw std::domain_error("GridSpec: min must be below max on both axes");
    if (grid.n_q < 2 || grid.n_p < 2)
        throw std::domain_error("GridSpec: resolution must be >= 2 per axis");
}

EvalResult cm_wigner(int ell, double Q, double P) {
    if (ell < 0) throw std::domain_error("cm_wigner: ell must be >= 0");
    const double s = Q * Q + P * P;
    const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
    const double v = sign * std::exp(-2.0 * s) * specfun::laguerre(ell, 0.0, 4.0 * s);
    return {v, Method::closed_g0, 0.0, 0.0};
}

RelOperatorAnsatz::RelOperatorAnsatz(int n, int alpha, double omega_bar, double residue_tol) {
    if (n < 0) throw std::domain_error("RelOperatorAnsatz: n must be >= 0");
    if (alpha < 0) throw std::domain_error("RelOperatorAnsatz: alpha must be >= 0");
    if (!(omega_bar > 0)) throw std::domain_error("RelOperatorAnsatz: omega_bar must be > 0");

    using LD = long double;
    using CLD = std::complex<LD>;
    const LD s = static_cast<LD>(omega_bar) / 2.0L;

    auto op_minus = pg::laguerre_operator<LD>(n, static_cast<LD>(alpha) - 0.5L, s, -1);
    auto op_plus = pg::laguerre_operator<LD>(n, static_cast<LD>(alpha) - 0.5L, s, +1);

    // ((w/2)(q^2 + d_p^2))^alpha
    pg::BiPolyT<LD> base;
    base.set_coeff(2, 0, CLD(s));
    base.set_coeff(0, 2, CLD(s));
    pg::OperatorPolyT<LD> op_alpha{pg::BiPolyT<LD>::constant(CLD(1))};
    for (int i = 0; i < alpha; ++i) op_alpha.table = op_alpha.table * base;

    auto full = op_minus * op_plus * op_alpha;
    pg::GaussianAnsatzT<LD> carrier{pg::BiPolyT<LD>::constant(CLD(1)), 0.0L,
                                    1.0L / (2.0L * static_cast<LD>(omega_bar))};
    auto applied = pg::apply_operator(full, carrier);

    const LD prefactor = std::sqrt(kPiL) *
                         std::exp(specfun::log_gamma<LD>(static_cast<LD>(n) + 1.0L) -
                                  specfun::log_gamma<LD>(static_cast<LD>(n) + alpha + 0.5L));
    applied.poly = applied.poly.scaled(CLD(prefactor));
    applied.a = s; // fold in the exp(-w q^2/2) prefactor

    auto real = pg::realify(applied, residue_tol);
    ansatz_ = real.ansatz;
    residue_ = real.imag_residue;
}

EvalResult RelOperatorAnsatz::eval(double q, double p) const {
    const auto v = pg::eval_ansatz<long double>(ansatz_, q, p);
    return {static_cast<double>(v.real()), Method::operator_calculus, residue_, 0.0};
}

EvalResult rel_wigner_operator(int n, int alpha, double omega_bar, PhasePoint pt) {
    return RelOperatorAnsatz(n, alpha, omega_bar).eval(pt.q, pt.p);
}

EvalResult rel_wigner_series(int n, int alpha, double omega_bar, PhasePoint pt,
                             double residue_tol) {
    if (n < 0) throw std::domain_error("rel_wigner_series: n must be >= 0");
    if (alpha < 0) throw std::domain_error("rel_wigner_series: alpha must be >= 0");
    if (!(omega_bar > 0)) throw std::domain_error("rel_wigner_series: omega_bar must be > 0");

    using LD = long double;
    using CLD = std::complex<LD>;

    const LD b = static_cast<LD>(omega_bar) / 2.0L;
    const LD q = pt.q;
    const LD p_tilde = static_cast<LD>(pt.p) / 2.0L; // p = 2 p_tilde
    const LD u = p_tilde / std::sqrt(b);

    // Gaussian moments F_idx in the closed Hermite form, hbar = 1.
    const int max_idx = 2 * alpha + 4 * n;
    std::vector<CLD> F(static_cast<size_t>(max_idx) + 1);
    {
        const LD env = std::exp(-p_tilde * p_tilde / b);
        LD h_prev = 0, h_cur = 1; // H_{-1}, H_0
        LD pow_b = 1.0L / std::sqrt(b);
        LD pow_half = 1;
        for (int idx = 0; idx <= max_idx; ++idx) {
            F[static_cast<size_t>(idx)] =
                i_power(idx) * (std::sqrt(kPiL) * pow_b * pow_half * env * h_cur);
            const LD h_next = 2.0L * u * h_cur - 2.0L * idx * h_prev;
            h_prev = h_cur;
            h_cur = h_next;
            pow_b /= std::sqrt(b);
            pow_half /= 2.0L;
        }
    }

    std::vector<LD> q_pow(static_cast<size_t>(2 * alpha + 4 * n) + 1);
    q_pow[0] = 1;
    for (size_t i = 1; i < q_pow.size(); ++i) q_pow[i] = q_pow[i - 1] * q;

    const LD k_order = static_cast<LD>(alpha) - 0.5L + n;
    LD m_fact = 1;
    CLD sum(0);
    for (int m = 0; m <= n; ++m) {
        if (m > 0) m_fact *= m;
        const LD cm = specfun::binomial_general(k_order, n - m) / m_fact;
        LD r_fact = 1;
        for (int r = 0; r <= n; ++r) {
            if (r > 0) r_fact *= r;
            const LD cr = specfun::binomial_general(k_order, n - r) / r_fact;
            const LD sign_mr = ((m + r) % 2 == 0) ? 1.0L : -1.0L;
            const LD c_mr = sign_mr * cm * cr * std::pow(b, static_cast<LD>(m + r));
            for (int bb = 0; bb <= alpha; ++bb) {
                const LD c_b = ((bb % 2 == 0) ? 1.0L : -1.0L) *
                               specfun::binomial_general(static_cast<LD>(alpha), bb) *
                               q_pow[static_cast<size_t>(2 * alpha - 2 * bb)];
                for (int mu = 0; mu <= 2 * m; ++mu) {
                    const LD c_mu = specfun::binomial_general(static_cast<LD>(2 * m), mu) *
                                    q_pow[static_cast<size_t>(2 * m - mu)];
                    for (int rho = 0; rho <= 2 * r; ++rho) {
                        const LD c_rho = ((rho % 2 == 0) ? 1.0L : -1.0L) *
                                         specfun::binomial_general(static_cast<LD>(2 * r), rho) *
                                         q_pow[static_cast<size_t>(2 * r - rho)];
                        sum += c_mr * c_b * c_mu * c_rho *
                               F[static_cast<size_t>(2 * bb + mu + rho)];
                    }
                }
            }
        }
    }

    const LD prefactor = std::sqrt(b) *
                         std::exp(specfun::log_gamma<LD>(static_cast<LD>(n) + 1.0L) -
                                  specfun::log_gamma<LD>(static_cast<LD>(n) + alpha + 0.5L)) *
                         std::pow(b, static_cast<LD>(alpha)) * std::exp(-b * q * q);
    const CLD w = prefactor * sum;
    const double re = static_cast<double>(w.real());
    const double im = std::abs(static_cast<double>(w.imag()));
    if (im > residue_tol * std::max(1.0, std::abs(re)))
        throw NumericResidueError("rel_wigner_series: imaginary residue above tolerance", im);
    return {re, Method::series, im, 0.0};
}

EvalResult rel_wigner_quad(int n, double alpha, double omega_bar, PhasePoint pt,
                           const quad::QuadConfig& cfg) {
    if (n < 0) throw std::domain_error("rel_wigner_quad: n must be >= 0");
    if (!(alpha >= 0)) throw std::domain_error("rel_wigner_quad: alpha must be >= 0");
    if (!(omega_bar > 0)) throw std::domain_error("rel_wigner_quad: omega_bar must be > 0");

    // Overlap kernel of the defining integral, evaluated straight from the
    // eigenfunctions; the wavefunction envelopes supply exp(-w y^2 / 2), of
    // which w/4 is handed to the weighted integrator and the remainder kept
    // in the integrand.
    const double decay = omega_bar / 4.0;
    const double q = pt.q, p = pt.p;
    quad::QuadConfig local = cfg;
    local.osc_freq = std::max(cfg.osc_freq, std::abs(p));
    auto kernel = [n, alpha, omega_bar, q, p, decay](double y) {
        const double overlap = csm::wavefunction_rel(n, q + y, alpha, omega_bar) *
                               csm::wavefunction_rel(n, q - y, alpha, omega_bar);
        return overlap * std::exp(decay * y * y) *
               std::complex<double>(std::cos(p * y), std::sin(p * y));
    };
    const auto r = quad::integrate_gaussian_weighted(kernel, decay, local);
    return {r.value.real(), Method::quadrature, std::abs(r.value.imag()),
            r.abs_error_estimate};
}

EvalResult rel_wigner_g0(int j, double omega_bar, PhasePoint pt) {
    if (j < 0) throw std::domain_error("rel_wigner_g0: j must be >= 0");
    if (!(omega_bar > 0)) throw std::domain_error("rel_wigner_g0: omega_bar must be > 0");
    const double r = omega_bar * pt.q * pt.q + pt.p * pt.p / omega_bar;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double v = sign * std::exp(-r / 2.0) * specfun::laguerre(j, 0.0, r);
    return {v, Method::closed_g0, 0.0, 0.0};
}

double rel_wigner_asymptotic(int j, double omega_bar, PhasePoint pt) {
    if (j < 0) throw std::domain_error("rel_wigner_asymptotic: j must be >= 0");
    if (!(omega_bar > 0)) throw std::domain_error("rel_wigner_asymptotic: omega_bar must be > 0");
    const double r = omega_bar * pt.q * pt.q + pt.p * pt.p / omega_bar;
    if (r < 1e-8)
        throw SingularPointError("rel_wigner_asymptotic: r below singular-point cutoff");
    const double arg = (j + 0.5) * r;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return sign / std::sqrt(kPi) * std::pow(arg, -0.25) *
           std::cos(2.0 * std::sqrt(arg) - kPi / 4.0);
}

namespace {

EvalResult rel_dispatch(int n, double alpha, double omega_bar, PhasePoint pt, Method method,
                        const quad::QuadConfig& cfg) {
    switch (method) {
        case Method::operator_calculus:
            if (!is_integer(alpha))
                throw std::domain_error("operator method requires integer alpha");
            return rel_wigner_operator(n, static_cast<int>(alpha), omega_bar, pt);
        case Method::series:
            if (!is_integer(alpha))
                throw std::domain_error("series method requires integer alpha");
            return rel_wigner_series(n, static_cast<int>(alpha), omega_bar, pt);
        case Method::quadrature:
            return rel_wigner_quad(n, alpha, omega_bar, pt, cfg);
        case Method::closed_g0:
            if (alpha != 0 && alpha != 1)
                throw std::domain_error("closed-g0 requires alpha in {0, 1}");
            return rel_wigner_g0(2 * n + static_cast<int>(alpha), omega_bar, pt);
        case Method::asymptotic: {
            if (alpha != 0 && alpha != 1)
                throw std::domain_error("asymptotic form uses the g=0 index, alpha in {0, 1}");
            const double v =
                rel_wigner_asymptotic(2 * n + static_cast<int>(alpha), omega_bar, pt);
            return {v, Method::asymptotic, 0.0, 0.0};
        }
    }
    throw std::logic_error("rel_dispatch: unknown method");
}

} // namespace

EvalResult total_wigner(int ell, int n, double alpha, double omega_bar, double Q, double P,
                        double q, double p, Method rel_method) {
    const EvalResult cm = cm_wigner(ell, Q, P);
    const EvalResult rel = rel_dispatch(n, alpha, omega_bar, {q, p}, rel_method, {});
    return {cm.value * rel.value, rel.method, rel.imag_residue,
            std::abs(cm.value) * rel.quad_error};
}

std::complex<double> f_integral_closed(int idx, double p_tilde, double b, double hbar) {
    if (idx < 0) throw std::domain_error("f_integral_closed: index must be >= 0");
    if (!(b > 0)) throw std::domain_error("f_integral_closed: b must be > 0");
    const double u = p_tilde / (hbar * std::sqrt(b));
    const double mag = std::pow(b, -(idx + 1) / 2.0) * std::sqrt(kPi) /
                       std::pow(2.0, idx) *
                       std::exp(-p_tilde * p_tilde / (b * hbar * hbar)) *
                       specfun::hermite(idx, u);
    const auto ip = i_power(idx); // 1/(-i)^idx = i^idx
    return {mag * static_cast<double>(ip.real()), mag * static_cast<double>(ip.imag())};
}

std::vector<ZeroEllipse> zero_ellipses(int j, double omega_bar, int k_max) {
    if (j < 0) throw std::domain_error("zero_ellipses: j must be >= 0");
    if (!(omega_bar > 0)) throw std::domain_error("zero_ellipses: omega_bar must be > 0");
    if (k_max < 1) throw std::invalid_argument("zero_ellipses: k_max must be >= 1");
    std::vector<ZeroEllipse> out;
    out.reserve(static_cast<size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        ZeroEllipse e;
        e.k = k;
        e.r = kPi * kPi * (k - 0.25) * (k - 0.25) / (4.0 * (j + 0.5));
        e.semi_axis_q = std::sqrt(e.r / omega_bar);
        e.semi_axis_p = std::sqrt(e.r * omega_bar);
        e.symplectic_area = e.r; // 2H/omega in hbar = 1 units
        e.gromov_ok = e.symplectic_area >= 1.0;
        out.push_back(e);
    }
    return out;
}

namespace {

// sum_m coeffs[m] X^m for a plain bivariate polynomial argument.
pg::BiPoly poly_from_series(const std::vector<std::complex<double>>& coeffs,
                            const pg::BiPoly& X) {
    pg::BiPoly res;
    for (size_t m = coeffs.size(); m-- > 0;) {
        res = res * X;
        res += pg::BiPoly::constant(coeffs[m]);
    }
    return res;
}

} // namespace

IdentityReport identity_hermite_laguerre_check(int n, const std::vector<double>& u_grid,
                                               const std::vector<double>& v_grid, double tol) {
    if (n < 0) throw std::domain_error("identity_hermite_laguerre_check: n must be >= 0");
    using C = std::complex<double>;

    auto h_plus = pg::hermite_operator<double>(n, C(1), C(0, 0.5));
    auto h_minus = pg::hermite_operator<double>(n, C(1), C(0, -0.5));
    pg::GaussianAnsatz carrier{pg::BiPoly::constant(C(1)), 0.0, 1.0};
    auto lhs = pg::apply_operator(h_plus * h_minus, carrier);

    // (-1)^n 2^n n! L_n[2(u^2 + v^2)] e^{-v^2}
    pg::BiPoly arg;
    arg.set_coeff(2, 0, C(2));
    arg.set_coeff(0, 2, C(2));
    std::vector<C> lag(static_cast<size_t>(n) + 1);
    double m_fact = 1;
    for (int m = 0; m <= n; ++m) {
        if (m > 0) m_fact *= m;
        const double c = specfun::binomial_general(static_cast<double>(n), n - m) / m_fact;
        lag[static_cast<size_t>(m)] = C((m % 2 == 0) ? c : -c);
    }
    double scale = (n % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) scale *= 2.0 * (i + 1); // 2^n n!
    pg::GaussianAnsatz rhs{poly_from_series(lag, arg).scaled(C(scale)), 0.0, 1.0};

    IdentityReport rep;
    rep.tolerance = tol;
    for (double u : u_grid)
        for (double v : v_grid) {
            const double l = pg::eval_ansatz(lhs, u, v).real();
            const double r = pg::eval_ansatz(rhs, u, v).real();
            rep.max_abs_deviation = std::max(rep.max_abs_deviation, std::abs(l - r));
            rep.reference_scale = std::max(rep.reference_scale, std::abs(r));
        }
    rep.pass = rep.max_abs_deviation <= tol * rep.reference_scale;
    return rep;
}

IdentityReport identity_operator_halfodd_check(int n, double omega_bar, double tol) {
    if (n < 0) throw std::domain_error("identity_operator_halfodd_check: n must be >= 0");
    if (!(omega_bar > 0))
        throw std::domain_error("identity_operator_halfodd_check: omega_bar must be > 0");
    using C = std::complex<double>;
    const double s = omega_bar / 2.0;
    const double rs = std::sqrt(s);

    double coeff = (n % 2 == 0) ? 1.0 : -1.0; // (-1)^n / (2^{2n+1} n!)
    coeff /= 2.0;
    for (int i = 0; i < n; ++i) coeff /= 4.0 * (i + 1);

    IdentityReport rep;
    rep.tolerance = tol;
    for (int sign : {-1, +1}) {
        auto lin = pg::linear_operator<double>(C(rs), C(0, sign * rs));
        auto lhs_op = lin * pg::laguerre_operator<double>(n, 0.5, s, sign);
        auto rhs_op = pg::hermite_operator<double>(2 * n + 1, C(rs), C(0, sign * rs));
        rhs_op.table = rhs_op.table.scaled(C(coeff));

        pg::GaussianAnsatz carrier{pg::BiPoly::constant(C(1)), 0.0, 1.0 / (2.0 * omega_bar)};
        const auto lhs = pg::apply_operator(lhs_op, carrier);
        const auto rhs = pg::apply_operator(rhs_op, carrier);

        const int di = std::max(lhs.poly.degree_x(), rhs.poly.degree_x());
        const int dj = std::max(lhs.poly.degree_y(), rhs.poly.degree_y());
        for (int i = 0; i <= di; ++i)
            for (int j = 0; j <= dj; ++j) {
                rep.max_abs_deviation = std::max(
                    rep.max_abs_deviation, std::abs(lhs.poly.coeff(i, j) - rhs.poly.coeff(i, j)));
                rep.reference_scale =
                    std::max(rep.reference_scale, std::abs(rhs.poly.coeff(i, j)));
            }
    }
    rep.pass = rep.max_abs_deviation <= tol * rep.reference_scale;
    return rep;
}

GridResult grid_eval(const WignerSpec& spec, const GridSpec& grid, int threads) {
    validate(spec);
    validate(grid);
    if (spec.kind == Kind::total)
        throw std::domain_error(
            "grid_eval: grids are two-dimensional; evaluate cm and relative kinds separately");

    GridResult out;
    out.grid = grid;
    out.cells.resize(static_cast<size_t>(grid.n_q) * grid.n_p);

    // Shared, immutable operator-path carrier.
    std::unique_ptr<RelOperatorAnsatz> cached;
    if (spec.kind == Kind::relative && spec.method == Method::operator_calculus)
        cached = std::make_unique<RelOperatorAnsatz>(spec.n, static_cast<int>(spec.alpha),
                                                     spec.omega_bar);

    auto eval_point = [&](double x, double y) -> EvalResult {
        if (spec.kind == Kind::center_of_mass) return cm_wigner(spec.ell, x, y);
        if (cached) return cached->eval(x, y);
        return rel_dispatch(spec.n, spec.alpha, spec.omega_bar, {x, y}, spec.method, {});
    };

    int workers = threads;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, std::min(64, grid.n_p));

    const double dq = (grid.q_max - grid.q_min) / (grid.n_q - 1);
    const double dp = (grid.p_max - grid.p_min) / (grid.n_p - 1);

    std::atomic<int> next_row{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run_rows = [&]() {
        try {
            for (int ip = next_row.fetch_add(1); ip < grid.n_p; ip = next_row.fetch_add(1)) {
                const double p = grid.p_min + ip * dp;
                for (int iq = 0; iq < grid.n_q; ++iq) {
                    const double q = grid.q_min + iq * dq;
                    out.cells[static_cast<size_t>(ip) * grid.n_q + iq] = eval_point(q, p);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (workers == 1) {
        run_rows();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(run_rows);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& cell : out.cells) {
        out.max_imag_residue = std::max(out.max_imag_residue, cell.imag_residue);
        out.max_quad_error = std::max(out.max_quad_error, cell.quad_error);
    }
    return out;
}

} // namespace cswigner::wigner
