#include "cswigner/quad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cswigner/errors.hpp"

namespace cswigner::quad {

namespace {

// 15-point Kronrod extension of 7-point Gauss.  Column 0: abscissa,
// column 1: Gauss weight (0 on Kronrod-only nodes), column 2: Kronrod weight.
constexpr double kNodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.000000000000000, 0.204432940075298},
    {0.586087235467691, 0.000000000000000, 0.169004726639267},
    {0.864864423359769, 0.000000000000000, 0.104790010322250},
    {0.991455371120813, 0.000000000000000, 0.022935322010529},
};

struct PanelEstimate {
    std::complex<double> k15;
    double err;    // max of componentwise |K15 - G7|
    double resabs; // integral of |f| over the panel, for the roundoff floor
};

PanelEstimate gk15(const Integrand& f, double a, double b, long long& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::complex<double> y0 = f(mid);
    std::complex<double> g7 = kNodes[0][1] * y0;
    std::complex<double> k15 = kNodes[0][2] * y0;
    double resabs = kNodes[0][2] * std::abs(y0);
    ++evals;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[i][0];
        const std::complex<double> yp = f(mid + dx);
        const std::complex<double> ym = f(mid - dx);
        evals += 2;
        g7 += kNodes[i][1] * (yp + ym);
        k15 += kNodes[i][2] * (yp + ym);
        resabs += kNodes[i][2] * (std::abs(yp) + std::abs(ym));
    }
    g7 *= half;
    k15 *= half;
    resabs *= half;
    const double err = std::max(std::abs(k15.real() - g7.real()),
                                std::abs(k15.imag() - g7.imag()));
    return {k15, err, resabs};
}

struct Segment {
    double a, b;
    int depth;
    std::complex<double> value;
    double err;
    double resabs;
};

} // namespace

QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadConfig& cfg) {
    if (!(a < b)) throw std::invalid_argument("integrate_interval: requires a < b");
    if (!(cfg.rel_tol > 0) || !(cfg.abs_tol > 0))
        throw std::invalid_argument("integrate_interval: tolerances must be > 0");

    QuadResult res;
    const double total_len = b - a;

    // Oscillation safeguard: at least one initial panel per half period.
    int n0 = 1;
    if (cfg.osc_freq > 0) {
        double want = cfg.osc_freq * total_len / 3.14159265358979323846;
        n0 = static_cast<int>(std::min(4096.0, std::max(1.0, std::ceil(want))));
    }

    std::vector<Segment> stack;
    stack.reserve(64);
    std::complex<double> first_pass(0);
    for (int i = 0; i < n0; ++i) {
        Segment s;
        s.a = a + total_len * i / n0;
        s.b = a + total_len * (i + 1) / n0;
        s.depth = 0;
        auto est = gk15(f, s.a, s.b, res.evaluations);
        s.value = est.k15;
        s.err = est.err;
        s.resabs = est.resabs;
        first_pass += est.k15;
        stack.push_back(s);
    }

    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(first_pass));
    constexpr double kRoundoffFactor = 100.0 * 2.220446049250313e-16;
    constexpr long kMaxSegments = 2'000'000;

    std::complex<double> sum(0);
    double err_sum = 0;
    bool depth_exhausted = false;
    long segments = 0;

    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        const double budget = tol * (s.b - s.a) / total_len;
        // the roundoff floor: |K-G| cannot resolve below the rounding noise
        // of the panel's |f| integral, so refining past it only thrashes
        if (s.err <= budget || s.err <= kRoundoffFactor * s.resabs) {
            sum += s.value;
            err_sum += s.err;
            continue;
        }
        if (s.depth >= cfg.max_depth) {
            depth_exhausted = true;
            sum += s.value;
            err_sum += s.err;
            continue;
        }
        if (++segments > kMaxSegments)
            throw NoConvergenceError("integrate_interval: subdivision budget exhausted");
        const double mid = 0.5 * (s.a + s.b);
        for (auto [lo, hi] : {std::pair{s.a, mid}, std::pair{mid, s.b}}) {
            Segment child;
            child.a = lo;
            child.b = hi;
            child.depth = s.depth + 1;
            auto est = gk15(f, lo, hi, res.evaluations);
            child.value = est.k15;
            child.err = est.err;
            child.resabs = est.resabs;
            stack.push_back(child);
        }
    }

    if (depth_exhausted && err_sum > 10.0 * std::max(cfg.abs_tol, cfg.rel_tol * std::abs(sum)))
        throw NoConvergenceError("integrate_interval: depth exhausted with error above 10x tolerance");

    res.value = sum;
    res.abs_error_estimate = err_sum;
    return res;
}

QuadResult integrate_gaussian_weighted(const Integrand& f, double decay_rate,
                                       const QuadConfig& cfg) {
    if (!(decay_rate > 0))
        throw std::invalid_argument("integrate_gaussian_weighted: decay rate must be > 0");
    const double window = cfg.window_halfwidth_sigmas / std::sqrt(decay_rate);
    auto weighted = [&f, decay_rate](double y) { return f(y) * std::exp(-decay_rate * y * y); };
    return integrate_interval(weighted, -window, window, cfg);
}

} // namespace cswigner::quad
