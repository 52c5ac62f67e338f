#include <doctest.h>

#include <cmath>
#include <complex>

#include "cswigner/errors.hpp"
#include "cswigner/quad.hpp"
#include "cswigner/wigner.hpp"

using namespace cswigner;
using C = std::complex<double>;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
} // namespace

TEST_CASE("interval basics") {
    auto one = [](double) { return C(1.0); };
    auto r = quad::integrate_interval(one, 0.0, 1.0);
    CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.evaluations > 0);

    auto gauss = [](double y) { return C(std::exp(-y * y)); };
    CHECK(quad::integrate_interval(gauss, -12.0, 12.0).value.real() ==
          doctest::Approx(kSqrtPi).epsilon(1e-12));

    auto moment = [](double y) { return C(y * y * std::exp(-y * y)); };
    CHECK(quad::integrate_interval(moment, -12.0, 12.0).value.real() ==
          doctest::Approx(kSqrtPi / 2).epsilon(1e-12));

    CHECK_THROWS_AS(quad::integrate_interval(one, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("gaussian weighted basics") {
    for (double b : {0.5, 1.0, 2.3}) {
        auto one = [](double) { return C(1.0); };
        CHECK(quad::integrate_gaussian_weighted(one, b).value.real() ==
              doctest::Approx(std::sqrt(kPi / b)).epsilon(1e-12));
    }

    auto odd = [](double y) { return C(y); };
    CHECK(std::abs(quad::integrate_gaussian_weighted(odd, 1.7).value.real()) <= 1e-12);

    // y^2 exp(2 i p y) against the closed Hermite form, p = 1, b = 1
    quad::QuadConfig cfg;
    cfg.osc_freq = 2.0;
    auto f = [](double y) { return y * y * C(std::cos(2 * y), std::sin(2 * y)); };
    const auto direct = quad::integrate_gaussian_weighted(f, 1.0, cfg);
    const auto closed = wigner::f_integral_closed(2, 1.0, 1.0, 1.0);
    CHECK(std::abs(direct.value - closed) <= 1e-10);

    CHECK_THROWS_AS(quad::integrate_gaussian_weighted(f, 0.0), std::invalid_argument);
}

TEST_CASE("error honesty on the Gaussian family") {
    for (double b : {0.5, 1.0, 3.0})
        for (int k : {0, 2, 4}) {
            auto f = [k](double y) {
                double yk = 1;
                for (int i = 0; i < k; ++i) yk *= y;
                return C(yk);
            };
            const auto r = quad::integrate_gaussian_weighted(f, b);
            // exact moment integral: b^{-(k+1)/2} Gamma((k+1)/2)
            const double exact = std::pow(b, -(k + 1) / 2.0) * std::tgamma((k + 1) / 2.0);
            CHECK(std::abs(r.value.real() - exact) <= 10.0 * r.abs_error_estimate + 1e-15);
        }
}

TEST_CASE("window sufficiency") {
    // doubling the window must not move the result beyond abs_tol
    quad::QuadConfig narrow, wide;
    wide.window_halfwidth_sigmas = 24.0;
    for (double p : {0.0, 4.0, 10.0}) {
        auto f = [p](double y) {
            return (1.0 + y * y) * C(std::cos(p * y), std::sin(p * y));
        };
        quad::QuadConfig a = narrow, b = wide;
        a.osc_freq = b.osc_freq = p;
        const auto ra = quad::integrate_gaussian_weighted(f, 0.8, a);
        const auto rb = quad::integrate_gaussian_weighted(f, 0.8, b);
        CHECK(std::abs(ra.value - rb.value) <= narrow.abs_tol);
    }
}

TEST_CASE("linearity") {
    auto f = [](double y) { return C(std::exp(-0.3 * y * y)); };
    auto g = [](double y) { return C(y * y * std::exp(-0.5 * y * y)); };
    const double a = 2.5, b = -1.25;
    auto combo = [&](double y) { return a * f(y) + b * g(y); };
    const auto rf = quad::integrate_interval(f, -10.0, 10.0);
    const auto rg = quad::integrate_interval(g, -10.0, 10.0);
    const auto rc = quad::integrate_interval(combo, -10.0, 10.0);
    CHECK(std::abs(rc.value - (a * rf.value + b * rg.value)) <=
          10 * (std::abs(a) * rf.abs_error_estimate + std::abs(b) * rg.abs_error_estimate) +
              1e-12);
}

TEST_CASE("oscillation safeguard") {
    // without the safeguard a single G7K15 panel can alias a fast kernel;
    // the config hint forces enough initial panels for a correct result
    const double p = 40.0;
    auto f = [p](double y) { return C(std::cos(p * y)); };
    quad::QuadConfig cfg;
    cfg.osc_freq = p;
    const auto r = quad::integrate_gaussian_weighted(f, 1.0, cfg);
    const double exact = kSqrtPi * std::exp(-p * p / 4.0); // ~ 0
    CHECK(std::abs(r.value.real() - exact) <= 1e-10);
}

TEST_CASE("no convergence reported") {
    quad::QuadConfig cfg;
    cfg.max_depth = 2;
    cfg.rel_tol = 1e-14;
    cfg.abs_tol = 1e-16;
    auto nasty = [](double y) { return C(std::cos(300.0 * y * y)); };
    CHECK_THROWS_AS(quad::integrate_interval(nasty, 0.0, 3.0, cfg), NoConvergenceError);
}
