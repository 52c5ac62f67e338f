#include <doctest.h>

#include <cmath>
#include <complex>

#include "cswigner/errors.hpp"
#include "cswigner/polygauss.hpp"

using namespace cswigner;
using namespace cswigner::polygauss;
using C = std::complex<double>;

namespace {

GaussianAnsatz unit_gaussian(double a, double c) {
    return {BiPoly::constant(C(1)), a, c};
}

double table_distance(const BiPoly& f, const BiPoly& g) {
    double d = 0;
    const int di = std::max(f.degree_x(), g.degree_x());
    const int dj = std::max(f.degree_y(), g.degree_y());
    for (int i = 0; i <= di; ++i)
        for (int j = 0; j <= dj; ++j) d = std::max(d, std::abs(f.coeff(i, j) - g.coeff(i, j)));
    return d;
}

} // namespace

TEST_CASE("poly_mul") {
    CHECK((BiPoly::constant(C(1)) * BiPoly::constant(C(1))).coeff(0, 0) == C(1));

    // (q + i p)(q - i p) = q^2 + p^2
    BiPoly f = BiPoly::monomial(1, 0, C(1)) + BiPoly::monomial(0, 1, C(0, 1));
    BiPoly g = BiPoly::monomial(1, 0, C(1)) + BiPoly::monomial(0, 1, C(0, -1));
    BiPoly prod = poly_mul(f, g);
    CHECK(prod.coeff(2, 0) == C(1));
    CHECK(prod.coeff(0, 2) == C(1));
    CHECK(prod.coeff(1, 1) == C(0));

    // p * p^2 = p^3
    BiPoly p3 = poly_mul(BiPoly::monomial(0, 1, C(1)), BiPoly::monomial(0, 2, C(1)));
    CHECK(p3.coeff(0, 3) == C(1));
    CHECK(p3.total_degree() == 3);
}

TEST_CASE("differentiate_p") {
    // P = 1, c = 1/2: derivative polynomial is -p
    auto d1 = differentiate_p(unit_gaussian(0.0, 0.5));
    CHECK(d1.poly.coeff(0, 1) == C(-1));
    CHECK(d1.poly.coeff(0, 0) == C(0));
    CHECK(d1.a == 0.0);
    CHECK(d1.c == 0.5);

    // P = p, c = 1/2: product rule gives 1 - p^2
    GaussianAnsatz fp{BiPoly::monomial(0, 1, C(1)), 0.0, 0.5};
    auto d2 = differentiate_p(fp);
    CHECK(d2.poly.coeff(0, 0) == C(1));
    CHECK(d2.poly.coeff(0, 2) == C(-1));

    // twice on P = 1 with c = 1/2: p^2 - 1
    auto dd = differentiate_p(differentiate_p(unit_gaussian(0.0, 0.5)));
    CHECK(dd.poly.coeff(0, 2) == C(1));
    CHECK(dd.poly.coeff(0, 0) == C(-1));
}

TEST_CASE("apply_operator basics") {
    // d_p^2 on exp(-p^2/2) -> (p^2 - 1) exp(-p^2/2)
    OperatorPoly dp2{BiPoly::monomial(0, 2, C(1))};
    auto g = apply_operator(dp2, unit_gaussian(0.0, 0.5));
    CHECK(g.poly.coeff(0, 2) == C(1));
    CHECK(g.poly.coeff(0, 0) == C(-1));

    // (q - i d_p) on exp(-p^2/2) -> (q + i p) exp(-p^2/2)
    auto lin = linear_operator<double>(C(1), C(0, -1));
    auto h = apply_operator(lin, unit_gaussian(0.0, 0.5));
    CHECK(h.poly.coeff(1, 0) == C(1));
    CHECK(h.poly.coeff(0, 1) == C(0, 1));
}

TEST_CASE("apply_operator fourth derivative at origin with fd oracle") {
    // (q^2 + d_p^2)^2 applied to exp(-p^2/2), value at the origin
    auto x = linear_operator<double>(C(1), C(0));
    OperatorPoly base{BiPoly::monomial(2, 0, C(1)) + BiPoly::monomial(0, 2, C(1))};
    auto g = apply_operator(OperatorPoly{base.table * base.table}, unit_gaussian(0.0, 0.5));
    const double at0 = eval_ansatz(g, 0.0, 0.0).real();
    CHECK(at0 == doctest::Approx(3.0).epsilon(1e-12));

    // finite-difference oracle for d^4/dp^4 exp(-p^2/2) at 0
    auto f = [](double p) { return std::exp(-p * p / 2.0); };
    const double h = 0.05;
    const double fd4 =
        (f(2 * h) - 4 * f(h) + 6 * f(0) - 4 * f(-h) + f(-2 * h)) / (h * h * h * h);
    CHECK(at0 == doctest::Approx(fd4).epsilon(1e-2));
    (void)x;
}

TEST_CASE("laguerre_operator") {
    // n = 0 is the identity
    auto id = laguerre_operator<double>(0, 1.5, 0.7, -1);
    CHECK(id.table.coeff(0, 0) == C(1));
    CHECK(id.table.total_degree() == 0);

    // n = 1, k = 3/2, scale s, sign -1:
    //   (1 + 3/2) - s (q - i d_p)^2 = 5/2 - s q^2 + 2 i s q d_p + s d_p^2
    const double s = 0.7;
    auto op = laguerre_operator<double>(1, 1.5, s, -1);
    CHECK(op.table.coeff(0, 0).real() == doctest::Approx(2.5));
    CHECK(op.table.coeff(2, 0).real() == doctest::Approx(-s));
    CHECK(op.table.coeff(1, 1).imag() == doctest::Approx(2.0 * s));
    CHECK(op.table.coeff(0, 2).real() == doctest::Approx(s));

    CHECK_THROWS_AS(laguerre_operator<double>(1, 0.5, 1.0, 2), std::domain_error);
    CHECK_THROWS_AS(laguerre_operator<double>(-1, 0.5, 1.0, 1), std::domain_error);
}

TEST_CASE("realify") {
    // already real: unchanged, residue 0
    GaussianAnsatz real_f{BiPoly::monomial(1, 1, C(2.0)), 0.5, 0.5};
    auto r = realify(real_f, 1e-9);
    CHECK(r.imag_residue == 0.0);
    CHECK(r.ansatz.poly.coeff(1, 1) == C(2.0));

    // product of sign -1 and sign +1 Laguerre-operator applications is real
    const double w = 1.0;
    auto op = laguerre_operator<double>(1, 0.5, w / 2, -1) *
              laguerre_operator<double>(1, 0.5, w / 2, +1);
    auto g = apply_operator(op, unit_gaussian(0.0, 1.0 / (2 * w)));
    auto rr = realify(g, 1e-9);
    CHECK(rr.imag_residue <= 1e-12);

    // purely imaginary input must fail
    GaussianAnsatz imag_f{BiPoly::monomial(0, 1, C(0, 1)), 0.0, 1.0};
    CHECK_THROWS_AS(realify(imag_f, 1e-9), NumericResidueError);
}

TEST_CASE("eval_ansatz") {
    CHECK(eval_ansatz(unit_gaussian(0.5, 0.5), 0.0, 0.0) == C(1));

    GaussianAnsatz f{BiPoly::monomial(2, 0, C(1)) + BiPoly::monomial(0, 2, C(1)), 0.0, 0.0};
    CHECK(eval_ansatz(f, 1.0, 2.0).real() == doctest::Approx(5.0));

    GaussianAnsatz g{BiPoly::monomial(1, 1, C(3)), 0.25, 0.5};
    const double expect = 3.0 * 1.5 * (-0.5) * std::exp(-0.25 * 1.5 * 1.5 - 0.5 * 0.25);
    CHECK(eval_ansatz(g, 1.5, -0.5).real() == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("linearity of apply_operator") {
    auto A = laguerre_operator<double>(2, 0.5, 0.8, -1);
    auto B = laguerre_operator<double>(3, 2.5, 1.3, +1);
    GaussianAnsatz f{BiPoly::monomial(1, 0, C(0.3, -0.2)) + BiPoly::monomial(0, 2, C(1.7)),
                     0.4, 0.6};
    auto lhs = apply_operator(A + B, f);
    auto rhs_a = apply_operator(A, f);
    auto rhs_b = apply_operator(B, f);
    auto rhs = rhs_a.poly + rhs_b.poly;
    CHECK(table_distance(lhs.poly, rhs) <= 1e-12 * std::max(1.0, rhs.max_abs()));
}

TEST_CASE("commutation of (q^2 + d_p^2) with the Laguerre operators") {
    OperatorPoly x2{BiPoly::monomial(2, 0, C(1)) + BiPoly::monomial(0, 2, C(1))};
    GaussianAnsatz f = unit_gaussian(0.0, 0.5);
    for (int sign : {-1, +1})
        for (int n = 0; n <= 4; ++n) {
            auto L = laguerre_operator<double>(n, 0.5, 0.9, sign);
            auto ab = apply_operator(x2, apply_operator(L, f));
            auto ba = apply_operator(L, apply_operator(x2, f));
            const double scale = std::max(1.0, ba.poly.max_abs());
            CHECK(table_distance(ab.poly, ba.poly) / scale <= 1e-13);
        }
}

TEST_CASE("derivative fidelity against finite differences") {
    GaussianAnsatz f{BiPoly::monomial(2, 1, C(0.7)) + BiPoly::monomial(0, 0, C(1.1)) +
                         BiPoly::monomial(1, 2, C(-0.4)),
                     0.3, 0.45};
    auto df = differentiate_p(f);
    const double h = 1e-4;
    for (double q = -1.0; q <= 1.0; q += 0.5)
        for (double p = -1.0; p <= 1.0; p += 0.5) {
            const double fd =
                (eval_ansatz(f, q, p + h).real() - eval_ansatz(f, q, p - h).real()) / (2 * h);
            CHECK(eval_ansatz(df, q, p).real() == doctest::Approx(fd).epsilon(1e-6));
        }
}

TEST_CASE("degree bound of the Laguerre operator") {
    GaussianAnsatz f{BiPoly::monomial(1, 1, C(1)), 0.0, 0.5};
    const int base_degree = 2;
    for (int n = 0; n <= 5; ++n) {
        auto g = apply_operator(laguerre_operator<double>(n, 0.5, 1.0, +1), f);
        CHECK(g.poly.total_degree() <= base_degree + 2 * n);
    }
}
