#pragma once

// Exact calculus on P(q,p) * exp(-a q^2 - c p^2) with a complex-coefficient
// bivariate polynomial P.  This family is closed under multiplication by q,
// differentiation in p, and therefore under every operator polynomial in the
// two commuting symbols (q, d/dp).  That closure is what lets the relative
// Wigner function be evaluated without any quadrature.
//
// Templated on the real type: the public aliases use double; the Wigner
// operator path instantiates long double internally to keep coefficient
// cancellation far below its residue tolerance.

#include <cassert>
#include <complex>
#include <stdexcept>
#include <vector>

#include "cswigner/errors.hpp"
#include "cswigner/specfun.hpp"

namespace cswigner::polygauss {

inline constexpr double kPruneThreshold = 1e-300; // drops exact-zero artifacts only
inline constexpr double kDefaultResidueTol = 1e-9;

// Bivariate polynomial, dense table keyed by (x-power, y-power).
// Degrees stay small (<= ~4n + 2*alpha) so no sparse storage is needed.
template <class Real>
class BiPolyT {
public:
    using Complex = std::complex<Real>;

    BiPolyT() = default; // zero polynomial

    static BiPolyT constant(Complex v) { return monomial(0, 0, v); }

    static BiPolyT monomial(int i, int j, Complex v) {
        BiPolyT p;
        if (i < 0 || j < 0) throw std::domain_error("BiPoly: negative exponent");
        p.resize(i + 1, j + 1);
        p.at(i, j) = v;
        p.prune();
        return p;
    }

    bool is_zero() const { return nx_ == 0; }
    int degree_x() const { return nx_ - 1; } // -1 for the zero polynomial
    int degree_y() const { return ny_ - 1; }

    int total_degree() const {
        int deg = -1;
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < ny_; ++j)
                if (at(i, j) != Complex(0) && i + j > deg) deg = i + j;
        return deg;
    }

    Complex coeff(int i, int j) const {
        if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return Complex(0);
        return at(i, j);
    }

    void set_coeff(int i, int j, Complex v) {
        if (i < 0 || j < 0) throw std::domain_error("BiPoly: negative exponent");
        if (i >= nx_ || j >= ny_) grow(i + 1, j + 1);
        at(i, j) = v;
    }

    BiPolyT& operator+=(const BiPolyT& o) {
        grow(o.nx_, o.ny_);
        for (int i = 0; i < o.nx_; ++i)
            for (int j = 0; j < o.ny_; ++j) at(i, j) += o.at(i, j);
        prune();
        return *this;
    }

    friend BiPolyT operator+(BiPolyT a, const BiPolyT& b) { return a += b; }

    friend BiPolyT operator-(BiPolyT a, const BiPolyT& b) {
        return a += b.scaled(Complex(-1));
    }

    // Exact coefficient-table convolution.
    friend BiPolyT operator*(const BiPolyT& a, const BiPolyT& b) {
        if (a.is_zero() || b.is_zero()) return BiPolyT();
        BiPolyT out;
        out.resize(a.nx_ + b.nx_ - 1, a.ny_ + b.ny_ - 1);
        for (int i = 0; i < a.nx_; ++i)
            for (int j = 0; j < a.ny_; ++j) {
                const Complex av = a.at(i, j);
                if (av == Complex(0)) continue;
                for (int k = 0; k < b.nx_; ++k)
                    for (int l = 0; l < b.ny_; ++l) out.at(i + k, j + l) += av * b.at(k, l);
            }
        out.prune();
        return out;
    }

    BiPolyT scaled(Complex s) const {
        BiPolyT out = *this;
        for (auto& v : out.c_) v *= s;
        out.prune();
        return out;
    }

    // Multiply by x^di y^dj.
    BiPolyT shifted(int di, int dj) const {
        if (is_zero()) return BiPolyT();
        BiPolyT out;
        out.resize(nx_ + di, ny_ + dj);
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < ny_; ++j) out.at(i + di, j + dj) = at(i, j);
        return out;
    }

    Real max_abs() const {
        Real m = 0;
        for (const auto& v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    Real max_abs_imag() const {
        Real m = 0;
        for (const auto& v : c_) m = std::max(m, std::abs(v.imag()));
        return m;
    }

    void drop_imag() {
        for (auto& v : c_) v = Complex(v.real(), Real(0));
    }

    template <class F>
    void visit(F&& f) const { // f(i, j, coeff) over nonzero entries
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < ny_; ++j)
                if (at(i, j) != Complex(0)) f(i, j, at(i, j));
    }

    // Horner evaluation, inner loop over y at fixed x-power.
    Complex eval(Real x, Real y) const {
        Complex acc(0);
        for (int i = nx_ - 1; i >= 0; --i) {
            Complex row(0);
            for (int j = ny_ - 1; j >= 0; --j) row = row * y + at(i, j);
            acc = acc * x + row;
        }
        return acc;
    }

    // Drop coefficients below the prune threshold and shrink the table.
    void prune(Real threshold = Real(kPruneThreshold)) {
        int mx = 0, my = 0;
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < ny_; ++j) {
                if (std::abs(at(i, j)) < threshold) at(i, j) = Complex(0);
                if (at(i, j) != Complex(0)) {
                    mx = std::max(mx, i + 1);
                    my = std::max(my, j + 1);
                }
            }
        if (mx == nx_ && my == ny_) return;
        BiPolyT out;
        out.resize(mx, my);
        for (int i = 0; i < mx; ++i)
            for (int j = 0; j < my; ++j) out.at(i, j) = at(i, j);
        *this = out;
    }

    template <class R2>
    BiPolyT<R2> cast() const {
        BiPolyT<R2> out;
        visit([&](int i, int j, Complex v) {
            out.set_coeff(i, j, std::complex<R2>(static_cast<R2>(v.real()), static_cast<R2>(v.imag())));
        });
        return out;
    }

private:
    Complex& at(int i, int j) { return c_[static_cast<size_t>(i) * ny_ + j]; }
    const Complex& at(int i, int j) const { return c_[static_cast<size_t>(i) * ny_ + j]; }

    void resize(int nx, int ny) {
        nx_ = nx;
        ny_ = ny;
        c_.assign(static_cast<size_t>(nx) * ny, Complex(0));
    }

    void grow(int nx, int ny) {
        if (nx <= nx_ && ny <= ny_) return;
        BiPolyT out;
        out.resize(std::max(nx, nx_), std::max(ny, ny_));
        for (int i = 0; i < nx_; ++i)
            for (int j = 0; j < ny_; ++j) out.at(i, j) = at(i, j);
        *this = out;
    }

    int nx_ = 0, ny_ = 0;          // table dims = degree + 1 (0 for the zero poly)
    std::vector<Complex> c_;       // row-major, c_[i*ny_ + j]
};

// P(q,p) * exp(-a q^2 - c p^2).  c > 0 keeps momentum integrals convergent.
template <class Real>
struct GaussianAnsatzT {
    BiPolyT<Real> poly;
    Real a = 0;
    Real c = 0;
};

// Polynomial in the commuting symbols (q, d/dp): coeff(i,j) multiplies
// q^i (d/dp)^j.  q is a parameter of the p-functions and never gets
// differentiated, so plain polynomial algebra is faithful.
template <class Real>
struct OperatorPolyT {
    BiPolyT<Real> table;

    friend OperatorPolyT operator*(const OperatorPolyT& a, const OperatorPolyT& b) {
        return {a.table * b.table};
    }
    friend OperatorPolyT operator+(const OperatorPolyT& a, const OperatorPolyT& b) {
        return {a.table + b.table};
    }
};

using BiPoly = BiPolyT<double>;
using GaussianAnsatz = GaussianAnsatzT<double>;
using OperatorPoly = OperatorPolyT<double>;

template <class Real>
BiPolyT<Real> poly_mul(const BiPolyT<Real>& f, const BiPolyT<Real>& g) {
    return f * g;
}

// d/dp [P exp(-a q^2 - c p^2)] = (dP/dp - 2 c p P) exp(same envelope).
template <class Real>
GaussianAnsatzT<Real> differentiate_p(const GaussianAnsatzT<Real>& f) {
    assert(f.c > Real(0));
    BiPolyT<Real> out;
    f.poly.visit([&](int i, int j, std::complex<Real> v) {
        if (j >= 1) out += BiPolyT<Real>::monomial(i, j - 1, v * Real(j));
        out += BiPolyT<Real>::monomial(i, j + 1, v * Real(-2) * f.c);
    });
    return {out, f.a, f.c};
}

// Apply sum_{ij} c_ij q^i (d/dp)^j to f.  The derivative chain is shared
// across all operator terms of equal j.
template <class Real>
GaussianAnsatzT<Real> apply_operator(const OperatorPolyT<Real>& op, const GaussianAnsatzT<Real>& f) {
    const int max_j = std::max(0, op.table.degree_y());
    std::vector<BiPolyT<Real>> chain(static_cast<size_t>(max_j) + 1);
    chain[0] = f.poly;
    GaussianAnsatzT<Real> cur = f;
    for (int j = 1; j <= max_j; ++j) {
        cur = differentiate_p(cur);
        chain[static_cast<size_t>(j)] = cur.poly;
    }
    BiPolyT<Real> out;
    op.table.visit([&](int i, int j, std::complex<Real> cij) {
        out += chain[static_cast<size_t>(j)].shifted(i, 0).scaled(cij);
    });
    return {out, f.a, f.c};
}

template <class Real>
OperatorPolyT<Real> identity_operator() {
    return {BiPolyT<Real>::constant(std::complex<Real>(1))};
}

// cq * q + cd * (d/dp), complex coefficients.
template <class Real>
OperatorPolyT<Real> linear_operator(std::complex<Real> cq, std::complex<Real> cd) {
    BiPolyT<Real> t;
    t.set_coeff(1, 0, cq);
    t.set_coeff(0, 1, cd);
    t.prune();
    return {t};
}

// Horner evaluation of sum_m coeffs[m] X^m in the operator algebra.
template <class Real>
OperatorPolyT<Real> operator_from_series(const std::vector<std::complex<Real>>& coeffs,
                                         const OperatorPolyT<Real>& X) {
    OperatorPolyT<Real> res{BiPolyT<Real>()};
    for (size_t m = coeffs.size(); m-- > 0;) {
        res = res * X;
        res.table += BiPolyT<Real>::constant(coeffs[m]);
    }
    return res;
}

// L_n^k(scale * (q + sign * i * d/dp)^2), expanded through the Laguerre
// series with exact binomial coefficients.
template <class Real>
OperatorPolyT<Real> laguerre_operator(int n, Real k, Real scale, int sign) {
    if (n < 0) throw std::domain_error("laguerre_operator: degree must be >= 0");
    if (sign != 1 && sign != -1) throw std::domain_error("laguerre_operator: sign must be +1 or -1");
    auto lin = linear_operator<Real>(std::complex<Real>(1), std::complex<Real>(0, Real(sign)));
    OperatorPolyT<Real> x2 = lin * lin;
    x2.table = x2.table.scaled(std::complex<Real>(scale));
    std::vector<std::complex<Real>> coeffs(static_cast<size_t>(n) + 1);
    Real mfact = 1;
    for (int m = 0; m <= n; ++m) {
        if (m > 0) mfact *= Real(m);
        Real c = specfun::binomial_general(Real(n) + k, n - m) / mfact;
        coeffs[static_cast<size_t>(m)] = std::complex<Real>((m % 2 == 0) ? c : -c);
    }
    return operator_from_series(coeffs, x2);
}

// H_n(cq * q + cd * d/dp) via the Hermite coefficient recurrence
// h_{m+1}(x) = 2x h_m - 2m h_{m-1}.
template <class Real>
OperatorPolyT<Real> hermite_operator(int n, std::complex<Real> cq, std::complex<Real> cd) {
    if (n < 0) throw std::domain_error("hermite_operator: degree must be >= 0");
    std::vector<Real> hm1{Real(1)};
    std::vector<Real> hm{Real(0), Real(2)};
    if (n == 0) hm = hm1;
    for (int m = 1; m < n; ++m) {
        std::vector<Real> next(static_cast<size_t>(m) + 2, Real(0));
        for (size_t d = 0; d < hm.size(); ++d) next[d + 1] += Real(2) * hm[d];
        for (size_t d = 0; d < hm1.size(); ++d) next[d] -= Real(2 * m) * hm1[d];
        hm1 = hm;
        hm = next;
    }
    std::vector<std::complex<Real>> coeffs(hm.size());
    for (size_t d = 0; d < hm.size(); ++d) coeffs[d] = std::complex<Real>(hm[d]);
    return operator_from_series(coeffs, linear_operator<Real>(cq, cd));
}

template <class Real>
struct RealifyResultT {
    GaussianAnsatzT<Real> ansatz;
    double imag_residue = 0; // max |Im coeff| / max |coeff|
};

// Strip imaginary parts left behind by the complex operator algebra.  The
// relative residue is a correctness diagnostic: results of the Wigner
// operator chain are real by construction, so a residue above tolerance
// means the chain itself is wrong.
template <class Real>
RealifyResultT<Real> realify(const GaussianAnsatzT<Real>& f, double tol = kDefaultResidueTol) {
    RealifyResultT<Real> out;
    const Real scale = f.poly.max_abs();
    out.imag_residue = scale > Real(0) ? static_cast<double>(f.poly.max_abs_imag() / scale) : 0.0;
    if (out.imag_residue > tol)
        throw NumericResidueError("realify: imaginary residue above tolerance", out.imag_residue);
    out.ansatz = f;
    out.ansatz.poly.drop_imag();
    out.ansatz.poly.prune();
    return out;
}

template <class Real>
std::complex<Real> eval_ansatz(const GaussianAnsatzT<Real>& f, Real q, Real p) {
    return f.poly.eval(q, p) * std::exp(-f.a * q * q - f.c * p * p);
}

} // namespace cswigner::polygauss
