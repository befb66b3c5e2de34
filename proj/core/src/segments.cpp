#include "singwalk/segments.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace singwalk {

Rational chebyshev_u(unsigned n, const Rational& z) {
    Rational prev(1);
    if (n == 0) return prev;
    Rational cur = Rational(2) * z;
    for (unsigned m = 1; m < n; ++m) {
        Rational next = Rational(2) * z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double chebyshev_u(unsigned n, double z) {
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 2.0 * z;
    for (unsigned m = 1; m < n; ++m) {
        const double next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Matrix<Rational> tridiagonal_kernel(unsigned n, const Rational& t) {
    Matrix<Rational> m(n, n);
    for (unsigned i = 0; i < n; ++i) {
        m.at(i, i) = Rational(1);
        if (i + 1 < n) {
            m.at(i, i + 1) = -t;
            m.at(i + 1, i) = -t;
        }
    }
    return m;
}

Matrix<Rational> f_matrix_by_inversion(unsigned n, const Rational& t) {
    if (n == 0) throw std::invalid_argument("f_matrix_by_inversion: empty matrix");
    try {
        return tridiagonal_kernel(n, t).inverse();
    } catch (const std::domain_error&) {
        throw std::domain_error("f_matrix_by_inversion: t = " + t.to_string() +
                                " is a pole (a zero of U_n(-1/2t))");
    }
}

Matrix<Rational> f_matrix_closed_form(unsigned n, const Rational& t) {
    if (n == 0) throw std::invalid_argument("f_matrix_closed_form: empty matrix");
    if (t.is_zero()) throw std::domain_error("f_matrix_closed_form: degenerate at t = 0, use the inversion path");
    const Rational z = t.inverse() / Rational(2);
    std::vector<Rational> u(n + 1);
    u[0] = Rational(1);
    if (n >= 1) u[1] = Rational(2) * z;
    for (unsigned m = 2; m <= n; ++m) u[m] = Rational(2) * z * u[m - 1] - u[m - 2];
    if (u[n].is_zero())
        throw std::domain_error("f_matrix_closed_form: t = " + t.to_string() + " is a pole of F_" + std::to_string(n));
    const Rational scale = t.inverse() / u[n];
    Matrix<Rational> f(n, n);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) {
            Rational v = scale * u[n - j] * u[i - 1];
            f.at(j - 1, i - 1) = v;
            f.at(i - 1, j - 1) = std::move(v);
        }
    return f;
}

Matrix<Rational> f_matrix_half(unsigned n) {
    if (n == 0) throw std::invalid_argument("f_matrix_half: empty matrix");
    Matrix<Rational> f(n, n);
    const Rational den(static_cast<long>(n) + 1);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) {
            Rational v = Rational(2 * static_cast<long>(i) * static_cast<long>(n - j + 1)) / den;
            f.at(j - 1, i - 1) = v;
            f.at(i - 1, j - 1) = std::move(v);
        }
    return f;
}

Rational f_inverse_determinant(unsigned n, const Rational& t) {
    if (t.is_zero()) return Rational(1);
    return (-t).pow(static_cast<long>(n)) * chebyshev_u(n, -(t.inverse() / Rational(2)));
}

TruncSeries<Rational> w_series(unsigned k, unsigned i, unsigned j, std::size_t order) {
    if (i > k || j > k) throw std::invalid_argument("w_series: segment index out of range");
    std::vector<Integer> cur(k + 1, Integer(0)), next(k + 1);
    cur[i] = 1;
    TruncSeries<Rational> f('t', order);
    for (std::size_t n = 0; n < order; ++n) {
        if (sgn(cur[j]) != 0) f.set_coeff(n, Rational(cur[j]));
        for (unsigned a = 0; a <= k; ++a) {
            Integer acc(0);
            if (a > 0) acc += cur[a - 1];
            if (a < k) acc += cur[a + 1];
            next[a] = std::move(acc);
        }
        cur.swap(next);
    }
    return f;
}

Matrix<TruncSeries<Rational>> w_series_matrix(unsigned k, std::size_t order) {
    Matrix<TruncSeries<Rational>> m(k + 1, k + 1, TruncSeries<Rational>('t', order));
    for (unsigned i = 0; i <= k; ++i)
        for (unsigned j = i; j <= k; ++j) {
            auto f = w_series(k, i, j, order);
            m.at(j, i) = f;
            m.at(i, j) = std::move(f);
        }
    return m;
}

PoleData pole_and_residue(unsigned k, unsigned i, unsigned j) {
    if (i > k || j > k) throw std::invalid_argument("pole_and_residue: segment index out of range");
    if (i > j) std::swap(i, j);
    const double theta = M_PI / static_cast<double>(k + 2);
    const double z0 = std::cos(theta);
    const double s = std::sin(theta);
    PoleData r;
    r.pole = 1.0 / (2.0 * z0);
    r.residue = s * s * chebyshev_u(k - j, z0) * chebyshev_u(i, z0) / (static_cast<double>(k + 2) * z0);
    return r;
}

}  // namespace singwalk
