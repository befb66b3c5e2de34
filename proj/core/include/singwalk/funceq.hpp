#pragma once

#include "singwalk/gaussian.hpp"
#include "singwalk/model.hpp"
#include "singwalk/rational.hpp"
#include "singwalk/series.hpp"
#include "singwalk/transfer.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace singwalk {

enum class Regime { generic_v, v_equals_one };

/// Rational parametrization data of one kernel curve K(x, y, t) = 0, as
/// truncated series in the uniformizing variable s:
///
///   (x0(s), y0(s)) and (x0_shift(s), y0(s)) both lie on the curve, with
///   x0_shift = x0 o sigma. In the generic regime t = v/(1+v^2) for
///   v in (0,1) and sigma(s) = v^2 s; at v = 1 (t = 1/2) sigma is a
///   homography with a single fixed point at 0.
///
/// All four series have zero constant term, so they compose into Q-series.
/// Construction verifies the kernel residuals and the shift relation and
/// throws std::logic_error if any transcription is off.
template <typename S>
struct KernelParam {
    char model;
    Regime regime;
    Rational v;
    Rational t;
    TruncSeries<S> x0;
    TruncSeries<S> x0_shift;
    TruncSeries<S> y0;
    TruncSeries<S> sigma;
};

/// Model A at v = 1 genuinely involves the imaginary unit (the kernel
/// factors as (ix-iy+xy)(ix-iy-xy)/2); requesting it over plain rationals
/// throws. Models B and D at v = 1 are rational; C and E are rational too
/// but accept either scalar.
template <typename S>
KernelParam<S> build_param(const ModelSpec& m, Regime regime, const Rational& v, std::size_t order);

/// K(x(s), y(s), t) as a series in s; identically zero on the curve.
template <typename S>
TruncSeries<S> kernel_residual_series(const ModelSpec& m, const Rational& t, const TruncSeries<S>& x,
                                      const TruncSeries<S>& y);

/// Residual of the difference equation obtained from the two
/// parametrizations sharing y0: with G(s) = t x0(s)^2 Q(x0(s), 0),
///   G(s) - G(sigma(s)) - (x0(s) - x0_shift(s)) y0(s) = 0.
/// q_section holds the coefficients of Q(x, 0, t) to degree >= order.
template <typename S>
TruncSeries<S> difference_residual(const KernelParam<S>& p, const std::vector<Rational>& q_section);

/// Model A at t = 1/2 also satisfies the one-fixed-point equation coming
/// from the diagonal symmetry Q(x,0) = Q(0,x):
///   G1(tau(s)) + G1(s) = s * tau(s),  tau(s) = s/(1+is),
/// with G1(s) = (1/2) s^2 Q(s, 0, 1/2). Returns the residual series.
TruncSeries<GaussianRational> model_a_half_symmetric_residual(const std::vector<Rational>& q_section,
                                                              std::size_t order);

/// Residual of the kernel functional equation
///   K(x,y) Q(x,y) - xy + t x^2 Q(x,0) + t y^2 Q(0,y)
/// collected on the complete triangle i + j <= degree_checked.
struct BivariateResidual {
    int degree_checked;
    std::vector<std::vector<Rational>> rows;  // rows[d][i] = coeff of x^i y^(d-i)

    bool is_zero() const;
    std::optional<std::pair<int, int>> first_nonzero() const;  // (i, j)
};

BivariateResidual kernel_equation_residual(const ModelSpec& m, const Rational& t, int order);

/// Section identities at t = 1/2 with their own parametrizations:
///   W(x) = (x^2/2) Q_D(-x^2, 0, 1/2) solves
///       W(x) - W(x/(x+1))/(x+1)^2 = x^3 (x+2)/(x+1)^3;
///   f(s) = Q_B(s, 0, 1/2) solves
///       f(-2s^2/(s+1))/(s+1)^2 + f(-2s^2/(1-s))/(1-s)^2 = 2/(1-s^2).
/// Each takes the section coefficients (so tests can perturb them) and
/// returns the residual series.
TruncSeries<Rational> w_equation_residual(const std::vector<Rational>& qd_section, std::size_t order);
TruncSeries<Rational> f_equation_residual(const std::vector<Rational>& qb_section, std::size_t order);

}  // namespace singwalk
