#include "singwalk/funceq.hpp"

#include <stdexcept>
#include <type_traits>

namespace singwalk {

namespace {

template <typename S>
S from_rational(const Rational& c) {
    if constexpr (std::is_same_v<S, Rational>)
        return c;
    else
        return S(c);
}

template <typename S>
TruncSeries<S> series_of(char var, std::size_t order, std::vector<S> coeffs) {
    return TruncSeries<S>(var, order, std::move(coeffs));
}

// Horner evaluation of sum_k c_k * x(s)^k; x must have zero constant term.
template <typename S>
TruncSeries<S> substitute_section(const std::vector<Rational>& coeffs, const TruncSeries<S>& x) {
    TruncSeries<S> acc(x.var(), x.order());
    const std::size_t top = std::min(coeffs.size(), x.order() + 1);
    for (std::size_t idx = top; idx-- > 0;) {
        acc = acc * x;
        if (!coeffs[idx].is_zero()) acc.set_coeff(0, acc.coeff(0) + from_rational<S>(coeffs[idx]));
    }
    return acc;
}

struct FractionSpec {
    std::vector<Rational> num;
    std::vector<Rational> den;
};

template <typename S>
TruncSeries<S> expand(const FractionSpec& f, std::size_t order) {
    std::vector<S> num, den;
    num.reserve(f.num.size());
    den.reserve(f.den.size());
    for (const auto& c : f.num) num.push_back(from_rational<S>(c));
    for (const auto& c : f.den) den.push_back(from_rational<S>(c));
    return rational_series<S>('s', order, std::move(num), std::move(den));
}

struct ParamSpec {
    FractionSpec x0, x0_shift, y0, sigma;
};

// The displayed uniformizations for t = v/(1+v^2), v in (0,1); the shift is
// always sigma(s) = v^2 s.
ParamSpec generic_spec(char model, const Rational& v) {
    const Rational one(1);
    const Rational v2 = v * v, v3 = v2 * v, v4 = v2 * v2, v5 = v4 * v;
    ParamSpec p;
    p.sigma = {{Rational(0), v2}, {one}};
    switch (model) {
        case 'A': {
            const Rational c = one - v2;
            p.x0 = {{Rational(0), c}, {v, Rational(0), v}};
            p.y0 = {{Rational(0), c}, {one, Rational(0), v2}};
            p.x0_shift = {{Rational(0), c * v}, {one, Rational(0), v4}};
            break;
        }
        case 'B': {
            const Rational c = -(v + 1) * (one - v) * (one - v);
            p.x0 = {{Rational(0), c}, {v, -(v + v2), v2}};
            p.y0 = {{Rational(0), c}, {one, -(v + v2), v3}};
            p.x0_shift = {{Rational(0), c * v}, {one, -(v2 + v3), v5}};
            break;
        }
        case 'C': {
            const Rational c = (v + 1) * (v - 1) * (v - 1);
            const Rational w = v2 - v + 1;
            p.x0 = {{Rational(0), c}, {v * w, v * (v + 1), v}};
            p.y0 = {{Rational(0), c}, {w, v2 + v, v2}};
            p.x0_shift = {{Rational(0), c * v}, {w, v3 + v2, v4}};
            break;
        }
        case 'D': {
            const Rational c = (v - 1) * (v - 1) * (v + 1) * (v + 1);
            p.x0 = {{Rational(0), c}, {v2, Rational(2) * v2, v2}};
            p.y0 = {{Rational(0), c}, {v, v + v3, v3}};
            p.x0_shift = {{Rational(0), c}, {one, Rational(2) * v2, v4}};
            break;
        }
        case 'E': {
            const Rational c = (v - 1) * (v - 1) * (v + 1) * (v + 1);
            const Rational w = v4 - v2 + 1;
            p.x0 = {{Rational(0), c}, {v * w, Rational(2) * v2, v}};
            p.y0 = {{Rational(0), c}, {w, v3 + v, v2}};
            p.x0_shift = {{Rational(0), c * v}, {w, Rational(2) * v3, v4}};
            break;
        }
        default:
            throw std::invalid_argument("generic_spec: unknown model");
    }
    return p;
}

// Rational uniformizations of K(x, y, 1/2) = 0 for B, C, D, E.
ParamSpec half_spec_rational(char model) {
    const Rational one(1), two(2), half(1, 2);
    ParamSpec p;
    switch (model) {
        case 'B':
            p.x0 = {{Rational(0), Rational(0), Rational(-1)}, {two, one}};
            p.y0 = {{Rational(0), Rational(0), Rational(-1)}, {two, Rational(3), one}};
            p.x0_shift = {{Rational(0), Rational(0), Rational(-1)}, {two, Rational(5), Rational(3)}};
            p.sigma = {{Rational(0), one}, {one, one}};
            break;
        case 'C':
            p.x0 = {{Rational(0), Rational(0), Rational(-1)}, {two, Rational(-1), half}};
            p.y0 = {{Rational(0), Rational(0), Rational(-1)}, {two, one, half}};
            p.x0_shift = {{Rational(0), Rational(0), Rational(-1)}, {two, Rational(3), Rational(3, 2)}};
            p.sigma = {{Rational(0), one}, {one, one}};
            break;
        case 'D':
            p.x0 = {{Rational(0), Rational(0), Rational(-4)}, {one, Rational(-2), one}};
            p.y0 = {{Rational(0), Rational(0), Rational(4)}, {Rational(-1), Rational(0), one}};
            p.x0_shift = {{Rational(0), Rational(0), Rational(-4)}, {one, two, one}};
            p.sigma = {{Rational(0), one}, {one, two}};
            break;
        case 'E':
            p.x0 = {{Rational(0), Rational(0), Rational(-1)}, {one, Rational(0), one}};
            p.y0 = {{Rational(0), Rational(0), Rational(-1)}, {one, one, one}};
            p.x0_shift = {{Rational(0), Rational(0), Rational(-1)}, {one, two, two}};
            p.sigma = {{Rational(0), one}, {one, one}};
            break;
        default:
            throw std::invalid_argument("half_spec_rational: model has no rational uniformization at t = 1/2");
    }
    return p;
}

}  // namespace

template <typename S>
TruncSeries<S> kernel_residual_series(const ModelSpec& m, const Rational& t, const TruncSeries<S>& x,
                                      const TruncSeries<S>& y) {
    const LaurentPoly k = kernel_poly(m, t);
    TruncSeries<S> acc(x.var(), std::min(x.order(), y.order()));
    for (const auto& [key, c] : k.terms()) {
        auto term = x.pow(static_cast<unsigned long>(key.first)) * y.pow(static_cast<unsigned long>(key.second));
        acc += from_rational<S>(c) * term;
    }
    return acc;
}

template <typename S>
KernelParam<S> build_param(const ModelSpec& m, Regime regime, const Rational& v, std::size_t order) {
    if (order < 4) throw std::invalid_argument("build_param: order >= 4 required");
    auto assemble = [&](const Rational& vv, const Rational& t, const ParamSpec& spec) {
        return KernelParam<S>{m.letter(), regime,
                              vv,         t,
                              expand<S>(spec.x0, order),    expand<S>(spec.x0_shift, order),
                              expand<S>(spec.y0, order),    expand<S>(spec.sigma, order)};
    };
    auto make = [&]() -> KernelParam<S> {
        if (regime == Regime::generic_v) {
            if (!(Rational(0) < v && v < Rational(1)))
                throw std::invalid_argument("build_param: generic regime needs v in (0,1)");
            return assemble(v, v / (Rational(1) + v * v), generic_spec(m.letter(), v));
        }
        if (m.letter() == 'A') {
            if constexpr (std::is_same_v<S, GaussianRational>) {
                // Factor ix - iy + xy = 0 gives x = y/(1-iy), the second
                // factor x = y/(1+iy); shift sigma(s) = s/(1+2is).
                const GaussianRational one(1), im = GaussianRational::i();
                return KernelParam<GaussianRational>{
                    m.letter(), regime, Rational(1), Rational(1, 2),
                    rational_series<GaussianRational>('s', order, {GaussianRational(0), one}, {one, -im}),
                    rational_series<GaussianRational>('s', order, {GaussianRational(0), one}, {one, im}),
                    TruncSeries<GaussianRational>::identity('s', order),
                    rational_series<GaussianRational>('s', order, {GaussianRational(0), one},
                                                      {one, GaussianRational(Rational(0), Rational(2))})};
            } else {
                throw std::invalid_argument("build_param: model A at v = 1 lives over the Gaussian rationals");
            }
        }
        return assemble(Rational(1), Rational(1, 2), half_spec_rational(m.letter()));
    };
    KernelParam<S> p = make();

    for (const TruncSeries<S>* f : {&p.x0, &p.x0_shift, &p.y0, &p.sigma})
        if (!is_zero(f->coeff(0)))
            throw std::logic_error("build_param: a parametrization series has a nonzero constant term");
    if (!kernel_residual_series(m, p.t, p.x0, p.y0).is_zero())
        throw std::logic_error("build_param: K(x0, y0) residual is nonzero (transcription bug)");
    if (!kernel_residual_series(m, p.t, p.x0_shift, p.y0).is_zero())
        throw std::logic_error("build_param: K(x0_shift, y0) residual is nonzero (transcription bug)");
    if (!(p.x0.compose(p.sigma) - p.x0_shift).is_zero())
        throw std::logic_error("build_param: x0_shift != x0 o sigma (transcription bug)");
    return p;
}

template <typename S>
TruncSeries<S> difference_residual(const KernelParam<S>& p, const std::vector<Rational>& q_section) {
    const S t = from_rational<S>(p.t);
    const auto g = t * (p.x0 * p.x0 * substitute_section(q_section, p.x0));
    const auto g_shift = t * (p.x0_shift * p.x0_shift * substitute_section(q_section, p.x0_shift));
    const auto res = g - g_shift - (p.x0 - p.x0_shift) * p.y0;
    // a section of L coefficients pins the substituted series mod s^L only;
    // coefficients beyond that are masked, never guessed
    return res.truncated(std::min(res.order(), q_section.size()));
}

TruncSeries<GaussianRational> model_a_half_symmetric_residual(const std::vector<Rational>& q_section,
                                                              std::size_t order) {
    using G = GaussianRational;
    const G one(1), im = G::i();
    const auto tau = rational_series<G>('s', order, {G(0), one}, {one, im});
    const auto s = TruncSeries<G>::identity('s', order);
    const auto g1 = G(Rational(1, 2)) * (s * s * substitute_section(q_section, s));
    const auto res = g1.compose(tau) + g1 - s * tau;
    return res.truncated(std::min(res.order(), q_section.size()));
}

bool BivariateResidual::is_zero() const {
    for (const auto& row : rows)
        for (const auto& c : row)
            if (!c.is_zero()) return false;
    return true;
}

std::optional<std::pair<int, int>> BivariateResidual::first_nonzero() const {
    for (std::size_t d = 0; d < rows.size(); ++d)
        for (std::size_t i = 0; i < rows[d].size(); ++i)
            if (!rows[d][i].is_zero()) return std::make_pair(static_cast<int>(i), static_cast<int>(d - i));
    return std::nullopt;
}

BivariateResidual kernel_equation_residual(const ModelSpec& m, const Rational& t, int order) {
    const QTruncation q(m, t, order);
    const auto qx = q.section_x();
    const auto qy = q.section_y();
    const LaurentPoly kp = kernel_poly(m, t);

    BivariateResidual res;
    res.degree_checked = order + 2;  // K has total degree >= 2, so these rows are complete
    res.rows.resize(static_cast<std::size_t>(res.degree_checked) + 1);
    for (int d = 0; d <= res.degree_checked; ++d) {
        auto& row = res.rows[static_cast<std::size_t>(d)];
        row.assign(static_cast<std::size_t>(d) + 1, Rational(0));
        for (int a = 0; a <= d; ++a) {
            const int b = d - a;
            Rational acc(0);
            for (const auto& [key, c] : kp.terms()) {
                const int i = a - key.first, j = b - key.second;
                if (i < 0 || j < 0 || i + j > order) continue;
                acc += c * q.coeff(i, j);
            }
            if (a == 1 && b == 1) acc -= Rational(1);
            if (b == 0 && a >= 2) acc += t * qx[static_cast<std::size_t>(a - 2)];
            if (a == 0 && b >= 2) acc += t * qy[static_cast<std::size_t>(b - 2)];
            row[static_cast<std::size_t>(a)] = std::move(acc);
        }
    }
    return res;
}

TruncSeries<Rational> w_equation_residual(const std::vector<Rational>& qd_section, std::size_t order) {
    const Rational one(1), two(2), half(1, 2);
    TruncSeries<Rational> w('s', order);
    for (std::size_t n = 0; 2 * n + 2 < order && n < qd_section.size(); ++n) {
        Rational c = half * qd_section[n];
        w.set_coeff(2 * n + 2, n % 2 == 0 ? c : -c);  // (x^2/2) Q_D(-x^2, 0, 1/2)
    }
    const auto shift = rational_series<Rational>('s', order, {Rational(0), one}, {one, one});  // x/(x+1)
    const auto inv_sq = rational_series<Rational>('s', order, {one}, {one, two, one});         // 1/(x+1)^2
    const auto rhs = rational_series<Rational>('s', order, {Rational(0), Rational(0), Rational(0), two, one},
                                               {one, Rational(3), Rational(3), one});  // x^3(x+2)/(x+1)^3
    const auto res = w - inv_sq * w.compose(shift) - rhs;
    // qd_section of L terms determines W only mod x^{2L+2}
    return res.truncated(std::min(res.order(), 2 * qd_section.size() + 2));
}

TruncSeries<Rational> f_equation_residual(const std::vector<Rational>& qb_section, std::size_t order) {
    const Rational one(1), two(2);
    TruncSeries<Rational> f('s', order, std::vector<Rational>(qb_section.begin(), qb_section.end()));
    const auto g_plus = rational_series<Rational>('s', order, {Rational(0), Rational(0), Rational(-2)}, {one, one});
    const auto g_minus = rational_series<Rational>('s', order, {Rational(0), Rational(0), Rational(-2)}, {one, Rational(-1)});
    const auto w_plus = rational_series<Rational>('s', order, {one}, {one, two, one});            // 1/(s+1)^2
    const auto w_minus = rational_series<Rational>('s', order, {one}, {one, Rational(-2), one});  // 1/(1-s)^2
    const auto rhs = rational_series<Rational>('s', order, {two}, {one, Rational(0), Rational(-1)});  // 2/(1-s^2)
    const auto res = w_plus * f.compose(g_plus) + w_minus * f.compose(g_minus) - rhs;
    // the inner substitutions have valuation 2: L coefficients reach s^{2L}
    return res.truncated(std::min(res.order(), 2 * qb_section.size()));
}

template KernelParam<Rational> build_param<Rational>(const ModelSpec&, Regime, const Rational&, std::size_t);
template KernelParam<GaussianRational> build_param<GaussianRational>(const ModelSpec&, Regime, const Rational&,
                                                                     std::size_t);
template TruncSeries<Rational> kernel_residual_series<Rational>(const ModelSpec&, const Rational&,
                                                                const TruncSeries<Rational>&,
                                                                const TruncSeries<Rational>&);
template TruncSeries<GaussianRational> kernel_residual_series<GaussianRational>(const ModelSpec&, const Rational&,
                                                                                const TruncSeries<GaussianRational>&,
                                                                                const TruncSeries<GaussianRational>&);
template TruncSeries<Rational> difference_residual<Rational>(const KernelParam<Rational>&,
                                                             const std::vector<Rational>&);
template TruncSeries<GaussianRational> difference_residual<GaussianRational>(const KernelParam<GaussianRational>&,
                                                                             const std::vector<Rational>&);

}  // namespace singwalk
