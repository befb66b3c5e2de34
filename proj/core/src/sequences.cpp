#include "singwalk/sequences.hpp"

#include <stdexcept>

namespace singwalk {

const char* sequence_kind_name(SequenceKind k) {
    switch (k) {
        case SequenceKind::bernoulli: return "bernoulli";
        case SequenceKind::tangent: return "tangent";
        case SequenceKind::euler_secant: return "euler_secant";
        case SequenceKind::median_genocchi: return "median_genocchi";
        case SequenceKind::dellac: return "dellac";
    }
    return "?";
}

SequenceKind sequence_kind_from_name(const std::string& name) {
    for (SequenceKind k : {SequenceKind::bernoulli, SequenceKind::tangent, SequenceKind::euler_secant,
                           SequenceKind::median_genocchi, SequenceKind::dellac})
        if (name == sequence_kind_name(k)) return k;
    throw std::invalid_argument("unknown sequence kind '" + name + "'");
}

namespace {

// EGF route: sum_{k<=n} C(n+1,k) B_k = [n=0].
std::vector<Rational> bernoulli_egf(unsigned n_max) {
    std::vector<Rational> b(n_max + 1);
    b[0] = Rational(1);
    for (unsigned n = 1; n <= n_max; ++n) {
        Rational acc(0);
        for (unsigned k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * b[k];
        b[n] = -acc / Rational(static_cast<long>(n) + 1);
    }
    return b;
}

// Closed-form route: B_n = sum_k (-1)^k C(n+1,k+1) (0^n + .. + k^n)/(k+1).
std::vector<Rational> bernoulli_closed(unsigned n_max) {
    std::vector<Rational> b(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        Rational acc(0);
        Integer power_sum(0);
        for (unsigned k = 0; k <= n; ++k) {
            power_sum += (k == 0 && n == 0) ? Integer(1) : pow(Integer(k), n);
            Rational term = Rational(binomial(n + 1, k + 1)) * Rational(power_sum, Integer(k + 1));
            acc += (k % 2 == 0) ? term : -term;
        }
        b[n] = acc;
    }
    return b;
}

// tan(x) = sum c_m x^m from tan' = 1 + tan^2: m c_m = [m=1] + sum_{a+b=m-1} c_a c_b.
std::vector<Rational> tangent_ode_coeffs(unsigned m_max) {
    std::vector<Rational> c(m_max + 1);
    if (m_max >= 1) c[1] = Rational(1);
    for (unsigned m = 3; m <= m_max; m += 2) {
        Rational acc(0);
        for (unsigned a = 1; a <= m - 2; a += 2) acc += c[a] * c[m - 1 - a];
        c[m] = acc / Rational(static_cast<long>(m));
    }
    return c;
}

Rational tangent_from_bernoulli(unsigned n, const std::vector<Rational>& b) {
    // T_n = 2^{2n+1} (2^{2n+2} - 1) (-1)^n B_{2n+2} / (n+1)
    Rational t = Rational(pow(Integer(2), 2 * n + 1)) * Rational(pow(Integer(2), 2 * n + 2) - 1) *
                 b[2 * n + 2] / Rational(static_cast<long>(n) + 1);
    return (n % 2 == 0) ? t : -t;
}

}  // namespace

SequenceCache bernoulli(unsigned n_max) {
    auto egf = bernoulli_egf(n_max);
    auto closed = bernoulli_closed(n_max);
    if (egf != closed) throw std::logic_error("bernoulli: EGF recurrence and closed form disagree");
    return {SequenceKind::bernoulli, std::move(egf)};
}

SequenceCache tangent_numbers(unsigned n_max) {
    const auto b = bernoulli(2 * n_max + 2).values;
    const auto c = tangent_ode_coeffs(2 * n_max + 1);
    std::vector<Rational> t(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        t[n] = tangent_from_bernoulli(n, b);
        const Rational via_ode = c[2 * n + 1] * Rational(factorial(2 * n + 1));
        if (t[n] != via_ode) throw std::logic_error("tangent_numbers: Bernoulli relation and tan-ODE disagree");
        if (!t[n].is_integer() || t[n].sign() <= 0) throw std::logic_error("tangent_numbers: non-integral value");
    }
    return {SequenceKind::tangent, std::move(t)};
}

SequenceCache euler_secant(unsigned n_max) {
    // sec = 1/cos; E_{2n} = (2n)! [x^{2n}] sec(x)
    const std::size_t order = 2 * static_cast<std::size_t>(n_max) + 1;
    TruncSeries<Rational> cosine('x', order);
    for (unsigned m = 0; 2 * m < order; ++m) {
        Rational c = Rational(1) / Rational(factorial(2 * m));
        cosine.set_coeff(2 * m, m % 2 == 0 ? c : -c);
    }
    const auto sec = cosine.inverse();
    std::vector<Rational> e(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        e[n] = sec.coeff(2 * n) * Rational(factorial(2 * n));
        if (!e[n].is_integer() || e[n].sign() <= 0) throw std::logic_error("euler_secant: non-integral value");
    }
    return {SequenceKind::euler_secant, std::move(e)};
}

SequenceCache median_genocchi(unsigned n_max) {
    const auto e = euler_secant(n_max + 1).values;
    const auto b = bernoulli(2 * n_max + 3).values;
    std::vector<Rational> m(n_max + 1);
    for (unsigned idx = 0; idx <= n_max; ++idx) {
        const unsigned n = idx + 1;  // M_{n-1}
        Rational via_euler(0);
        for (unsigned k = 0; k <= n; ++k)
            via_euler += Rational(binomial(n, k)) * Rational(2 * static_cast<long>(k) + 1) * e[k];
        via_euler /= Rational(pow(Integer(4), n));
        Rational via_bernoulli(0);
        for (unsigned k = 0; k <= n; ++k)
            via_bernoulli += Rational(binomial(n, k)) * Rational(pow(Integer(2), n + k + 1) - 1) * b[n + k + 1];
        via_bernoulli *= Rational(2);
        if (n % 2 == 0) via_bernoulli = -via_bernoulli;
        if (via_euler != via_bernoulli)
            throw std::logic_error("median_genocchi: Euler-binomial and Bernoulli forms disagree");
        if (!via_euler.is_integer() || via_euler.sign() <= 0)
            throw std::logic_error("median_genocchi: non-integral value");
        m[idx] = via_euler;
    }
    return {SequenceKind::median_genocchi, std::move(m)};
}

SequenceCache dellac(unsigned n_max) {
    const auto m = median_genocchi(n_max).values;
    std::vector<Rational> d(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        d[n] = m[n] / Rational(pow(Integer(2), n));
        if (!d[n].is_integer()) throw std::logic_error("dellac: M_n / 2^n is not an integer");
    }
    return {SequenceKind::dellac, std::move(d)};
}

std::vector<Rational> qa_closed_form(unsigned n_max) {
    const auto b = bernoulli(n_max + 2).values;
    std::vector<Rational> a(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n % 2 == 1) continue;  // odd coefficients vanish by parity
        const unsigned m = n / 2;
        Rational v = Rational(2) * Rational(pow(Integer(2), 2 * m + 2) - 1) * b[2 * m + 2] /
                     Rational(static_cast<long>(m) + 1);
        a[n] = (m % 2 == 0) ? v : -v;
    }
    return a;
}

std::vector<Rational> qd_closed_form(unsigned n_max) {
    const auto b = bernoulli(2 * n_max + 2).values;
    std::vector<Rational> d(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        Rational v = Rational(2) * Rational(2 * static_cast<long>(n) + 3) * b[2 * n + 2];
        d[n] = (n % 2 == 0) ? v : -v;
    }
    return d;
}

std::vector<Rational> qb_closed_form(unsigned n_max) { return dellac(n_max).values; }

std::vector<Rational> qb_negative_half(unsigned n_max) {
    const auto b = bernoulli(n_max + 1).values;
    std::vector<Rational> out(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) out[n] = Rational(-2) * b[n + 1];
    return out;
}

std::vector<RecurrenceReport> verify_recurrences(unsigned n_max) {
    std::vector<RecurrenceReport> reports;

    auto run = [&](std::string name, long first_n, long last_n, auto holds_at, std::string note) {
        RecurrenceReport r{std::move(name), true, -1, first_n, last_n, std::move(note)};
        for (long n = first_n; n <= last_n; ++n) {
            if (holds_at(n)) {
                if (r.smallest_valid_n < 0) r.smallest_valid_n = n;
            } else if (r.smallest_valid_n >= 0) {
                r.holds = false;  // a gap after the first success: genuine failure
            }
        }
        if (r.smallest_valid_n < 0) r.holds = false;
        if (r.smallest_valid_n != first_n && r.holds)
            r.note += " (holds from n = " + std::to_string(r.smallest_valid_n) + " on)";
        reports.push_back(std::move(r));
    };

    {
        const auto a = qa_closed_form(n_max + 1);
        run("Q_A quadratic: 2 a_{n+1} = sum_{l=1..n} C(n,l) a_{l-1} a_{n-l}", 0, n_max,
            [&](long n) {
                Rational rhs(0);
                for (long l = 1; l <= n; ++l)
                    rhs += Rational(binomial(n, l)) * a[static_cast<unsigned>(l - 1)] * a[static_cast<unsigned>(n - l)];
                return Rational(2) * a[static_cast<unsigned>(n + 1)] == rhs;
            },
            "empty sums count as zero");
    }
    {
        const auto d = qd_closed_form(n_max);
        run("Q_D quadratic: 4(n+2)(2n+3) d_n = sum_{l<n} C(2n+4,2l+3) d_l d_{n-1-l}", 0, n_max,
            [&](long n) {
                Rational rhs(0);
                for (long l = 0; l < n; ++l)
                    rhs += Rational(binomial(2 * n + 4, 2 * l + 3)) * d[static_cast<unsigned>(l)] *
                           d[static_cast<unsigned>(n - 1 - l)];
                return Rational(4 * (n + 2) * (2 * n + 3)) * d[static_cast<unsigned>(n)] == rhs;
            },
            "stated for all n >= 0; the n = 0 instance reads 24 = 0 and fails");
    }
    {
        const auto b = qb_closed_form(n_max);
        run("Q_B linear: sum_{l<=n} (-2)^l C(2n-l+1, l+1) b_l = 1", 0, n_max,
            [&](long n) {
                Rational acc(0);
                Rational sign(1);
                for (long l = 0; l <= n; ++l) {
                    acc += sign * Rational(binomial(2 * n - l + 1, l + 1)) * b[static_cast<unsigned>(l)];
                    sign *= Rational(-2);
                }
                return acc == Rational(1);
            },
            "");
    }
    {
        const auto b = bernoulli(2 * n_max).values;
        run("Euler quadratic: (2n+1) B_{2n} + sum_{0<i<n} C(2n,2i) B_{2i} B_{2n-2i} = 0", 2, n_max,
            [&](long n) {
                Rational acc = Rational(2 * n + 1) * b[static_cast<unsigned>(2 * n)];
                for (long i = 1; i < n; ++i)
                    acc += Rational(binomial(2 * n, 2 * i)) * b[static_cast<unsigned>(2 * i)] *
                           b[static_cast<unsigned>(2 * n - 2 * i)];
                return acc.is_zero();
            },
            "stated for n > 1");
    }
    return reports;
}

std::vector<RecurrenceReport> verify_odes(std::size_t order) {
    std::vector<RecurrenceReport> reports;
    const std::size_t work = order + 2;

    {
        const auto a = qa_closed_form(static_cast<unsigned>(work));
        TruncSeries<Rational> fa('x', work);
        for (std::size_t n = 0; n < work; ++n) fa.set_coeff(n, a[n] / Rational(factorial(n + 1)));
        const auto xfp = fa.derivative().shifted(1);  // x F'(x), order work-1
        const auto res = (fa * fa).shifted(2) - Rational(4) * xfp - Rational(4) * fa.truncated(work - 1) +
                         TruncSeries<Rational>::constant('x', work - 1, Rational(4));
        const auto t = res.truncated(order);
        reports.push_back({"F_A ODE: x^2 F^2 - 4x F' - 4F + 4 = 0", t.is_zero(),
                           t.is_zero() ? 0 : static_cast<long>(*t.first_nonzero()), 0,
                           static_cast<long>(order) - 1, ""});
    }
    {
        const auto d = qd_closed_form(static_cast<unsigned>(work));
        TruncSeries<Rational> fd('x', work);
        for (std::size_t n = 0; n < work; ++n) fd.set_coeff(n, d[n] / Rational(factorial(2 * n + 3)));
        const auto xfp = fd.derivative().shifted(1);
        const auto res = (fd * fd).shifted(1) - Rational(4) * xfp - Rational(6) * fd.truncated(work - 1) +
                         TruncSeries<Rational>::constant('x', work - 1, Rational(1));
        const auto t = res.truncated(order);
        reports.push_back({"F_D ODE: x F^2 - 4x F' - 6F + 1 = 0", t.is_zero(),
                           t.is_zero() ? 0 : static_cast<long>(*t.first_nonzero()), 0,
                           static_cast<long>(order) - 1, ""});
    }
    return reports;
}

}  // namespace singwalk
