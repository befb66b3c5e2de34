#include "singwalk/verify.hpp"

#include "singwalk/funceq.hpp"
#include "singwalk/green.hpp"
#include "singwalk/model.hpp"
#include "singwalk/oracle.hpp"
#include "singwalk/segments.hpp"
#include "singwalk/sequences.hpp"
#include "singwalk/transfer.hpp"

#include <cmath>
#include <sstream>

namespace singwalk {

namespace {

CheckResult ok(std::string name) { return {std::move(name), true, ""}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

template <typename S>
CheckResult from_series_residual(std::string name, const TruncSeries<S>& residual) {
    if (residual.is_zero()) return ok(std::move(name));
    std::ostringstream os;
    os << "first nonzero coefficient at index " << *residual.first_nonzero();
    return fail(std::move(name), os.str());
}

std::string model_name(const ModelSpec& m) { return std::string("model ") + m.letter(); }

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::vector<CheckResult> suite_oracle(int k_max, std::size_t order) {
    std::vector<CheckResult> out;
    const int n_max = static_cast<int>(order) - 1;
    for (const ModelSpec& m : ModelSpec::all()) {
        const CountTable table = count_walks(m, n_max);
        const auto rows = endpoint_vectors_formal(m, k_max, order);
        {
            std::string bad;
            for (int k = 0; k <= k_max && bad.empty(); ++k)
                for (int idx = 0; idx <= k && bad.empty(); ++idx)
                    for (int n = 0; n <= n_max && bad.empty(); ++n) {
                        const Rational& got = rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx)]
                                                  .coeff(static_cast<std::size_t>(n));
                        if (got != Rational(table.count(k - idx, idx, n))) {
                            std::ostringstream os;
                            os << "endpoint (" << k - idx << "," << idx << ") length " << n;
                            bad = os.str();
                        }
                    }
            out.push_back(bad.empty() ? ok(model_name(m) + ": transfer product equals DP counts")
                                      : fail(model_name(m) + ": transfer product equals DP counts", bad));
        }
        if (m.diagonally_symmetric()) {
            bool sym = true;
            for (int k = 0; k <= k_max && sym; ++k)
                for (int idx = 0; idx <= k && sym; ++idx)
                    sym = rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx)] ==
                          rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(k - idx)];
            out.push_back(sym ? ok(model_name(m) + ": diagonal symmetry of endpoint rows")
                              : fail(model_name(m) + ": diagonal symmetry of endpoint rows", ""));
        }
        {
            bool bounded = true;
            Integer power(1);
            const Integer card(m.step_count());
            for (int n = 0; n <= n_max && bounded; ++n) {
                bounded = table.total(n) <= power;
                power *= card;
            }
            out.push_back(bounded ? ok(model_name(m) + ": total counts bounded by #S^n")
                                  : fail(model_name(m) + ": total counts bounded by #S^n", ""));
        }
    }
    {
        const ModelSpec& a = ModelSpec::get('A');
        const CountTable table = count_walks(a, n_max);
        bool parity = true;
        for (int n = 0; n <= n_max && parity; ++n)
            for (int d = 0; d <= 2 * n && parity; ++d) {
                if (d % 2 == 0) continue;
                for (int i = 0; i <= d && parity; ++i) parity = sgn(table.count(i, d - i, n)) == 0;
            }
        const auto rows = endpoint_vectors_formal(a, k_max, order);
        for (int k = 1; k <= k_max && parity; k += 2)
            for (const auto& f : rows[static_cast<std::size_t>(k)]) parity = parity && f.is_zero();
        out.push_back(parity ? ok("model A: odd antidiagonals are unreachable")
                             : fail("model A: odd antidiagonals are unreachable", ""));
    }
    for (char letter : {'C', 'E'}) {
        const ModelSpec& m = ModelSpec::get(letter);
        bool agree = true;
        std::string bad;
        for (const Rational& t : {Rational(1, 3), Rational(1, 2)}) {
            const auto sweep = endpoint_vectors(m, std::min(k_max, 8), t);
            for (int k = 0; k <= std::min(k_max, 8) && agree; ++k) {
                const auto literal = endpoint_vector_composition_sum(m, k, t);
                agree = literal == sweep[static_cast<std::size_t>(k)];
                if (!agree) bad = "k = " + std::to_string(k) + ", t = " + t.to_string();
            }
        }
        out.push_back(agree ? ok(model_name(m) + ": composition sum equals merged sweep")
                            : fail(model_name(m) + ": composition sum equals merged sweep", bad));
    }
    {
        bool agree = true;
        const Rational a1(2, 3), a2(5, 7), b(3, 2);
        for (const ModelSpec& m : ModelSpec::all()) {
            const int wn = std::min(n_max, 6);
            const WeightedTable w = weighted_counts(m, a1, a2, b, wn);
            const CountTable plain = count_walks(m, wn);
            for (int n = 0; n <= wn && agree; ++n)
                for (int d = 0; d <= 2 * n && agree; ++d)
                    for (int i = 0; i <= d && agree; ++i)
                        agree = w.weight(i, d - i, n) ==
                                a1.pow(i) * a2.pow(d - i) * b.pow(n) * Rational(plain.count(i, d - i, n));
        }
        out.push_back(agree ? ok("weighted DP equals rescaled plain counts")
                            : fail("weighted DP equals rescaled plain counts", ""));
    }
    return out;
}

std::vector<CheckResult> suite_segments(unsigned n_consistency, unsigned n_det, const std::vector<Rational>& ts) {
    std::vector<CheckResult> out;
    {
        std::string bad;
        for (const Rational& t : ts) {
            for (unsigned n = 1; n <= n_consistency && bad.empty(); ++n) {
                const auto closed = t.is_zero() ? f_matrix_by_inversion(n, t) : f_matrix_closed_form(n, t);
                if (!(closed == f_matrix_by_inversion(n, t)))
                    bad = "n = " + std::to_string(n) + ", t = " + t.to_string();
            }
            if (!bad.empty()) break;
        }
        out.push_back(bad.empty() ? ok("closed-form F_n equals exact inversion")
                                  : fail("closed-form F_n equals exact inversion", bad));
    }
    {
        std::string bad;
        for (const Rational& t : ts) {
            if (t.is_zero()) continue;
            for (unsigned n = 1; n <= n_det && bad.empty(); ++n)
                if (tridiagonal_kernel(n, t).determinant() != f_inverse_determinant(n, t))
                    bad = "n = " + std::to_string(n) + ", t = " + t.to_string();
            if (!bad.empty()) break;
        }
        out.push_back(bad.empty() ? ok("det(F_n^-1) = (-t)^n U_n(-1/2t)")
                                  : fail("det(F_n^-1) = (-t)^n U_n(-1/2t)", bad));
    }
    {
        std::string bad;
        for (unsigned n = 1; n <= 12 && bad.empty(); ++n) {
            const auto half = f_matrix_half(n);
            if (!(half == f_matrix_by_inversion(n, Rational(1, 2)))) {
                bad = "n = " + std::to_string(n);
                break;
            }
            // every entry in (1/(n+1)) * N, symmetric, persymmetric
            for (unsigned i = 0; i < n && bad.empty(); ++i)
                for (unsigned j = 0; j < n && bad.empty(); ++j) {
                    const Rational scaled = half.at(i, j) * Rational(static_cast<long>(n) + 1);
                    if (!scaled.is_integer() || scaled.sign() <= 0) bad = "lattice at n = " + std::to_string(n);
                    if (!(half.at(i, j) == half.at(n - 1 - j, n - 1 - i)))
                        bad = "persymmetry at n = " + std::to_string(n);
                }
        }
        out.push_back(bad.empty() ? ok("F_n at t = 1/2: specialized pattern, lattice and symmetry")
                                  : fail("F_n at t = 1/2: specialized pattern, lattice and symmetry", bad));
    }
    {
        // Neumann expansion via explicit powers of the adjacency matrix
        std::string bad;
        const std::size_t order = 30;
        for (unsigned k = 1; k <= 10 && bad.empty(); ++k) {
            std::vector<Matrix<Rational>> powers;
            powers.push_back(Matrix<Rational>::identity(k + 1));
            Matrix<Rational> adj(k + 1, k + 1);
            for (unsigned i = 0; i < k; ++i) {
                adj.at(i, i + 1) = Rational(1);
                adj.at(i + 1, i) = Rational(1);
            }
            for (std::size_t d = 1; d < order; ++d) powers.push_back(powers.back() * adj);
            for (unsigned i = 0; i <= k && bad.empty(); ++i)
                for (unsigned j = i; j <= k && bad.empty(); ++j) {
                    const auto w = w_series(k, i, j, order);
                    for (std::size_t d = 0; d < order; ++d)
                        if (w.coeff(d) != powers[d].at(i, j)) {
                            bad = "k = " + std::to_string(k);
                            break;
                        }
                }
        }
        out.push_back(bad.empty() ? ok("segment DP equals Neumann expansion of F_{k+1}")
                                  : fail("segment DP equals Neumann expansion of F_{k+1}", bad));
    }
    {
        // numeric pole/residue fit from 200 series coefficients
        std::string bad;
        for (unsigned k : {1u, 2u, 3u, 5u}) {
            for (unsigned i = 0; i <= k && bad.empty(); ++i)
                for (unsigned j = i; j <= k && bad.empty(); ++j) {
                    const auto pr = pole_and_residue(k, i, j);
                    const std::size_t big = 200;
                    const auto w = w_series(k, i, j, big + 3);
                    // pick the parity class that carries coefficients
                    std::size_t n = big;
                    if (w.coeff(n).is_zero()) --n;
                    if (w.coeff(n).is_zero() || w.coeff(n - 2).is_zero()) {
                        bad = "no usable coefficients";
                        break;
                    }
                    const double pole_fit = std::sqrt(w.coeff(n - 2).to_double() / w.coeff(n).to_double());
                    const double res_fit = w.coeff(n).to_double() * std::pow(pr.pole, static_cast<double>(n) + 1) / 2.0;
                    if (std::abs(pole_fit - pr.pole) > 1e-9 * pr.pole ||
                        std::abs(res_fit - pr.residue) > 1e-9 * pr.residue || pr.residue <= 0.0)
                        bad = "k=" + std::to_string(k) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
                }
            if (!bad.empty()) break;
        }
        out.push_back(bad.empty() ? ok("pole and residue match the numeric fit (1e-9 relative)")
                                  : fail("pole and residue match the numeric fit (1e-9 relative)", bad));
    }
    {
        bool mono = true;
        double prev = 2.0;
        for (unsigned k = 1; k <= 40 && mono; ++k) {
            const double p = pole_and_residue(k, 0, 0).pole;
            mono = p < prev && p > 0.5;
            prev = p;
        }
        out.push_back(mono ? ok("pole sequence decreases strictly toward 1/2")
                           : fail("pole sequence decreases strictly toward 1/2", ""));
    }
    return out;
}

std::vector<CheckResult> suite_sequences(unsigned terms, int recurrence_n_max, std::size_t ode_order) {
    std::vector<CheckResult> out;
    auto expect_prefix = [&](std::string name, const std::vector<Rational>& got,
                             const std::vector<Rational>& want) {
        for (std::size_t i = 0; i < want.size(); ++i)
            if (i >= got.size() || got[i] != want[i])
                return fail(std::move(name), "index " + std::to_string(i));
        return ok(std::move(name));
    };

    out.push_back(expect_prefix("tangent numbers 1, 2, 16, 272, 7936, 353792", tangent_numbers(5).values,
                                {Rational(1), Rational(2), Rational(16), Rational(272), Rational(7936),
                                 Rational(353792)}));
    out.push_back(expect_prefix(
        "Bernoulli numbers 1, -1/2, 1/6, 0, -1/30, 0, 1/42; B_12 = -691/2730", bernoulli(12).values,
        {Rational(1), Rational(-1, 2), Rational(1, 6), Rational(0), Rational(-1, 30), Rational(0), Rational(1, 42),
         Rational(0), Rational(-1, 30), Rational(0), Rational(5, 66), Rational(0), Rational(-691, 2730)}));
    out.push_back(expect_prefix("Euler secant numbers 1, 1, 5, 61, 1385", euler_secant(4).values,
                                {Rational(1), Rational(1), Rational(5), Rational(61), Rational(1385)}));
    out.push_back(expect_prefix("median Genocchi numbers 1, 2, 8, 56, 608, 9440", median_genocchi(5).values,
                                {Rational(1), Rational(2), Rational(8), Rational(56), Rational(608),
                                 Rational(9440)}));
    out.push_back(expect_prefix("Dellac sequence 1, 1, 2, 7, 38, 295, 3098", dellac(6).values,
                                {Rational(1), Rational(1), Rational(2), Rational(7), Rational(38), Rational(295),
                                 Rational(3098)}));

    const unsigned n = terms;
    {
        const auto closed = qa_closed_form(n);
        const auto section = q_half(ModelSpec::get('A'), static_cast<int>(n)).section_x();
        out.push_back(expect_prefix("Q_A(x,0,1/2): closed form equals transfer product", section, closed));
        out.push_back(expect_prefix(
            "Q_A(x,0,1/2) = 1, 0, 1/2, 0, 1, 0, 17/4, 0, 31, 0, 691/2", closed,
            {Rational(1), Rational(0), Rational(1, 2), Rational(0), Rational(1), Rational(0), Rational(17, 4),
             Rational(0), Rational(31), Rational(0), Rational(691, 2)}));
    }
    {
        const auto closed = qd_closed_form(n);
        const auto section = q_half(ModelSpec::get('D'), static_cast<int>(n)).section_x();
        out.push_back(expect_prefix("Q_D(x,0,1/2): closed form equals transfer product", section, closed));
        out.push_back(expect_prefix(
            "Q_D(x,0,1/2) = 1, 1/3, 1/3, 3/5, 5/3, 691/105, 35, 3617/15", closed,
            {Rational(1), Rational(1, 3), Rational(1, 3), Rational(3, 5), Rational(5, 3), Rational(691, 105),
             Rational(35), Rational(3617, 15)}));
    }
    {
        const auto closed = qb_closed_form(n);
        const auto section = q_half(ModelSpec::get('B'), static_cast<int>(n)).section_x();
        out.push_back(expect_prefix("Q_B(x,0,1/2): closed form equals transfer product", section, closed));
    }
    {
        const QTruncation plus(ModelSpec::get('A'), Rational(1, 2), 20);
        const QTruncation minus(ModelSpec::get('A'), Rational(-1, 2), 20);
        out.push_back(plus.section_x() == minus.section_x()
                          ? ok("Q_A(x,0,1/2) = Q_A(x,0,-1/2)")
                          : fail("Q_A(x,0,1/2) = Q_A(x,0,-1/2)", ""));
    }
    {
        const auto closed = qb_negative_half(20);
        const auto section = QTruncation(ModelSpec::get('B'), Rational(-1, 2), 20).section_x();
        out.push_back(expect_prefix("Q_B(x,0,-1/2) = -2 sum B_{n+1} x^n", section, closed));
    }
    for (const auto& r : verify_recurrences(static_cast<unsigned>(recurrence_n_max))) {
        std::string name = r.name;
        if (!r.note.empty()) name += " [" + r.note + "]";
        out.push_back(r.holds ? ok(std::move(name)) : fail(std::move(name), "no valid range"));
    }
    for (const auto& r : verify_odes(ode_order))
        out.push_back(r.holds ? ok(r.name) : fail(r.name, "first nonzero coefficient at index " +
                                                              std::to_string(r.smallest_valid_n)));
    return out;
}

std::vector<CheckResult> suite_funceq(int kernel_order, std::size_t diff_order, int recurrence_k_max,
                                      std::size_t recurrence_order, std::size_t w_order, std::size_t f_order,
                                      const std::vector<Rational>& vs, char only_model) {
    std::vector<CheckResult> out;
    for (const ModelSpec& m : ModelSpec::all()) {
        if (only_model && m.letter() != only_model) continue;
        for (const Rational& t : {Rational(1, 3), Rational(1, 2)}) {
            const auto res = kernel_equation_residual(m, t, kernel_order);
            std::string name = model_name(m) + ": kernel equation residual at t = " + t.to_string();
            if (res.is_zero()) {
                out.push_back(ok(std::move(name)));
            } else {
                const auto [i, j] = *res.first_nonzero();
                out.push_back(fail(std::move(name),
                                   "first nonzero at x^" + std::to_string(i) + " y^" + std::to_string(j)));
            }
        }
        for (const Rational& v : vs) {
            const auto p = build_param<Rational>(m, Regime::generic_v, v, diff_order);
            const auto section = QTruncation(m, p.t, static_cast<int>(diff_order)).section_x();
            out.push_back(from_series_residual(
                model_name(m) + ": difference equation at v = " + v.to_string(), difference_residual(p, section)));
        }
        {
            const auto section = QTruncation(m, Rational(1, 2), static_cast<int>(diff_order)).section_x();
            std::string name = model_name(m) + ": difference equation at v = 1";
            if (m.letter() == 'B' || m.letter() == 'D') {
                const auto p = build_param<Rational>(m, Regime::v_equals_one, Rational(1), diff_order);
                out.push_back(from_series_residual(std::move(name), difference_residual(p, section)));
            } else {
                const auto p = build_param<GaussianRational>(m, Regime::v_equals_one, Rational(1), diff_order);
                out.push_back(from_series_residual(std::move(name), difference_residual(p, section)));
            }
        }
    }
    if (!only_model || only_model == 'A') {
        const auto section = QTruncation(ModelSpec::get('A'), Rational(1, 2), static_cast<int>(diff_order)).section_x();
        out.push_back(from_series_residual("model A: one-fixed-point equation G(tau) + G = s tau at t = 1/2",
                                           model_a_half_symmetric_residual(section, diff_order)));
        {
            std::string bad;
            for (int k = 1; k <= recurrence_k_max && bad.empty(); ++k)
                if (!row_recurrence_check(k, recurrence_order)) bad = "k = " + std::to_string(k);
            out.push_back(bad.empty() ? ok("model A: two-term row recurrence as q-series (k <= " +
                                           std::to_string(recurrence_k_max) + ")")
                                      : fail("model A: two-term row recurrence as q-series", bad));
        }
        {
            const auto rows = endpoint_vectors_formal(ModelSpec::get('A'), 4, recurrence_order);
            auto perturbed = rows[2];
            perturbed[1].set_coeff(3, perturbed[1].coeff(3) + Rational(1));
            out.push_back(!row_recurrence_holds(rows[4], perturbed, 2, recurrence_order)
                              ? ok("model A: row recurrence rejects a perturbed coefficient")
                              : fail("model A: row recurrence rejects a perturbed coefficient", ""));
        }
    }
    if (!only_model || only_model == 'D') {
        auto section = QTruncation(ModelSpec::get('D'), Rational(1, 2), static_cast<int>(w_order)).section_x();
        out.push_back(from_series_residual("model D: W(x) - W(x/(x+1))/(x+1)^2 = x^3(x+2)/(x+1)^3",
                                           w_equation_residual(section, w_order)));
        section[1] -= Rational(2);  // shifts the x^4 coefficient of W by exactly +1
        out.push_back(!w_equation_residual(section, w_order).is_zero()
                          ? ok("model D: W equation rejects a perturbed coefficient")
                          : fail("model D: W equation rejects a perturbed coefficient", ""));
    }
    if (!only_model || only_model == 'B') {
        auto section = QTruncation(ModelSpec::get('B'), Rational(1, 2), static_cast<int>(f_order)).section_x();
        out.push_back(from_series_residual("model B: f(-2s^2/(s+1))/(s+1)^2 + f(-2s^2/(1-s))/(1-s)^2 = 2/(1-s^2)",
                                           f_equation_residual(section, f_order)));
        section[3] += Rational(1, 7);
        out.push_back(!f_equation_residual(section, f_order).is_zero()
                          ? ok("model B: f equation rejects a perturbed coefficient")
                          : fail("model B: f equation rejects a perturbed coefficient", ""));
    }
    return out;
}

std::vector<CheckResult> suite_green(int cramer_pairs, int cramer_n_max, std::uint64_t seed) {
    std::vector<CheckResult> out;
    SplitMix64 rng(seed);
    for (const ModelSpec& m : ModelSpec::all()) {
        bool pass = true;
        std::string bad;
        for (int p = 0; p < cramer_pairs && pass; ++p) {
            const Rational alpha(static_cast<long>(rng.below(9) + 1), static_cast<long>(rng.below(9) + 1));
            const Rational beta(static_cast<long>(rng.below(9) + 1), static_cast<long>(rng.below(9) + 1));
            pass = cramer_check(m, alpha, beta, cramer_n_max);
            if (!pass) bad = "alpha = " + alpha.to_string() + ", beta = " + beta.to_string();
        }
        out.push_back(pass ? ok(model_name(m) + ": Cramer transform identity")
                           : fail(model_name(m) + ": Cramer transform identity", bad));
    }
    {
        bool pass = true;
        for (const ModelSpec& m : ModelSpec::all())
            for (long num = 1; num <= 12 && pass; ++num) {
                const Rational a(num, 7);
                pass = characteristic_poly(m).eval(a, a) > Rational(2);
            }
        out.push_back(pass ? ok("chi(alpha, alpha) > 2 for every model (no Cramer tilt reaches t = 1/2)")
                           : fail("chi(alpha, alpha) > 2 for every model", ""));
    }
    {
        bool pass = true;
        std::string bad;
        for (const ModelSpec& m : ModelSpec::all()) {
            const CountTable table = count_walks(m, 24);
            const Rational bound = Rational(m.step_count()) / Rational(2);
            for (int d = 0; d <= 2 && pass; ++d)
                for (int i = 0; i <= d && pass; ++i) {
                    Rational prev(-1);
                    for (int h : {4, 8, 12, 16, 20, 24}) {
                        const auto g = green_exact_partial(m, i, d - i, bound, h, &table);
                        if (g.partial < prev || g.gap.sign() < 0) {
                            pass = false;
                            bad = model_name(m) + " endpoint (" + std::to_string(i) + "," + std::to_string(d - i) + ")";
                            break;
                        }
                        prev = g.partial;
                    }
                }
        }
        out.push_back(pass ? ok("Green partial sums increase toward the exact t = 1/2 coefficients")
                           : fail("Green partial sums increase toward the exact t = 1/2 coefficients", bad));
    }
    {
        // the limiting tilt alpha = beta = eps: after dividing by eps^{i+j},
        // the tilted Green partial sums at chi(eps,eps)/2 agree termwise with
        // the plain ones at #S/2, for every sampled eps
        bool pass = true;
        const int horizon = 10;
        for (const ModelSpec& m : ModelSpec::all()) {
            const CountTable table = count_walks(m, horizon);
            for (const Rational& eps : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
                const Rational chi = characteristic_poly(m).eval(eps, eps);
                const WeightedTable tilted = weighted_counts(m, eps, eps, chi.inverse(), horizon);
                for (const auto& [i, j] : {std::pair<int, int>{1, 1}, {2, 0}, {0, 2}}) {
                    Rational tilted_partial(0), power(1);
                    for (int n = 0; n <= horizon; ++n) {
                        tilted_partial += tilted.weight(i, j, n) * power;
                        power *= chi / Rational(2);
                    }
                    tilted_partial /= eps.pow(i + j);
                    const auto plain =
                        green_exact_partial(m, i, j, Rational(m.step_count()) / Rational(2), horizon, &table);
                    pass = pass && tilted_partial == plain.partial;
                }
            }
        }
        out.push_back(pass ? ok("epsilon tilt: rescaled Green partials match the plain t = 1/2 partials")
                           : fail("epsilon tilt: rescaled Green partials match the plain t = 1/2 partials", ""));
    }
    {
        BrwConfig cfg;
        cfg.model = &ModelSpec::get('A');
        cfg.offspring = OffspringDist::from_string("1:1/2,2:1/2");
        cfg.ancestors = 20000;
        cfg.seed = seed ^ 0xb5ad4eceda1ce2a9ULL;
        const std::vector<std::pair<int, int>> targets = {{0, 0}, {1, 1}, {2, 0}};
        const auto est = brw_simulate(cfg, targets);
        bool pass = est[0].estimate == 1.0 && est[0].std_error == 0.0;
        const QTruncation q = q_half(*cfg.model, 2);
        for (std::size_t ti = 1; ti < targets.size(); ++ti) {
            const double exact = q.coeff(targets[ti].first, targets[ti].second).to_double();
            pass = pass && std::abs(est[ti].estimate - exact) <= 4.0 * est[ti].std_error;
        }
        out.push_back(pass ? ok("branching walk reproduces exact coefficients (smoke run, 4 sigma)")
                           : fail("branching walk reproduces exact coefficients (smoke run, 4 sigma)", ""));
    }
    return out;
}

}  // namespace singwalk
