#include "doctest.h"

#include "singwalk/gaussian.hpp"
#include "singwalk/green.hpp"
#include "singwalk/series.hpp"

#include <vector>

using namespace singwalk;

namespace {

TruncSeries<Rational> make(char var, std::size_t order, std::vector<long> coeffs) {
    TruncSeries<Rational> f(var, order);
    for (std::size_t i = 0; i < coeffs.size() && i < order; ++i) f.set_coeff(i, Rational(coeffs[i]));
    return f;
}

TruncSeries<Rational> random_series(SplitMix64& rng, char var, std::size_t order) {
    TruncSeries<Rational> f(var, order);
    for (std::size_t i = 0; i < order; ++i)
        f.set_coeff(i, Rational(static_cast<long>(rng.below(19)) - 9, static_cast<long>(rng.below(7)) + 1));
    return f;
}

}  // namespace

TEST_CASE("products truncate at the smaller order") {
    const auto a = make('s', 3, {1, 1});
    const auto b = make('s', 3, {1, -1});
    CHECK(a * b == make('s', 3, {1, 0, -1}));  // (1+s)(1-s) = 1 - s^2

    const auto f = make('s', 5, {3, 1, 4, 1, 5});
    CHECK(f * TruncSeries<Rational>::one('s', 5) == f);

    auto geom = TruncSeries<Rational>('s', 6);
    for (std::size_t i = 0; i < 6; ++i) geom.set_coeff(i, Rational(1));
    CHECK(geom * make('s', 6, {1, -1}) == TruncSeries<Rational>::one('s', 6));

    CHECK((make('s', 7, {1, 2}) * make('s', 4, {1})).order() == 4);
    CHECK_THROWS_AS(make('s', 4, {1}) * make('t', 4, {1}), std::invalid_argument);
}

TEST_CASE("inverse is a two-sided inverse up to the order") {
    const auto inv = make('s', 5, {1, -1}).inverse();
    CHECK(inv == make('s', 5, {1, 1, 1, 1, 1}));

    CHECK(TruncSeries<Rational>::constant('s', 4, Rational(5, 3)).inverse() ==
          TruncSeries<Rational>::constant('s', 4, Rational(3, 5)));

    CHECK(make('t', 6, {1, 0, -2}).inverse() == make('t', 6, {1, 0, 2, 0, 4, 0}));

    CHECK_THROWS_AS(make('s', 4, {0, 1}).inverse(), std::domain_error);

    SplitMix64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        auto f = random_series(rng, 's', 9);
        f.set_coeff(0, Rational(static_cast<long>(rng.below(5)) + 1));
        CHECK(f * f.inverse() == TruncSeries<Rational>::one('s', 9));
        CHECK(f.inverse() * f == TruncSeries<Rational>::one('s', 9));
    }
}

TEST_CASE("composition substitutes series with zero constant term") {
    const auto f = make('s', 6, {3, 1, 4, 1, 5, 9});
    CHECK(f.compose(TruncSeries<Rational>::identity('s', 6)) == f);

    // 1/(1-x) composed with s^2 at order 5
    const auto geom_inv = make('x', 5, {1, -1}).inverse();
    const auto composed = geom_inv.compose(TruncSeries<Rational>::monomial('s', 5, 2, Rational(1)));
    CHECK(composed == make('s', 5, {1, 0, 1, 0, 1}));
    CHECK(composed.var() == 's');

    CHECK_THROWS_AS(f.compose(make('s', 6, {1, 1})), std::invalid_argument);
}

TEST_CASE("iterating the homography x/(1+ix) n times gives x/(1+nix)") {
    using G = GaussianRational;
    const std::size_t order = 12;
    const G one(1), im = G::i();
    const auto tau = rational_series<G>('x', order, {G(0), one}, {one, im});
    auto iterate = tau;
    for (int n = 2; n <= 5; ++n) {
        iterate = iterate.compose(tau);
        const auto direct = rational_series<G>('x', order, {G(0), one}, {one, G(Rational(0), Rational(n))});
        CHECK(iterate == direct);
    }
}

TEST_CASE("ring axioms hold exactly on random series") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 8; ++trial) {
        const auto a = random_series(rng, 's', 8);
        const auto b = random_series(rng, 's', 8);
        const auto c = random_series(rng, 's', 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("composition is associative and obeys the chain rule") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_series(rng, 's', 10);
        auto g = random_series(rng, 's', 10);
        auto h = random_series(rng, 's', 10);
        g.set_coeff(0, Rational(0));
        h.set_coeff(0, Rational(0));
        CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
        // (f o g)' = (f' o g) * g'
        CHECK(f.compose(g).derivative() == f.derivative().compose(g.truncated(9)) * g.derivative());
    }
}

TEST_CASE("derivative obeys the product rule and drops the order") {
    SplitMix64 rng(11);
    const auto f = random_series(rng, 's', 10);
    const auto g = random_series(rng, 's', 10);
    CHECK((f * g).derivative() == f.derivative() * g.truncated(9) + f.truncated(9) * g.derivative());
    CHECK(f.derivative().order() == 9);
}

TEST_CASE("shift and monomial helpers") {
    const auto f = make('s', 4, {1, 2, 3, 4});
    CHECK(f.shifted(2) == make('s', 4, {0, 0, 1, 2}));
    CHECK(TruncSeries<Rational>::monomial('s', 5, 7, Rational(3)).is_zero());
    CHECK(*make('s', 5, {0, 0, 0, 2}).first_nonzero() == 3);
}
