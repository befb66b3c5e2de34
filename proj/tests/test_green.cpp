#include "doctest.h"

#include "singwalk/green.hpp"
#include "singwalk/transfer.hpp"

#include <cmath>

using namespace singwalk;

TEST_CASE("green partial sums") {
    const ModelSpec& a = ModelSpec::get('A');
    // (0,0): only n = 0 contributes, for any admissible t
    for (const Rational& t : {Rational(0), Rational(1), Rational(3, 2)}) {
        const auto g = green_exact_partial(a, 0, 0, t, 10);
        CHECK(g.partial == Rational(1));
    }
    // t = 0 is the indicator of the origin
    CHECK(green_exact_partial(a, 1, 1, Rational(0), 10).partial == Rational(0));

    // (1,1) at the critical argument: partial sums rise toward 1
    const CountTable table = count_walks(a, 41);
    Rational prev(-1);
    for (int h : {1, 5, 9, 21, 41}) {
        const auto g = green_exact_partial(a, 1, 1, Rational(3, 2), h, &table);
        CHECK(g.exact_available);
        CHECK(g.exact == Rational(1));
        CHECK(g.partial > prev);
        CHECK(g.gap.sign() > 0);
        prev = g.partial;
    }
    CHECK(green_exact_partial(a, 1, 1, Rational(3, 2), 41, &table).gap.to_double() < 1e-6);

    CHECK_THROWS_AS(green_exact_partial(a, 1, 1, Rational(2), 10), std::invalid_argument);
}

TEST_CASE("cramer transform identity") {
    for (const ModelSpec& m : ModelSpec::all()) {
        CHECK(cramer_check(m, Rational(1), Rational(1), 4));  // reduces to P = P
        CHECK(cramer_check(m, Rational(1, 2), Rational(1, 2), 6));
        CHECK(cramer_check(m, Rational(2, 3), Rational(5, 4), 5));
    }
    CHECK_THROWS_AS(cramer_check(ModelSpec::get('A'), Rational(0), Rational(1), 4), std::invalid_argument);
}

TEST_CASE("offspring distributions") {
    const auto d = OffspringDist::from_string("1:1/2,2:1/2");
    CHECK(d.mean() == Rational(3, 2));
    CHECK(d.total_mass() == Rational(1));
    CHECK_THROWS(OffspringDist::from_string("nonsense"));

    const auto skewed = OffspringDist::from_string("0:1/4,1:1/4,3:1/2");
    CHECK(skewed.mean() == Rational(7, 4));
}

TEST_CASE("branching walk visits the origin exactly once") {
    BrwConfig cfg;
    cfg.model = &ModelSpec::get('A');
    cfg.offspring = OffspringDist::from_string("1:1/2,2:1/2");
    cfg.ancestors = 2000;
    cfg.seed = 12345;
    const auto est = brw_simulate(cfg, {{0, 0}});
    CHECK(est[0].estimate == 1.0);
    CHECK(est[0].std_error == 0.0);
    CHECK(est[0].censored_lineages == 0);
}

TEST_CASE("branching walk estimates the t = 1/2 coefficients") {
    BrwConfig cfg;
    cfg.model = &ModelSpec::get('A');
    cfg.offspring = OffspringDist::from_string("1:1/2,2:1/2");
    cfg.ancestors = 50000;
    cfg.seed = 99;
    const auto est = brw_simulate(cfg, {{1, 1}, {2, 0}});
    const QTruncation q = q_half(*cfg.model, 2);
    CHECK(std::abs(est[0].estimate - q.coeff(1, 1).to_double()) <= 4.0 * est[0].std_error);
    CHECK(std::abs(est[1].estimate - q.coeff(2, 0).to_double()) <= 4.0 * est[1].std_error);

    // identical results regardless of the thread count
    BrwConfig threaded = cfg;
    threaded.threads = 4;
    const auto est4 = brw_simulate(threaded, {{1, 1}, {2, 0}});
    CHECK(est4[0].estimate == est[0].estimate);
    CHECK(est4[1].estimate == est[1].estimate);
    CHECK(est4[0].std_error == est[0].std_error);
}

TEST_CASE("branching walk rejects a mismatched offspring mean") {
    BrwConfig cfg;
    cfg.model = &ModelSpec::get('B');  // needs mean 2
    cfg.offspring = OffspringDist::from_string("1:1/2,2:1/2");
    CHECK_THROWS_AS(brw_simulate(cfg, {{0, 0}}), std::invalid_argument);
    cfg.offspring = OffspringDist::from_string("2:1");
    CHECK_NOTHROW(brw_simulate(cfg, {{0, 0}}));
}

TEST_CASE("substreams are independent of enumeration") {
    auto a = SplitMix64::substream(7, 0);
    auto b = SplitMix64::substream(7, 1);
    CHECK(a.next() != b.next());
    auto c = SplitMix64::substream(7, 0);
    CHECK(c.next() == SplitMix64::substream(7, 0).next());
}
