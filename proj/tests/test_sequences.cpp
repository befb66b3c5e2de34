#include "doctest.h"

#include "singwalk/sequences.hpp"
#include "singwalk/transfer.hpp"

using namespace singwalk;

TEST_CASE("bernoulli numbers by two independent routes") {
    const auto b = bernoulli(12).values;
    CHECK(b[0] == Rational(1));
    CHECK(b[1] == Rational(-1, 2));
    CHECK(b[2] == Rational(1, 6));
    CHECK(b[3] == Rational(0));
    CHECK(b[4] == Rational(-1, 30));
    CHECK(b[5] == Rational(0));
    CHECK(b[6] == Rational(1, 42));
    CHECK(b[12] == Rational(-691, 2730));
    for (unsigned n = 3; n <= 11; n += 2) CHECK(b[n].is_zero());
}

TEST_CASE("tangent numbers") {
    const auto t = tangent_numbers(5).values;
    CHECK(t == std::vector<Rational>{Rational(1), Rational(2), Rational(16), Rational(272), Rational(7936),
                                     Rational(353792)});
}

TEST_CASE("euler secant numbers") {
    const auto e = euler_secant(5).values;
    CHECK(e == std::vector<Rational>{Rational(1), Rational(1), Rational(5), Rational(61), Rational(1385),
                                     Rational(50521)});
}

TEST_CASE("median genocchi and dellac") {
    const auto m = median_genocchi(5).values;
    CHECK(m == std::vector<Rational>{Rational(1), Rational(2), Rational(8), Rational(56), Rational(608),
                                     Rational(9440)});
    const auto d = dellac(6).values;
    CHECK(d == std::vector<Rational>{Rational(1), Rational(1), Rational(2), Rational(7), Rational(38), Rational(295),
                                     Rational(3098)});
}

TEST_CASE("closed forms reproduce the t = 1/2 sections") {
    CHECK(qa_closed_form(10) == q_half(ModelSpec::get('A'), 10).section_x());
    CHECK(qd_closed_form(8) == q_half(ModelSpec::get('D'), 8).section_x());
    CHECK(qb_closed_form(8) == q_half(ModelSpec::get('B'), 8).section_x());

    const auto d = qd_closed_form(7);
    CHECK(d == std::vector<Rational>{Rational(1), Rational(1, 3), Rational(1, 3), Rational(3, 5), Rational(5, 3),
                                     Rational(691, 105), Rational(35), Rational(3617, 15)});
}

TEST_CASE("q_b at t = -1/2") {
    const auto v = qb_negative_half(12);
    CHECK(v[0] == Rational(1));        // -2 B_1
    CHECK(v[1] == Rational(-1, 3));    // -2 B_2
    CHECK(v == QTruncation(ModelSpec::get('B'), Rational(-1, 2), 12).section_x());
}

TEST_CASE("recurrences") {
    const auto reports = verify_recurrences(16);
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) {
        INFO(r.name);
        CHECK(r.holds);
    }
    CHECK(reports[0].smallest_valid_n == 0);  // model A quadratic holds from n = 0
    CHECK(reports[1].smallest_valid_n == 1);  // model D quadratic fails only at n = 0
    CHECK(reports[2].smallest_valid_n == 0);  // model B linear
    CHECK(reports[3].smallest_valid_n == 2);  // Euler quadratic stated for n > 1
}

TEST_CASE("ode residuals vanish") {
    for (const auto& r : verify_odes(20)) {
        INFO(r.name);
        CHECK(r.holds);
    }
}

TEST_CASE("sequence kind names round trip") {
    for (SequenceKind k : {SequenceKind::bernoulli, SequenceKind::tangent, SequenceKind::euler_secant,
                           SequenceKind::median_genocchi, SequenceKind::dellac})
        CHECK(sequence_kind_from_name(sequence_kind_name(k)) == k);
    CHECK_THROWS_AS(sequence_kind_from_name("fibonacci"), std::invalid_argument);
}
