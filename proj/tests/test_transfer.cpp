#include "doctest.h"

#include "singwalk/oracle.hpp"
#include "singwalk/transfer.hpp"

using namespace singwalk;

TEST_CASE("jump matrices move unit vectors forward") {
    const auto a5 = jump_matrix(JumpKind::A, 5);
    CHECK(a5.rows() == 3);
    CHECK(a5.cols() == 5);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 5; ++j) CHECK(a5.at(i, j) == (j == i + 1 ? Rational(1) : Rational(0)));

    const auto d4 = jump_matrix(JumpKind::D, 4);
    CHECK(d4.rows() == 3);
    for (unsigned i = 0; i < 3; ++i) CHECK(d4.at(i, i + 1) == Rational(1));

    const auto b4 = jump_matrix(JumpKind::B, 4);
    for (unsigned i = 0; i < 3; ++i) {
        CHECK(b4.at(i, i) == Rational(1));
        CHECK(b4.at(i, i + 1) == Rational(1));
    }
}

TEST_CASE("compositions of 1s and 2s are Fibonacci-many") {
    int prev = 1, cur = 1;  // counts for k = 0, 1
    CHECK(compositions_one_two(0).size() == 1);
    CHECK(compositions_one_two(1).size() == 1);
    for (int k = 2; k <= 10; ++k) {
        const int next = prev + cur;
        prev = cur;
        cur = next;
        const auto comps = compositions_one_two(k);
        CHECK(static_cast<int>(comps.size()) == cur);
        for (const auto& c : comps) {
            int sum = 0;
            for (int part : c) {
                CHECK((part == 1 || part == 2));
                sum += part;
            }
            CHECK(sum == k);
        }
    }
}

TEST_CASE("model A endpoint vectors") {
    // k = 2: t * (t, 1, t) / (1 - 2t^2); at t = 1/3 that is (1/7, 3/7, 1/7)
    const auto v = endpoint_vector(ModelSpec::get('A'), 2, Rational(1, 3));
    CHECK(v == std::vector<Rational>{Rational(1, 7), Rational(3, 7), Rational(1, 7)});

    const auto h = endpoint_vector(ModelSpec::get('A'), 2, Rational(1, 2));
    CHECK(h == std::vector<Rational>{Rational(1, 2), Rational(1), Rational(1, 2)});

    for (int k : {1, 3, 5}) {
        const auto z = endpoint_vector(ModelSpec::get('A'), k, Rational(1, 2));
        for (const auto& x : z) CHECK(x.is_zero());
    }
}

TEST_CASE("formal endpoint vectors match the DP oracle") {
    const std::size_t order = 12;
    for (const ModelSpec& m : ModelSpec::all()) {
        const CountTable table = count_walks(m, static_cast<int>(order) - 1);
        const auto rows = endpoint_vectors_formal(m, 6, order);
        for (int k = 0; k <= 6; ++k)
            for (int idx = 0; idx <= k; ++idx)
                for (std::size_t n = 0; n < order; ++n)
                    CHECK(rows[k][idx].coeff(n) == Rational(table.count(k - idx, idx, static_cast<int>(n))));
    }
}

TEST_CASE("model D single northern step") {
    const auto row = endpoint_vector_formal(ModelSpec::get('D'), 1, 4);
    CHECK(row[1].coeff(1) == Rational(1));  // (0,1) reached by N in one step
    CHECK(row[1].coeff(2) == Rational(0));
    CHECK(row[1].coeff(3) == Rational(1));
    CHECK(row[0].coeff(1) == Rational(0));  // (1,0) needs N then SE
    CHECK(row[0].coeff(2) == Rational(1));
    for (int k = 1; k <= 4; ++k)
        for (const auto& f : endpoint_vector_formal(ModelSpec::get('D'), k, 3))
            CHECK(f.coeff(0) == Rational(0));  // no zero-length walk leaves the origin
}

TEST_CASE("composition sum agrees with the merged sweep") {
    for (char letter : {'C', 'E'}) {
        const ModelSpec& m = ModelSpec::get(letter);
        for (const Rational& t : {Rational(1, 3), Rational(1, 2)}) {
            const auto sweep = endpoint_vectors(m, 8, t);
            for (int k = 0; k <= 8; ++k) CHECK(endpoint_vector_composition_sum(m, k, t) == sweep[k]);
        }
    }
    CHECK_THROWS_AS(endpoint_vector_composition_sum(ModelSpec::get('A'), 2, Rational(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("diagonally symmetric models have palindromic rows") {
    for (char letter : {'A', 'B', 'C'}) {
        const auto rows = endpoint_vectors(ModelSpec::get(letter), 8, Rational(1, 2));
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i) CHECK(row[i] == row[row.size() - 1 - i]);
    }
}

TEST_CASE("evaluated rows solve their defining tridiagonal systems") {
    // row k satisfies V (I - t M) = t * (jump image of the previous rows):
    // checks the F-matrix route against the system it claims to invert,
    // for every model and several t including the boundary values
    for (const ModelSpec& m : ModelSpec::all()) {
        for (const Rational& t : {Rational(1, 3), Rational(1, 2), Rational(-1, 2)}) {
            const auto rows = endpoint_vectors(m, 8, t);
            for (int k = 1; k <= 8; ++k) {
                const auto& v = rows[k];
                std::vector<Rational> lhs(v.size());
                for (std::size_t a = 0; a < v.size(); ++a) {
                    lhs[a] = v[a];
                    if (a > 0) lhs[a] -= t * v[a - 1];
                    if (a + 1 < v.size()) lhs[a] -= t * v[a + 1];
                }
                std::vector<Rational> pre(v.size());
                auto feed = [&](char kind, int from_k) {
                    if (from_k < 0) return;
                    const auto& src = rows[from_k];
                    for (std::size_t a = 0; a < src.size(); ++a) {
                        if (kind == 'B') pre[a] += t * src[a];
                        pre[a + 1] += t * src[a];
                    }
                };
                switch (m.letter()) {
                    case 'A': if (k % 2 == 0) feed('A', k - 2); break;
                    case 'B': feed('B', k - 1); break;
                    case 'D': feed('D', k - 1); break;
                    case 'C': feed('B', k - 1); feed('A', k - 2); break;
                    case 'E': feed('D', k - 1); feed('A', k - 2); break;
                }
                CHECK(lhs == pre);
            }
        }
    }
}

TEST_CASE("q truncation tables") {
    const QTruncation qa = q_half(ModelSpec::get('A'), 10);
    CHECK(qa.coeff(0, 0) == Rational(1));
    CHECK(qa.section_x() ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(1, 2), Rational(0), Rational(1), Rational(0),
                                Rational(17, 4), Rational(0), Rational(31), Rational(0), Rational(691, 2)});

    const QTruncation qb = q_half(ModelSpec::get('B'), 6);
    CHECK(qb.section_x() == std::vector<Rational>{Rational(1), Rational(1), Rational(2), Rational(7), Rational(38),
                                                  Rational(295), Rational(3098)});

    CHECK_THROWS_AS(QTruncation(ModelSpec::get('A'), Rational(51, 100), 4), std::domain_error);

    // negative t works and keeps exactness
    const QTruncation qm(ModelSpec::get('A'), Rational(-1, 2), 10);
    CHECK(qm.section_x() == qa.section_x());

    // the diagonal symmetry descends to the sections
    for (char letter : {'A', 'B', 'C'}) {
        const QTruncation q = q_half(ModelSpec::get(letter), 8);
        CHECK(q.section_x() == q.section_y());
    }

    // denominators at t = 1/2 divide lcm(2..k+2)
    const QTruncation qc = q_half(ModelSpec::get('C'), 9);
    for (int k = 0; k <= 9; ++k) {
        Integer allowed(1);
        for (int mm = 2; mm <= k + 2; ++mm) mpz_lcm(allowed.get_mpz_t(), allowed.get_mpz_t(), Integer(mm).get_mpz_t());
        for (const auto& c : qc.row(k)) {
            CHECK(c.sign() >= 0);
            CHECK((Rational(allowed) * c).is_integer());
        }
    }
}

TEST_CASE("endpoint evaluation refuses poles") {
    // F_2 is singular at t = 1: model B cannot cross segment 1 there
    CHECK_THROWS_AS(endpoint_vector(ModelSpec::get('B'), 1, Rational(1)), std::domain_error);
}

TEST_CASE("two-term row recurrence for model A") {
    CHECK(row_recurrence_check(1, 12));
    CHECK(row_recurrence_check(2, 16));
    CHECK(row_recurrence_check(4, 20));

    const auto rows = endpoint_vectors_formal(ModelSpec::get('A'), 4, 16);
    CHECK(row_recurrence_holds(rows[4], rows[2], 2, 16));
    auto perturbed = rows[2];
    perturbed[0].set_coeff(4, perturbed[0].coeff(4) + Rational(1));
    CHECK(!row_recurrence_holds(rows[4], perturbed, 2, 16));
}
