#pragma once

#include "singwalk/rational.hpp"
#include "singwalk/series.hpp"

#include <string>
#include <vector>

namespace singwalk {

enum class SequenceKind { bernoulli, tangent, euler_secant, median_genocchi, dellac };

const char* sequence_kind_name(SequenceKind k);
SequenceKind sequence_kind_from_name(const std::string& name);

/// Immutable cache of one special sequence. Where the literature offers two
/// independent routes (Bernoulli: closed-form double sum vs EGF recurrence;
/// tangent: Bernoulli relation vs tan' = 1 + tan^2; median Genocchi:
/// Euler-binomial vs Bernoulli alternating sum), the generator runs both and
/// refuses to return on disagreement.
struct SequenceCache {
    SequenceKind kind;
    std::vector<Rational> values;  // values[n] = n-th term (euler_secant: E_{2n})
};

/// B_0 .. B_{n_max}, with B_1 = -1/2.
SequenceCache bernoulli(unsigned n_max);
/// T_0 .. T_{n_max} = 1, 2, 16, 272, 7936, ...
SequenceCache tangent_numbers(unsigned n_max);
/// E_0, E_2, .., E_{2 n_max} = 1, 1, 5, 61, 1385, ...
SequenceCache euler_secant(unsigned n_max);
/// M_0 .. M_{n_max} = 1, 2, 8, 56, 608, ...
SequenceCache median_genocchi(unsigned n_max);
/// M_n / 2^n = 1, 1, 2, 7, 38, 295, 3098, ... (integers)
SequenceCache dellac(unsigned n_max);

/// Closed forms for the x-sections at t = 1/2:
///   Q_A: a_{2n} = 2 (2^{2n+2}-1) (-1)^n B_{2n+2} / (n+1), odd terms vanish;
///   Q_D: d_n = 2 (2n+3) B_{2n+2} (-1)^n;
///   Q_B: b_n = M_n / 2^n.
/// Returned lists run over degrees 0 .. n_max and must match the
/// transfer-product evaluation exactly.
std::vector<Rational> qa_closed_form(unsigned n_max);
std::vector<Rational> qd_closed_form(unsigned n_max);
std::vector<Rational> qb_closed_form(unsigned n_max);

/// Q_B(x, 0, -1/2): coefficient of x^n is -2 B_{n+1}.
std::vector<Rational> qb_negative_half(unsigned n_max);

struct RecurrenceReport {
    std::string name;
    bool holds;            // over the tested range, from smallest_valid_n on
    long smallest_valid_n; // first n from which the relation holds through n_max (-1 if never)
    long first_checked_n;
    long last_checked_n;
    std::string note;
};

/// The quadratic recurrence for the Q_A coefficients, the quadratic
/// recurrence for the Q_D coefficients (reporting the smallest n at which
/// the stated identity actually starts to hold), the unbounded linear
/// recurrence for the Q_B coefficients, and Euler's quadratic recurrence
/// for the Bernoulli numbers, all verified exactly for n <= n_max.
std::vector<RecurrenceReport> verify_recurrences(unsigned n_max);

/// Residuals of the two algebraic ODEs satisfied by the factorial-rescaled
/// sections F_A(x) = sum a_n x^n/(n+1)! and F_D(x) = sum d_n x^n/(2n+3)!:
///   x^2 F_A^2 - 4x F_A' - 4 F_A + 4 = 0,
///   x  F_D^2 - 4x F_D' - 6 F_D + 1 = 0.
std::vector<RecurrenceReport> verify_odes(std::size_t order);

}  // namespace singwalk
