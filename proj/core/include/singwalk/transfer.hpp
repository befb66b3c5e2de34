#pragma once

#include "singwalk/matrix.hpp"
#include "singwalk/model.hpp"
#include "singwalk/rational.hpp"
#include "singwalk/segments.hpp"
#include "singwalk/series.hpp"

#include <vector>

namespace singwalk {

/// Jump matrices moving the occupation vector of one antidiagonal segment
/// to the next reachable one:
///   A_m ((m-2) x m): the (1,1) step, index a -> a+1, two segments ahead;
///   D_m ((m-1) x m): the (0,1) step, index a -> a+1, one segment ahead;
///   B_m ((m-1) x m): the (0,1) and (1,0) steps, index a -> {a, a+1}.
enum class JumpKind { A, B, D };

Matrix<Rational> jump_matrix(JumpKind kind, unsigned m);

/// Ordered compositions of k into parts 1 and 2 (there are Fibonacci-many).
/// Part sizes are the forward-jump spans available to models C and E.
std::vector<std::vector<int>> compositions_one_two(int k);

/// Endpoint generating-function vectors by transfer products: entry idx of
/// row k is sum_n #walks{(0,0) -> (k-idx, idx)} t^n, evaluated exactly at
/// rational t. Valid whenever t is not a pole of any F_m involved; every
/// |t| <= 1/2 qualifies (the poles all exceed 1/2 in modulus).
///
/// Rows are built in one left-to-right sweep, so asking for row k costs the
/// same as asking for all rows up to k.
std::vector<std::vector<Rational>> endpoint_vectors(const ModelSpec& m, int k_max, const Rational& t);
std::vector<Rational> endpoint_vector(const ModelSpec& m, int k, const Rational& t);

/// Same sweep with formal t: entry idx of row k is a truncated t-series
/// whose n-th coefficient is counts(k-idx, idx, n).
std::vector<std::vector<TruncSeries<Rational>>> endpoint_vectors_formal(const ModelSpec& m, int k_max,
                                                                        std::size_t order);
std::vector<TruncSeries<Rational>> endpoint_vector_formal(const ModelSpec& m, int k, std::size_t order);

/// Literal composition sum for models C and E (exponentially many terms);
/// reference path used to validate the sweep reorganization.
std::vector<Rational> endpoint_vector_composition_sum(const ModelSpec& m, int k, const Rational& t);

/// Exact coefficients of Q(x, y, t) on the triangle i+j <= k_max.
/// Any rational |t| <= 1/2 is accepted; t = 1/2 routes through the
/// integer-friendly specialized F matrices.
class QTruncation {
public:
    QTruncation(const ModelSpec& m, const Rational& t, int k_max);

    const ModelSpec& model() const { return *model_; }
    const Rational& t() const { return t_; }
    int k_max() const { return k_max_; }

    /// Coefficient of x^i y^j; zero when i + j > k_max is never asked for.
    const Rational& coeff(int i, int j) const;

    /// Row k: entry idx corresponds to x^{k-idx} y^{idx}.
    const std::vector<Rational>& row(int k) const { return rows_[static_cast<std::size_t>(k)]; }

    /// Coefficients of the section Q(x, 0, t), degrees 0 .. k_max.
    std::vector<Rational> section_x() const;
    /// Coefficients of the section Q(0, y, t).
    std::vector<Rational> section_y() const;

private:
    const ModelSpec* model_;
    Rational t_;
    int k_max_;
    std::vector<std::vector<Rational>> rows_;
};

inline QTruncation q_half(const ModelSpec& m, int k_max) { return QTruncation(m, Rational(1, 2), k_max); }

/// Two-term recurrence linking consecutive endpoint rows of model A,
/// checked as an identity between vectors of q-series under t = q/(1+q^2):
///   (t y^2 - y + t) D_{2k}(y)
///     = t q^2 (y^{2k+2}+1)/(q^{2k+2}+1) D_{2k-2}(q) - t y^2 D_{2k-2}(y).
/// Returns true iff all coefficients agree up to the stated q-order.
bool row_recurrence_check(int k, std::size_t order);

/// Same check on caller-supplied rows (entry idx of d2k is the t-series of
/// endpoint (2k-idx, idx)); exposed so tests can perturb one coefficient
/// and watch the identity fail.
bool row_recurrence_holds(const std::vector<TruncSeries<Rational>>& d2k,
                           const std::vector<TruncSeries<Rational>>& d2km2, int k, std::size_t order);

}  // namespace singwalk
