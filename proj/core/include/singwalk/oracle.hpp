#pragma once

#include "singwalk/model.hpp"
#include "singwalk/rational.hpp"
#include "singwalk/series.hpp"

#include <vector>

namespace singwalk {

/// Brute-force dynamic-programming enumeration: counts(i, j, n) is the
/// number of n-step walks from the origin to (i, j) that never leave the
/// quadrant. This is the independent ground truth every faster route is
/// checked against.
///
/// Layer n only reaches i + j <= 2n; each layer is stored as a triangle.
class CountTable {
public:
    CountTable(const ModelSpec& model, int n_max);

    const ModelSpec& model() const { return *model_; }
    int n_max() const { return n_max_; }

    /// Zero outside the stored range (counts truly vanish there).
    const Integer& count(int i, int j, int n) const;

    /// Sum over all endpoints at length n.
    Integer total(int n) const;

    /// counts(i, j, n) for n = 0 .. n_max.
    std::vector<Integer> endpoint_counts(int i, int j) const;

private:
    const ModelSpec* model_;
    int n_max_;
    // layers_[n] is the triangle {(i,j): i+j <= 2n}, flattened by
    // antidiagonals: cell (i,j) sits at d(d+1)/2 + i with d = i+j.
    std::vector<std::vector<Integer>> layers_;
};

CountTable count_walks(const ModelSpec& m, int n_max);

/// Truncated t-expansion per endpoint: rows[k][idx] is the series of the
/// endpoint (k - idx, idx), with integer coefficients counts(k-idx, idx, n).
/// Rows run over k = 0 .. min(2*n_max, k_max).
std::vector<std::vector<TruncSeries<Rational>>> q_formal_t(const CountTable& table, int k_max);

/// Weighted walk sums: every path contributes the product of its step
/// weights beta * alpha1^dx * alpha2^dy. Cell (i,j,n) therefore equals
/// alpha1^i alpha2^j beta^n * counts(i,j,n).
class WeightedTable {
public:
    WeightedTable(const ModelSpec& model, Rational alpha1, Rational alpha2, Rational beta, int n_max);

    const Rational& weight(int i, int j, int n) const;
    int n_max() const { return n_max_; }

private:
    const ModelSpec* model_;
    int n_max_;
    std::vector<std::vector<Rational>> layers_;
};

WeightedTable weighted_counts(const ModelSpec& m, const Rational& alpha1, const Rational& alpha2,
                              const Rational& beta, int n_max);

}  // namespace singwalk
