#pragma once

#include "singwalk/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace singwalk {

/// One lattice step (dx, dy), each component in {-1, 0, 1}.
struct Step {
    int dx;
    int dy;
    friend bool operator==(const Step& a, const Step& b) { return a.dx == b.dx && a.dy == b.dy; }
};

/// One of the five singular quarter-plane step sets:
///
///   A = {NW, NE, SE}        B = {NW, N, E, SE}      C = {NW, N, NE, E, SE}
///   D = {NW, N, SE}         E = {NW, N, NE, SE}
///
/// Every step satisfies dx + dy in {0, 1, 2}: the antidiagonal moves NW/SE
/// keep i+j fixed, the others advance it, so a walk never returns to a
/// previous antidiagonal (in particular it never revisits the origin).
class ModelSpec {
public:
    static const ModelSpec& get(char letter);  // 'A'..'E'; throws std::invalid_argument otherwise
    static const std::vector<ModelSpec>& all();

    char letter() const { return letter_; }
    const std::vector<Step>& steps() const { return steps_; }
    int step_count() const { return static_cast<int>(steps_.size()); }

    /// A, B and C are symmetric with respect to the first diagonal.
    bool diagonally_symmetric() const { return letter_ == 'A' || letter_ == 'B' || letter_ == 'C'; }

    /// Model A moves between antidiagonals only by (1,1): both the segment
    /// index and the walk length have forced parities.
    bool parity_constrained() const { return letter_ == 'A'; }

private:
    ModelSpec(char letter, std::vector<Step> steps) : letter_(letter), steps_(std::move(steps)) {}

    char letter_;
    std::vector<Step> steps_;
};

/// Sparse bivariate Laurent polynomial with exact rational coefficients,
/// keyed by (x-exponent, y-exponent); exponents may be negative.
class LaurentPoly {
public:
    using Key = std::pair<int, int>;

    LaurentPoly() = default;

    void add_term(int ex, int ey, const Rational& c);
    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coeff(int ex, int ey) const;

    int min_x_degree() const;
    int max_x_degree() const;
    int min_y_degree() const;
    int max_y_degree() const;

    /// Evaluation over any commutative ring with division available for
    /// the negative exponents.
    template <typename S>
    S eval(const S& x, const S& y) const {
        S acc{};
        for (const auto& [key, c] : terms_) {
            S term = scalar_power(x, key.first) * scalar_power(y, key.second);
            acc += embed_rational<S>(c) * term;
        }
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
    template <typename S>
    static S scalar_power(const S& x, int e) {
        S acc = S(1);
        S base = e >= 0 ? x : S(1) / x;
        int k = e >= 0 ? e : -e;
        for (int i = 0; i < k; ++i) acc *= base;
        return acc;
    }
    template <typename S>
    static S embed_rational(const Rational& c) {
        return S(c);
    }

    std::map<Key, Rational> terms_;
};

template <>
inline Rational LaurentPoly::embed_rational<Rational>(const Rational& c) { return c; }

/// Step inventory chi(x, y) = sum over steps of x^dx y^dy.
LaurentPoly characteristic_poly(const ModelSpec& m);

/// Kernel xy(1 - t*chi(x,y)), expanded; all exponents lie in 0..2.
LaurentPoly kernel_poly(const ModelSpec& m, const Rational& t);

}  // namespace singwalk
