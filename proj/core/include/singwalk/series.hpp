#pragma once

#include "singwalk/rational.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace singwalk {

/// Truncated univariate power series over an exact scalar ring.
///
/// A series of order N carries the coefficients of s^0 .. s^{N-1}; it
/// represents its value modulo s^N, and every operation returns the
/// largest order that the inputs determine (the minimum of the operand
/// orders). The variable tag ('t', 's', 'x', 'q') is part of the value;
/// mixing tags is a usage error, not a silent coercion.
///
/// Values are immutable in practice (all operations are const and return
/// fresh series), so sharing across threads needs no coordination.
template <typename S>
class TruncSeries {
public:
    TruncSeries(char var, std::size_t order) : var_(var), coeffs_(order) {}

    TruncSeries(char var, std::size_t order, std::vector<S> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
        coeffs_.resize(order);
    }

    static TruncSeries zero(char var, std::size_t order) { return TruncSeries(var, order); }

    static TruncSeries constant(char var, std::size_t order, S value) {
        TruncSeries f(var, order);
        if (order == 0) throw std::invalid_argument("TruncSeries: order must be positive");
        f.coeffs_[0] = std::move(value);
        return f;
    }

    static TruncSeries one(char var, std::size_t order) { return constant(var, order, S(1)); }

    /// The series "s" itself.
    static TruncSeries identity(char var, std::size_t order) { return monomial(var, order, 1, S(1)); }

    static TruncSeries monomial(char var, std::size_t order, std::size_t degree, S value) {
        TruncSeries f(var, order);
        if (degree < order) f.coeffs_[degree] = std::move(value);
        return f;
    }

    char var() const { return var_; }
    std::size_t order() const { return coeffs_.size(); }

    const S& coeff(std::size_t i) const {
        if (i >= coeffs_.size()) throw std::out_of_range("TruncSeries: coefficient beyond truncation order");
        return coeffs_[i];
    }
    void set_coeff(std::size_t i, S value) {
        if (i >= coeffs_.size()) throw std::out_of_range("TruncSeries: coefficient beyond truncation order");
        coeffs_[i] = std::move(value);
    }
    const std::vector<S>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!singwalk::is_zero(c)) return false;
        return true;
    }

    /// Index of the first nonzero known coefficient, if any.
    std::optional<std::size_t> first_nonzero() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!singwalk::is_zero(coeffs_[i])) return i;
        return std::nullopt;
    }

    TruncSeries truncated(std::size_t new_order) const {
        if (new_order > order()) throw std::invalid_argument("TruncSeries: cannot extend truncation order");
        TruncSeries f(var_, new_order);
        for (std::size_t i = 0; i < new_order; ++i) f.coeffs_[i] = coeffs_[i];
        return f;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_var(b);
        TruncSeries r(a.var_, std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_var(b);
        TruncSeries r(a.var_, std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r(var_, order());
        for (std::size_t i = 0; i < order(); ++i) r.coeffs_[i] = -coeffs_[i];
        return r;
    }

    /// Cauchy product, truncated at the smaller operand order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_var(b);
        TruncSeries r(a.var_, std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order() && i < a.order(); ++i) {
            if (singwalk::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j < r.order() && j < b.order(); ++j) {
                if (singwalk::is_zero(b.coeffs_[j])) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend TruncSeries operator*(const S& c, const TruncSeries& f) {
        TruncSeries r(f.var_, f.order());
        for (std::size_t i = 0; i < f.order(); ++i) r.coeffs_[i] = c * f.coeffs_[i];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& f, const S& c) { return c * f; }

    TruncSeries& operator+=(const TruncSeries& o) { *this = *this + o; return *this; }
    TruncSeries& operator-=(const TruncSeries& o) { *this = *this - o; return *this; }
    TruncSeries& operator*=(const TruncSeries& o) { *this = *this * o; return *this; }

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const {
        if (order() == 0 || singwalk::is_zero(coeffs_[0]))
            throw std::domain_error("TruncSeries: inverse needs a nonzero constant term");
        TruncSeries r(var_, order());
        const S c0inv = S(1) / coeffs_[0];
        r.coeffs_[0] = c0inv;
        for (std::size_t n = 1; n < order(); ++n) {
            S acc{};
            for (std::size_t k = 1; k <= n; ++k) {
                if (singwalk::is_zero(coeffs_[k])) continue;
                acc += coeffs_[k] * r.coeffs_[n - k];
            }
            r.coeffs_[n] = -(acc * c0inv);
        }
        return r;
    }

    /// Substitution f(g); g must have zero constant term so every
    /// coefficient of the result is a finite sum. The result lives in g's
    /// variable (substitution rebinds the indeterminate).
    TruncSeries compose(const TruncSeries& g) const {
        if (g.order() == 0 || !singwalk::is_zero(g.coeffs_[0]))
            throw std::invalid_argument("TruncSeries: composition needs a zero constant term in the inner series");
        const std::size_t n = std::min(order(), g.order());
        TruncSeries r(g.var_, n);
        // Horner: r = (..(c_{m-1} g + c_{m-2}) g + ..) g + c_0
        for (std::size_t idx = std::min(order(), n); idx-- > 0;) {
            r = r * g.truncated(n);
            if (!singwalk::is_zero(coeffs_[idx])) r.coeffs_[0] += coeffs_[idx];
        }
        return r;
    }

    /// Termwise derivative; drops the order by one.
    TruncSeries derivative() const {
        if (order() == 0) throw std::domain_error("TruncSeries: derivative of an order-0 series");
        TruncSeries r(var_, order() - 1);
        for (std::size_t i = 0; i + 1 < order(); ++i) r.coeffs_[i] = coeffs_[i + 1] * S(static_cast<long>(i + 1));
        return r;
    }

    /// Multiplication by var^k, truncated back to this order.
    TruncSeries shifted(std::size_t k) const {
        TruncSeries r(var_, order());
        for (std::size_t i = 0; i + k < order(); ++i) r.coeffs_[i + k] = coeffs_[i];
        return r;
    }

    TruncSeries pow(unsigned long e) const {
        TruncSeries acc = one(var_, order());
        TruncSeries sq = *this;
        while (e > 0) {
            if (e & 1UL) acc = acc * sq;
            e >>= 1UL;
            if (e > 0) sq = sq * sq;
        }
        return acc;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const TruncSeries& f) {
        bool printed = false;
        for (std::size_t i = 0; i < f.order(); ++i) {
            if (singwalk::is_zero(f.coeffs_[i])) continue;
            if (printed) os << " + ";
            os << "(" << f.coeffs_[i] << ")";
            if (i > 0) os << "*" << f.var_ << "^" << i;
            printed = true;
        }
        if (!printed) os << "0";
        os << " + O(" << f.var_ << "^" << f.order() << ")";
        return os;
    }

private:
    void require_same_var(const TruncSeries& o) const {
        if (var_ != o.var_)
            throw std::invalid_argument(std::string("TruncSeries: variable mismatch ('") + var_ + "' vs '" + o.var_ + "')");
    }

    char var_;
    std::vector<S> coeffs_;
};

template <typename S>
bool is_zero(const TruncSeries<S>& f) {
    return f.is_zero();
}

/// Expansion of num(s)/den(s); den must have an invertible constant term.
template <typename S>
TruncSeries<S> rational_series(char var, std::size_t order, std::vector<S> num, std::vector<S> den) {
    TruncSeries<S> n(var, order, std::move(num));
    TruncSeries<S> d(var, order, std::move(den));
    return n * d.inverse();
}

}  // namespace singwalk
