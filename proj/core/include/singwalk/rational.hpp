#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace singwalk {

/// Arbitrary-precision integer (walk counts overflow 64 bits around n = 28).
using Integer = mpz_class;

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer pow(const Integer& base, unsigned long e);

/// Exact rational scalar. Invariant: lowest terms, positive denominator.
///
/// Serializes as "p/q", or "p" when q = 1; parsing also accepts decimal
/// literals such as "0.51" (converted exactly).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den) { assign(num, den); }
    Rational(long num, long den) { assign(Integer(num), Integer(den)); }

    static Rational from_string(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational inverse() const;
    Rational abs() const;
    /// Integral power; e may be negative when the value is nonzero.
    Rational pow(long e) const;

    double to_double() const { return q_.get_d(); }
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return wrap(-q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    static Rational wrap(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }
    void assign(const Integer& num, const Integer& den);

    mpq_class q_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace singwalk
