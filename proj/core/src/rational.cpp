#include "singwalk/rational.hpp"

#include <ostream>

namespace singwalk {

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    if (k > n) return Integer(0);
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

void Rational::assign(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num);
    q_ /= mpq_class(den);  // mpq division canonicalizes (lowest terms, positive denominator)
}

Rational Rational::from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    std::string s(text);
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // Exact decimal: sign * (intpart.fracpart) = (intpart*10^d + fracpart) / 10^d
        bool neg = false;
        std::string body = s;
        if (body[0] == '+' || body[0] == '-') {
            neg = body[0] == '-';
            body = body.substr(1);
            dot -= 1;
        }
        std::string ip = body.substr(0, dot);
        std::string fp = body.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (fp.empty()) fp = "0";
        for (char c : ip + fp)
            if (c < '0' || c > '9') throw std::invalid_argument("Rational: bad decimal literal '" + s + "'");
        Integer num(ip + fp, 10);
        Integer den = singwalk::pow(Integer(10), fp.size());
        Rational r(num, den);
        return neg ? -r : r;
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (sgn(mpq_class(q.get_den())) == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return wrap(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return wrap(std::move(r));
}

Rational Rational::abs() const { return wrap(::abs(q_)); }

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e > 0 ? *this : inverse();
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1), sq = base;
    while (k > 0) {
        if (k & 1UL) acc *= sq;
        k >>= 1UL;
        if (k > 0) sq *= sq;
    }
    return acc;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational::wrap(a.q_ / b.q_);
}

std::string Rational::to_string() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

}  // namespace singwalk
