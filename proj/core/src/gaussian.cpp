#include "singwalk/gaussian.hpp"

#include <ostream>

namespace singwalk {

GaussianRational GaussianRational::inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    return GaussianRational(re / n, -im / n);
}

std::string GaussianRational::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string s = re.to_string();
    s += im.sign() < 0 ? "-" : "+";
    s += im.abs().to_string();
    s += "*i";
    return s;
}

GaussianRational GaussianRational::from_string(std::string_view text) {
    std::string s(text);
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
        std::string body = s.substr(0, s.size() - 2);
        // Rational components contain a sign only at position 0, so the first
        // '+' or '-' past it separates real and imaginary parts.
        std::size_t split = std::string::npos;
        for (std::size_t p = 1; p < body.size(); ++p) {
            if (body[p] == '+' || body[p] == '-') { split = p; break; }
        }
        if (split == std::string::npos)
            throw std::invalid_argument("GaussianRational: cannot parse '" + s + "'");
        Rational re = Rational::from_string(body.substr(0, split));
        Rational im = Rational::from_string(body.substr(split + 1));
        if (body[split] == '-') im = -im;
        return GaussianRational(std::move(re), std::move(im));
    }
    return GaussianRational(Rational::from_string(s));
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace singwalk
