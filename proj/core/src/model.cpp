#include "singwalk/model.hpp"

#include <stdexcept>

namespace singwalk {

namespace {

const Step kNW{-1, 1};
const Step kN{0, 1};
const Step kNE{1, 1};
const Step kE{1, 0};
const Step kSE{1, -1};

}  // namespace

const std::vector<ModelSpec>& ModelSpec::all() {
    static const std::vector<ModelSpec> models = {
        ModelSpec('A', {kNW, kNE, kSE}),
        ModelSpec('B', {kNW, kN, kE, kSE}),
        ModelSpec('C', {kNW, kN, kNE, kE, kSE}),
        ModelSpec('D', {kNW, kN, kSE}),
        ModelSpec('E', {kNW, kN, kNE, kSE}),
    };
    return models;
}

const ModelSpec& ModelSpec::get(char letter) {
    for (const auto& m : all())
        if (m.letter() == letter) return m;
    throw std::invalid_argument(std::string("ModelSpec: unknown model '") + letter + "', expected A..E");
}

void LaurentPoly::add_term(int ex, int ey, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({ex, ey}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational LaurentPoly::coeff(int ex, int ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_x_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key.first < d) d = key.first;
        first = false;
    }
    return d;
}

int LaurentPoly::max_x_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key.first > d) d = key.first;
        first = false;
    }
    return d;
}

int LaurentPoly::min_y_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key.second < d) d = key.second;
        first = false;
    }
    return d;
}

int LaurentPoly::max_y_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (first || key.second > d) d = key.second;
        first = false;
    }
    return d;
}

LaurentPoly characteristic_poly(const ModelSpec& m) {
    LaurentPoly chi;
    for (const Step& s : m.steps()) chi.add_term(s.dx, s.dy, Rational(1));
    return chi;
}

LaurentPoly kernel_poly(const ModelSpec& m, const Rational& t) {
    LaurentPoly k;
    k.add_term(1, 1, Rational(1));
    for (const Step& s : m.steps()) k.add_term(1 + s.dx, 1 + s.dy, -t);
    return k;
}

}  // namespace singwalk
