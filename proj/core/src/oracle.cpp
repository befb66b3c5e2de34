#include "singwalk/oracle.hpp"

#include <stdexcept>

namespace singwalk {

namespace {

inline std::size_t tri_cells(int diag_max) {
    // number of cells with i+j <= diag_max
    return static_cast<std::size_t>(diag_max + 1) * static_cast<std::size_t>(diag_max + 2) / 2;
}

inline std::size_t tri_index(int i, int j) {
    const int d = i + j;
    return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2 + static_cast<std::size_t>(i);
}

}  // namespace

CountTable::CountTable(const ModelSpec& model, int n_max) : model_(&model), n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("CountTable: negative horizon");
    layers_.resize(static_cast<std::size_t>(n_max) + 1);
    layers_[0].assign(tri_cells(0), Integer(0));
    layers_[0][0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        const int dmax = 2 * n;
        auto& cur = layers_[static_cast<std::size_t>(n)];
        cur.assign(tri_cells(dmax), Integer(0));
        const auto& prev = layers_[static_cast<std::size_t>(n - 1)];
        const int pmax = 2 * (n - 1);
        for (int d = 0; d <= pmax; ++d) {
            for (int i = 0; i <= d; ++i) {
                const Integer& c = prev[tri_index(i, d - i)];
                if (sgn(c) == 0) continue;
                for (const Step& s : model_->steps()) {
                    const int ni = i + s.dx, nj = d - i + s.dy;
                    if (ni < 0 || nj < 0) continue;  // quadrant constraint at every step
                    cur[tri_index(ni, nj)] += c;
                }
            }
        }
    }
}

const Integer& CountTable::count(int i, int j, int n) const {
    static const Integer zero(0);
    if (i < 0 || j < 0 || n < 0 || n > n_max_) return zero;
    if (i + j > 2 * n) return zero;
    return layers_[static_cast<std::size_t>(n)][tri_index(i, j)];
}

Integer CountTable::total(int n) const {
    Integer acc(0);
    for (const Integer& c : layers_[static_cast<std::size_t>(n)]) acc += c;
    return acc;
}

std::vector<Integer> CountTable::endpoint_counts(int i, int j) const {
    std::vector<Integer> r;
    r.reserve(static_cast<std::size_t>(n_max_) + 1);
    for (int n = 0; n <= n_max_; ++n) r.push_back(count(i, j, n));
    return r;
}

CountTable count_walks(const ModelSpec& m, int n_max) { return CountTable(m, n_max); }

std::vector<std::vector<TruncSeries<Rational>>> q_formal_t(const CountTable& table, int k_max) {
    const int kmax = std::min(k_max, 2 * table.n_max());
    const std::size_t order = static_cast<std::size_t>(table.n_max()) + 1;
    std::vector<std::vector<TruncSeries<Rational>>> rows;
    rows.reserve(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        std::vector<TruncSeries<Rational>> row;
        row.reserve(static_cast<std::size_t>(k) + 1);
        for (int idx = 0; idx <= k; ++idx) {
            TruncSeries<Rational> f('t', order);
            for (int n = 0; n <= table.n_max(); ++n) {
                const Integer& c = table.count(k - idx, idx, n);
                if (sgn(c) != 0) f.set_coeff(static_cast<std::size_t>(n), Rational(c));
            }
            row.push_back(std::move(f));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

WeightedTable::WeightedTable(const ModelSpec& model, Rational alpha1, Rational alpha2, Rational beta, int n_max)
    : model_(&model), n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("WeightedTable: negative horizon");
    if (alpha1.sign() <= 0 || alpha2.sign() <= 0 || beta.sign() <= 0)
        throw std::invalid_argument("WeightedTable: weights require alpha1, alpha2, beta > 0");
    // per-step weights beta * alpha1^dx * alpha2^dy
    std::vector<Rational> step_weight;
    step_weight.reserve(model_->steps().size());
    for (const Step& s : model_->steps()) step_weight.push_back(beta * alpha1.pow(s.dx) * alpha2.pow(s.dy));

    layers_.resize(static_cast<std::size_t>(n_max) + 1);
    layers_[0].assign(tri_cells(0), Rational(0));
    layers_[0][0] = Rational(1);
    for (int n = 1; n <= n_max; ++n) {
        auto& cur = layers_[static_cast<std::size_t>(n)];
        cur.assign(tri_cells(2 * n), Rational(0));
        const auto& prev = layers_[static_cast<std::size_t>(n - 1)];
        for (int d = 0; d <= 2 * (n - 1); ++d) {
            for (int i = 0; i <= d; ++i) {
                const Rational& c = prev[tri_index(i, d - i)];
                if (c.is_zero()) continue;
                for (std::size_t si = 0; si < model_->steps().size(); ++si) {
                    const Step& s = model_->steps()[si];
                    const int ni = i + s.dx, nj = d - i + s.dy;
                    if (ni < 0 || nj < 0) continue;
                    cur[tri_index(ni, nj)] += c * step_weight[si];
                }
            }
        }
    }
}

const Rational& WeightedTable::weight(int i, int j, int n) const {
    static const Rational zero(0);
    if (i < 0 || j < 0 || n < 0 || n > n_max_) return zero;
    if (i + j > 2 * n) return zero;
    return layers_[static_cast<std::size_t>(n)][tri_index(i, j)];
}

WeightedTable weighted_counts(const ModelSpec& m, const Rational& alpha1, const Rational& alpha2,
                              const Rational& beta, int n_max) {
    return WeightedTable(m, alpha1, alpha2, beta, n_max);
}

}  // namespace singwalk
