#include "singwalk/transfer.hpp"

#include <stdexcept>

namespace singwalk {

namespace {

// Occupation-vector images of the jump matrices, applied without
// materializing the matrix. Input length L, output length L + span.
template <typename S>
std::vector<S> apply_jump(JumpKind kind, const std::vector<S>& in, const S& zero) {
    const std::size_t L = in.size();
    const std::size_t out_len = kind == JumpKind::A ? L + 2 : L + 1;
    std::vector<S> out(out_len, zero);
    switch (kind) {
        case JumpKind::A:
        case JumpKind::D:
            for (std::size_t a = 0; a < L; ++a) out[a + 1] = in[a];
            break;
        case JumpKind::B:
            for (std::size_t a = 0; a < L; ++a) {
                out[a] += in[a];
                out[a + 1] += in[a];
            }
            break;
    }
    return out;
}

Matrix<Rational> f_matrix_for(unsigned n, const Rational& t) {
    if (t.is_zero()) return Matrix<Rational>::identity(n);
    if (t == Rational(1, 2)) return f_matrix_half(n);
    return f_matrix_closed_form(n, t);
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// u = pre * F_L with formal t, solved degree by degree from
// u = pre + t * u * M (M = path-graph adjacency on L nodes).
std::vector<TruncSeries<Rational>> times_f_formal(const std::vector<TruncSeries<Rational>>& pre,
                                                  std::size_t order) {
    const std::size_t L = pre.size();
    std::vector<std::vector<Rational>> u(order, std::vector<Rational>(L));
    for (std::size_t d = 0; d < order; ++d) {
        for (std::size_t a = 0; a < L; ++a) {
            Rational acc = pre[a].coeff(d);
            if (d > 0) {
                if (a > 0) acc += u[d - 1][a - 1];
                if (a + 1 < L) acc += u[d - 1][a + 1];
            }
            u[d][a] = std::move(acc);
        }
    }
    std::vector<TruncSeries<Rational>> out;
    out.reserve(L);
    for (std::size_t a = 0; a < L; ++a) {
        TruncSeries<Rational> f('t', order);
        for (std::size_t d = 0; d < order; ++d) f.set_coeff(d, u[d][a]);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

Matrix<Rational> jump_matrix(JumpKind kind, unsigned m) {
    const unsigned rows = kind == JumpKind::A ? m - 2 : m - 1;
    if (m < 2 || (kind == JumpKind::A && m < 3))
        throw std::invalid_argument("jump_matrix: target segment too small");
    Matrix<Rational> j(rows, m);
    for (unsigned r = 0; r < rows; ++r) {
        j.at(r, r + 1) = Rational(1);
        if (kind == JumpKind::B) j.at(r, r) = Rational(1);
    }
    return j;
}

std::vector<std::vector<int>> compositions_one_two(int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (k < 0) return out;
    for (int first : {1, 2}) {
        if (first > k) continue;
        for (auto& tail : compositions_one_two(k - first)) {
            std::vector<int> c;
            c.reserve(tail.size() + 1);
            c.push_back(first);
            c.insert(c.end(), tail.begin(), tail.end());
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<std::vector<Rational>> endpoint_vectors(const ModelSpec& m, int k_max, const Rational& t) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(k_max) + 1);
    rows.push_back({Rational(1)});
    const Rational zero(0);
    for (int k = 1; k <= k_max; ++k) {
        std::vector<Rational> pre(static_cast<std::size_t>(k) + 1, zero);
        bool fed = false;
        auto feed = [&](JumpKind kind, int from_k) {
            if (from_k < 0) return;
            const auto& src = rows[static_cast<std::size_t>(from_k)];
            if (all_zero(src)) return;
            auto shifted = apply_jump(kind, src, zero);
            for (std::size_t a = 0; a < pre.size(); ++a) pre[a] += shifted[a];
            fed = true;
        };
        switch (m.letter()) {
            case 'A':
                if (k % 2 == 0) feed(JumpKind::A, k - 2);
                break;
            case 'B':
                feed(JumpKind::B, k - 1);
                break;
            case 'D':
                feed(JumpKind::D, k - 1);
                break;
            case 'C':
                feed(JumpKind::B, k - 1);
                feed(JumpKind::A, k - 2);
                break;
            case 'E':
                feed(JumpKind::D, k - 1);
                feed(JumpKind::A, k - 2);
                break;
        }
        if (!fed) {
            rows.push_back(std::move(pre));  // identically zero row (model A, odd k)
            continue;
        }
        auto row = row_times(pre, f_matrix_for(static_cast<unsigned>(k) + 1, t));
        for (auto& x : row) x *= t;  // one factor t per forward jump
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Rational> endpoint_vector(const ModelSpec& m, int k, const Rational& t) {
    return endpoint_vectors(m, k, t).back();
}

std::vector<std::vector<TruncSeries<Rational>>> endpoint_vectors_formal(const ModelSpec& m, int k_max,
                                                                        std::size_t order) {
    const TruncSeries<Rational> zero('t', order);
    std::vector<std::vector<TruncSeries<Rational>>> rows;
    rows.reserve(static_cast<std::size_t>(k_max) + 1);
    rows.push_back({TruncSeries<Rational>::one('t', order)});
    for (int k = 1; k <= k_max; ++k) {
        std::vector<TruncSeries<Rational>> pre(static_cast<std::size_t>(k) + 1, zero);
        bool fed = false;
        auto feed = [&](JumpKind kind, int from_k) {
            if (from_k < 0) return;
            auto shifted = apply_jump(kind, rows[static_cast<std::size_t>(from_k)], zero);
            for (std::size_t a = 0; a < pre.size(); ++a) pre[a] += shifted[a];
            fed = true;
        };
        switch (m.letter()) {
            case 'A':
                if (k % 2 == 0) feed(JumpKind::A, k - 2);
                break;
            case 'B':
                feed(JumpKind::B, k - 1);
                break;
            case 'D':
                feed(JumpKind::D, k - 1);
                break;
            case 'C':
                feed(JumpKind::B, k - 1);
                feed(JumpKind::A, k - 2);
                break;
            case 'E':
                feed(JumpKind::D, k - 1);
                feed(JumpKind::A, k - 2);
                break;
        }
        if (!fed) {
            rows.push_back(std::move(pre));
            continue;
        }
        auto row = times_f_formal(pre, order);
        for (auto& f : row) f = f.shifted(1);  // the jump's factor t
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TruncSeries<Rational>> endpoint_vector_formal(const ModelSpec& m, int k, std::size_t order) {
    return endpoint_vectors_formal(m, k, order).back();
}

std::vector<Rational> endpoint_vector_composition_sum(const ModelSpec& m, int k, const Rational& t) {
    if (m.letter() != 'C' && m.letter() != 'E')
        throw std::invalid_argument("endpoint_vector_composition_sum: only models C and E mix jump spans");
    const JumpKind one_step = m.letter() == 'C' ? JumpKind::B : JumpKind::D;
    std::vector<Rational> total(static_cast<std::size_t>(k) + 1, Rational(0));
    if (k == 0) {
        total[0] = Rational(1);
        return total;
    }
    for (const auto& parts : compositions_one_two(k)) {
        std::vector<Rational> v = {Rational(1)};
        int pos = 0;
        for (int part : parts) {
            pos += part;
            const unsigned msize = static_cast<unsigned>(pos) + 1;
            v = row_times(v, jump_matrix(part == 2 ? JumpKind::A : one_step, msize));
            v = row_times(v, f_matrix_for(msize, t));
            for (auto& x : v) x *= t;
        }
        for (std::size_t a = 0; a < total.size(); ++a) total[a] += v[a];
    }
    return total;
}

QTruncation::QTruncation(const ModelSpec& m, const Rational& t, int k_max)
    : model_(&m), t_(t), k_max_(k_max) {
    if (t.abs() > Rational(1, 2))
        throw std::domain_error("QTruncation: |t| > 1/2 lies outside the series' domain (poles accumulate at 1/2)");
    rows_ = endpoint_vectors(m, k_max, t);
}

const Rational& QTruncation::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > k_max_)
        throw std::out_of_range("QTruncation: coefficient outside the computed triangle");
    return rows_[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(j)];
}

std::vector<Rational> QTruncation::section_x() const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k_max_) + 1);
    for (int k = 0; k <= k_max_; ++k) out.push_back(rows_[static_cast<std::size_t>(k)].front());
    return out;
}

std::vector<Rational> QTruncation::section_y() const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k_max_) + 1);
    for (int k = 0; k <= k_max_; ++k) out.push_back(rows_[static_cast<std::size_t>(k)].back());
    return out;
}

bool row_recurrence_holds(const std::vector<TruncSeries<Rational>>& d2k,
                           const std::vector<TruncSeries<Rational>>& d2km2, int k, std::size_t order) {
    if (k < 1) throw std::invalid_argument("row_recurrence_holds: k >= 1 required");
    const TruncSeries<Rational> zero('q', order);
    // t = q/(1+q^2)
    const auto tq = rational_series<Rational>('q', order, {Rational(0), Rational(1)},
                                              {Rational(1), Rational(0), Rational(1)});
    auto to_q = [&](const std::vector<TruncSeries<Rational>>& row) {
        std::vector<TruncSeries<Rational>> out;
        out.reserve(row.size());
        for (const auto& f : row) out.push_back(f.compose(tq));
        return out;
    };
    const auto dk = to_q(d2k);
    const auto dkm = to_q(d2km2);
    auto entry = [&](const std::vector<TruncSeries<Rational>>& row, int idx) -> TruncSeries<Rational> {
        if (idx < 0 || idx >= static_cast<int>(row.size())) return zero;
        return row[static_cast<std::size_t>(idx)];
    };
    // D_{2k-2}(q): substitute y = q
    TruncSeries<Rational> d_at_q = zero;
    for (std::size_t i = 0; i < dkm.size(); ++i) d_at_q += dkm[i].shifted(i);
    // t q^2 / (q^{2k+2} + 1) * D_{2k-2}(q)
    TruncSeries<Rational> denom = TruncSeries<Rational>::one('q', order);
    const std::size_t e = static_cast<std::size_t>(2 * k + 2);
    if (e < order) denom.set_coeff(e, Rational(1));
    const auto c = (tq.shifted(2) * denom.inverse()) * d_at_q;

    const int width = 2 * k + 3;
    for (int mdeg = 0; mdeg < width; ++mdeg) {
        // (t y^2 - y + t) D_{2k}(y), coefficient of y^mdeg
        TruncSeries<Rational> lhs = tq * (entry(dk, mdeg - 2) + entry(dk, mdeg)) - entry(dk, mdeg - 1);
        TruncSeries<Rational> rhs = zero - tq * entry(dkm, mdeg - 2);
        if (mdeg == 0 || mdeg == 2 * k + 2) rhs += c;
        if (!(lhs - rhs).is_zero()) return false;
    }
    return true;
}

bool row_recurrence_check(int k, std::size_t order) {
    const auto rows = endpoint_vectors_formal(ModelSpec::get('A'), 2 * k, order);
    return row_recurrence_holds(rows[static_cast<std::size_t>(2 * k)],
                                 rows[static_cast<std::size_t>(2 * k - 2)], k, order);
}

}  // namespace singwalk
