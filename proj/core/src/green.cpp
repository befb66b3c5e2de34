#include "singwalk/green.hpp"

#include "singwalk/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

namespace singwalk {

GreenPartial green_exact_partial(const ModelSpec& m, int i, int j, const Rational& green_t, int horizon,
                                 const CountTable* table) {
    const Rational bound = Rational(m.step_count()) / Rational(2);
    if (green_t.sign() < 0 || green_t > bound)
        throw std::invalid_argument("green_exact_partial: need 0 <= t <= #S/2 after rescaling");
    std::optional<CountTable> local;
    if (!table) {
        local.emplace(m, horizon);
        table = &*local;
    }
    const CountTable& counts = *table;
    if (counts.n_max() < horizon) throw std::invalid_argument("green_exact_partial: table horizon too small");

    const Rational ratio = green_t / Rational(m.step_count());
    GreenPartial out;
    out.partial = Rational(0);
    Rational power(1);
    for (int n = 0; n <= horizon; ++n) {
        const Integer& c = counts.count(i, j, n);
        if (sgn(c) != 0) out.partial += Rational(c) * power;
        power *= ratio;
    }
    if (green_t == bound) {
        out.exact_available = true;
        out.exact = q_half(m, i + j).coeff(i, j);
        out.gap = out.exact - out.partial;
    }
    return out;
}

bool cramer_check(const ModelSpec& m, const Rational& alpha, const Rational& beta, int n_max) {
    if (alpha.sign() <= 0 || beta.sign() <= 0)
        throw std::invalid_argument("cramer_check: alpha, beta must be positive");
    const Rational chi = characteristic_poly(m).eval(alpha, beta);
    const WeightedTable w = weighted_counts(m, alpha, beta, chi.inverse(), n_max);
    const CountTable plain = count_walks(m, n_max);
    const Rational card(m.step_count());
    Rational scale(1);  // (#S / chi)^n
    for (int n = 0; n <= n_max; ++n) {
        for (int d = 0; d <= 2 * n; ++d) {
            for (int i = 0; i <= d; ++i) {
                const int j = d - i;
                const Rational lhs = w.weight(i, j, n);
                const Integer& c = plain.count(i, j, n);
                const Rational rhs =
                    alpha.pow(i) * beta.pow(j) * scale * Rational(c) / card.pow(n);
                if (lhs != rhs) return false;
            }
        }
        scale *= card / chi;
    }
    return true;
}

Rational OffspringDist::mean() const {
    Rational acc(0);
    for (const auto& [k, p] : pmf) acc += Rational(static_cast<long>(k)) * p;
    return acc;
}

Rational OffspringDist::total_mass() const {
    Rational acc(0);
    for (const auto& [k, p] : pmf) acc += p;
    return acc;
}

OffspringDist OffspringDist::from_string(const std::string& text) {
    OffspringDist d;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("offspring law: expected 'count:prob[,count:prob...]', got '" + text + "'");
        const unsigned long k = std::stoul(item.substr(0, colon));
        d.pmf.emplace_back(k, Rational::from_string(item.substr(colon + 1)));
        pos = comma + 1;
    }
    return d;
}

namespace {

struct OffspringSampler {
    std::vector<unsigned long> counts;
    std::vector<std::uint64_t> cum;  // cumulative numerators over a common denominator
    std::uint64_t denom;

    explicit OffspringSampler(const OffspringDist& d) {
        Integer lcm(1);
        for (const auto& [k, p] : d.pmf) {
            if (p.sign() < 0) throw std::invalid_argument("offspring law: negative probability");
            Integer den = p.denominator();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        if (!lcm.fits_ulong_p()) throw std::invalid_argument("offspring law: denominators too large");
        denom = lcm.get_ui();
        std::uint64_t acc = 0;
        for (const auto& [k, p] : d.pmf) {
            const Rational scaled = p * Rational(lcm);
            acc += scaled.numerator().get_ui();
            counts.push_back(k);
            cum.push_back(acc);
        }
        if (acc != denom) throw std::invalid_argument("offspring law: probabilities must sum to 1");
    }

    unsigned long sample(SplitMix64& rng) const {
        const std::uint64_t r = rng.below(denom);
        for (std::size_t i = 0; i < cum.size(); ++i)
            if (r < cum[i]) return counts[i];
        return counts.back();
    }
};

struct Accum {
    std::vector<std::uint64_t> sum;
    std::vector<unsigned __int128> sumsq;
    std::uint64_t censored = 0;

    explicit Accum(std::size_t n) : sum(n, 0), sumsq(n, 0) {}

    void absorb(const Accum& o) {
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += o.sum[i];
            sumsq[i] += o.sumsq[i];
        }
        censored += o.censored;
    }
};

struct Particle {
    int x, y, gen;
};

}  // namespace

std::vector<BrwEstimate> brw_simulate(const BrwConfig& cfg, const std::vector<std::pair<int, int>>& targets) {
    if (!cfg.model) throw std::invalid_argument("brw_simulate: no model");
    const ModelSpec& m = *cfg.model;
    if (cfg.offspring.total_mass() != Rational(1))
        throw std::invalid_argument("brw_simulate: offspring probabilities must sum to 1");
    const Rational want = Rational(m.step_count()) / Rational(2);
    if (cfg.offspring.mean() != want)
        throw std::invalid_argument("brw_simulate: offspring mean must equal #S/2 = " + want.to_string() +
                                    " for the t = 1/2 identity");
    if (targets.empty()) throw std::invalid_argument("brw_simulate: no targets");

    const OffspringSampler sampler(cfg.offspring);
    int prune_bound = 0;
    for (const auto& [i, j] : targets) {
        if (i < 0 || j < 0) throw std::invalid_argument("brw_simulate: target outside the quadrant");
        prune_bound = std::max(prune_bound, i + j);
    }
    const auto& steps = m.steps();
    const std::uint64_t nsteps = static_cast<std::uint64_t>(steps.size());

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Accum& acc) {
        std::vector<std::uint64_t> visits(targets.size());
        std::vector<Particle> stack;
        for (std::uint64_t a = lo; a < hi; ++a) {
            SplitMix64 rng = SplitMix64::substream(cfg.seed, a);
            std::fill(visits.begin(), visits.end(), 0);
            // the ancestor is born at the origin
            for (std::size_t ti = 0; ti < targets.size(); ++ti)
                if (targets[ti].first == 0 && targets[ti].second == 0) visits[ti] += 1;
            stack.clear();
            stack.push_back({0, 0, 0});
            std::uint64_t created = 1;
            bool censored = false;
            while (!stack.empty()) {
                const Particle p = stack.back();
                stack.pop_back();
                if (p.gen >= cfg.horizon) continue;
                const Step& s = steps[rng.below(nsteps)];
                const int nx = p.x + s.dx, ny = p.y + s.dy;
                if (nx < 0 || ny < 0) continue;  // killed at the boundary
                const unsigned long children = sampler.sample(rng);
                for (std::size_t ti = 0; ti < targets.size(); ++ti)
                    if (targets[ti].first == nx && targets[ti].second == ny) visits[ti] += children;
                if (nx + ny > prune_bound) continue;  // i+j never decreases: out of reach of every target
                for (unsigned long c = 0; c < children; ++c) {
                    if (created >= cfg.population_cap) {
                        censored = true;
                        break;
                    }
                    ++created;
                    stack.push_back({nx, ny, p.gen + 1});
                }
                if (censored) break;
            }
            if (censored) ++acc.censored;
            for (std::size_t ti = 0; ti < targets.size(); ++ti) {
                acc.sum[ti] += visits[ti];
                acc.sumsq[ti] += static_cast<unsigned __int128>(visits[ti]) * visits[ti];
            }
        }
    };

    Accum total(targets.size());
    const unsigned threads = std::max(1u, cfg.threads);
    if (threads == 1 || cfg.ancestors < 2 * threads) {
        run_range(0, cfg.ancestors, total);
    } else {
        std::vector<Accum> parts(threads, Accum(targets.size()));
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (cfg.ancestors + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(cfg.ancestors, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, w] { run_range(lo, hi, parts[w]); });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : parts) total.absorb(part);
    }

    std::vector<BrwEstimate> out;
    const double n = static_cast<double>(cfg.ancestors);
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        BrwEstimate e;
        e.target = targets[ti];
        e.censored_lineages = total.censored;
        const double sum = static_cast<double>(total.sum[ti]);
        const double sumsq = static_cast<double>(total.sumsq[ti]);
        e.estimate = sum / n;
        const double var = n > 1.0 ? std::max(0.0, (sumsq - sum * sum / n) / (n - 1.0)) : 0.0;
        e.std_error = std::sqrt(var / n);
        out.push_back(e);
    }
    return out;
}

}  // namespace singwalk
