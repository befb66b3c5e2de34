#pragma once

#include "singwalk/model.hpp"
#include "singwalk/oracle.hpp"
#include "singwalk/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace singwalk {

/// SplitMix64: cheap splittable generator; every ancestor of the branching
/// simulation gets its own substream derived from (seed, ancestor index),
/// so results do not depend on the thread count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(mix(seed ^ mix(index + 0x9e3779b97f4a7c15ULL)));
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [0, n); n small, modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t state_;
};

/// Green function partial sums: G(i,j | T) = sum_n counts(i,j,n) (T/#S)^n.
/// The partial sum is a monotone lower bound; at T = #S/2 the exact value
/// (from the transfer product at t = 1/2) and the remaining gap are filled in.
struct GreenPartial {
    Rational partial;
    bool exact_available = false;
    Rational exact;
    Rational gap;
};

GreenPartial green_exact_partial(const ModelSpec& m, int i, int j, const Rational& green_t, int horizon,
                                 const CountTable* table = nullptr);

/// Exact check of the exponential-reweighting identity: for the walk with
/// step probabilities alpha^dx beta^dy / chi(alpha, beta),
///   P_w(n at (i,j), alive) = alpha^i beta^j (#S / chi)^n P(n at (i,j), alive)
/// for all cells with n <= n_max. The left side comes from the weighted DP,
/// the right side from the plain counts.
bool cramer_check(const ModelSpec& m, const Rational& alpha, const Rational& beta, int n_max);

/// Finite offspring law on {0, 1, 2, ...} with exact rational masses.
struct OffspringDist {
    std::vector<std::pair<unsigned long, Rational>> pmf;

    Rational mean() const;
    Rational total_mass() const;
    /// "1:1/2,2:1/2"
    static OffspringDist from_string(const std::string& text);
};

struct BrwConfig {
    const ModelSpec* model = nullptr;
    OffspringDist offspring;
    std::uint64_t ancestors = 100000;
    std::uint64_t population_cap = 1000000;  // particles created per ancestor
    int horizon = 60;                        // generations
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct BrwEstimate {
    std::pair<int, int> target;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t censored_lineages = 0;  // ancestors whose expansion hit the cap
};

/// Branching random walk killed at the quadrant boundary: every particle
/// jumps by a uniform step of the model and is replaced by an offspring-law
/// number of children at its landing site. Visits are counted at birth
/// sites, so the mean visit count at (i,j) equals G(i,j | E nu); the config
/// must satisfy E nu = #S/2 so that this is the t = 1/2 coefficient.
///
/// Subtrees that can no longer reach any target (i+j only ever grows) are
/// not expanded; this does not change any counted visit.
std::vector<BrwEstimate> brw_simulate(const BrwConfig& cfg, const std::vector<std::pair<int, int>>& targets);

}  // namespace singwalk
