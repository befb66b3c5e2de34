#pragma once

#include "singwalk/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace singwalk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // on failure: first offending index/coefficient
};

/// Transfer products vs. the DP oracle (coefficientwise, all five models),
/// plus parity, diagonal symmetry, the literal composition sum for C/E,
/// and the weighted-table rescaling law.
std::vector<CheckResult> suite_oracle(int k_max, std::size_t order);

/// Chebyshev closed form vs. exact inversion, the determinant identity,
/// the t = 1/2 specialization, segment DP vs. Neumann expansion, and the
/// pole/residue data against a numeric fit (1e-9 relative).
std::vector<CheckResult> suite_segments(unsigned n_consistency, unsigned n_det, const std::vector<Rational>& ts);

/// Special-sequence tables, closed forms vs. transfer products, the +-1/2
/// symmetries, recurrences and ODE residuals.
std::vector<CheckResult> suite_sequences(unsigned terms, int recurrence_n_max, std::size_t ode_order);

/// Kernel functional equation, difference equations at generic v and v = 1,
/// the two-term recurrence of the model-A rows, and the section identities
/// for W (model D) and f (model B), including perturbation soundness.
/// `only_model` = 0 runs all five models.
std::vector<CheckResult> suite_funceq(int kernel_order, std::size_t diff_order, int recurrence_k_max,
                                      std::size_t recurrence_order, std::size_t w_order, std::size_t f_order,
                                      const std::vector<Rational>& vs, char only_model = 0);

/// Cramér-transform identity on pseudo-random weight pairs, the chi > 2
/// barrier, monotone Green partial sums, and a smoke-size branching-walk
/// run against the exact coefficients.
std::vector<CheckResult> suite_green(int cramer_pairs, int cramer_n_max, std::uint64_t seed);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace singwalk
