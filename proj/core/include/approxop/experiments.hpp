#pragma once

#include <cstdint>
#include <vector>

#include "approxop/analysis.hpp"
#include "approxop/functions.hpp"
#include "approxop/policy.hpp"
#include "approxop/report.hpp"

namespace approxop {

/// The null sequence beta_n = min(c n^{-p}, 1 - 1e-9) driving sequence
/// experiments. c = 0 gives the Szasz case beta == 0.
struct BetaSchedule {
    BetaSchedule(double c_, double p_) : c(c_), p(p_) {
        if (!(c >= 0.0)) throw std::domain_error("schedule requires c >= 0");
        if (!(p > 0.0)) throw std::domain_error("schedule requires p > 0");
    }
    double c;
    double p;

    bool operator==(const BetaSchedule&) const = default;

    double beta_for(std::int64_t n) const;
};

/// {10, 32, 100, 316, 1000, 3162, 10000}: half-decade spacing for rate
/// estimation.
std::vector<std::int64_t> default_n_list();

/// Per n: the sup over the domain grid of |P_n^[beta_n](f, x) - f(x)|.
/// The x column carries the grid argmax. When f has a certified growth class
/// the rate-theorem bound is attached, and "<name>/order" rows carry the
/// empirical order of convergence in 1/n per consecutive n pair.
ExperimentReport run_convergence(const ScalarFunction& f, const BetaSchedule& schedule,
                                 const std::vector<std::int64_t>& n_list, const Domain& domain,
                                 const TruncationPolicy& policy);

/// Rows measured = n (P_n f - f)(x), reference = (x/2) f''(x).
/// Requires p > 1 (or c = 0) so that n beta_n -> 0.
ExperimentReport run_voronovskaya(const ScalarFunction& f, const BetaSchedule& schedule,
                                  const std::vector<std::int64_t>& n_list,
                                  const std::vector<double>& x_list,
                                  const TruncationPolicy& policy);

/// Rows measured = n^2 * central_moment(4), reference = 3 x^2.
ExperimentReport run_fourth_moment_limit(const BetaSchedule& schedule,
                                         const std::vector<std::int64_t>& n_list,
                                         const std::vector<double>& x_list,
                                         const TruncationPolicy& policy);

/// Rows measured = truncated weighted norm of P_n f - f on [0, x_max].
/// f must carry a growth class (subset of the x^2-weighted space).
ExperimentReport run_weighted(const ScalarFunction& f, const BetaSchedule& schedule,
                              const std::vector<std::int64_t>& n_list, double x_max,
                              double step, const TruncationPolicy& policy);

/// Closed form versus series oracle for every moment order on the
/// (n, beta, x) product grid, plus bound-dominance margin rows.
ExperimentReport run_moment_validation(const std::vector<std::int64_t>& n_list,
                                       const std::vector<double>& beta_list,
                                       const std::vector<double>& x_list,
                                       const TruncationPolicy& policy);

}  // namespace approxop
