#pragma once

#include <cstdint>

#include "approxop/functions.hpp"
#include "approxop/policy.hpp"
#include "approxop/weights.hpp"

namespace approxop {

/// One operator instance: sample density n and shape parameter beta.
struct OperatorParams {
    OperatorParams(std::int64_t n_, BetaParam beta_) : n(n_), beta(beta_) {
        if (n < 1) throw std::domain_error("operator parameter n must be >= 1");
    }
    std::int64_t n;
    BetaParam beta;
};

/// P_n^[beta](f, x) = sum_k p_beta(k, n x) f(k/n), truncated under `policy`.
/// x must lie in [0, 1e6]; alpha = n x stays in floating-point comfort there.
SeriesResult apply_p(const ScalarFunction& f, const OperatorParams& params, double x,
                     const TruncationPolicy& policy);

/// The Jain operator J_n^[beta](f, x) with weights w_beta(k, n x).
SeriesResult apply_jain(const ScalarFunction& f, const OperatorParams& params, double x,
                        const TruncationPolicy& policy);

/// Szasz-Mirakyan operator: the beta = 0 case of apply_p (same code path).
SeriesResult apply_szasz(const ScalarFunction& f, std::int64_t n, double x,
                         const TruncationPolicy& policy);

}  // namespace approxop
