#pragma once

#include <algorithm>
#include <cmath>

#include "approxop/operators.hpp"
#include "approxop/policy.hpp"

namespace approxop {

/// Closed form of S(r, alpha, beta) = sum_k (alpha + beta k)^{k+r} e^{-(alpha+beta k)} / k!
/// for r = 0..4. S(0) = 1/(1-beta).
double s_closed(int r, double alpha, BetaParam beta);

/// Direct truncated summation of the S series; oracle for s_closed.
/// Any r >= 0 is accepted.
SeriesResult s_series(int r, double alpha, BetaParam beta, const TruncationPolicy& policy);

/// Closed form of the raw moment P_n^[beta](t^j, x) for j = 0..4.
double raw_moment(int j, const OperatorParams& params, double x);

/// Closed form of the central moment P_n^[beta]((t-x)^s, x) for s = 1..4.
/// Implemented as standalone polynomials in x, not derived from raw moments,
/// to control cancellation; the binomial identity is a test.
double central_moment(int s, const OperatorParams& params, double x);

/// Truncated sum of p_beta(k, n x) (k/n - x)^s for s = 1..8; oracle for
/// central_moment.
SeriesResult central_moment_series(int s, const OperatorParams& params, double x,
                                   const TruncationPolicy& policy);

/// Upper bound on the second central moment:
///   (1 + (2+n) beta^2) / (n (1-beta)^4) * (x(1+x) + 1/n).
/// This is the final display of the bounding lemma's proof; it dominates
/// central_moment(2) for every 0 < beta < 1 (and at beta = 0 by continuity).
double second_central_bound(const OperatorParams& params, double x);

/// The printed fourth-central-moment bound 267 (x + x^2 + x^3 + x^4) / (n^4 (1-beta)^8).
/// Unlike the second-moment bound this does not dominate central_moment(4)
/// for fixed beta > 0 once n grows (the x^4 beta^4/(1-beta)^4 term of the
/// moment is independent of n); use fourth_bound_dominates to check a point.
double fourth_central_bound(const OperatorParams& params, double x);

/// Whether fourth_central_bound(params, x) >= central_moment(4, params, x).
bool fourth_bound_dominates(const OperatorParams& params, double x);

/// One closed-form-versus-series comparison.
struct MomentReport {
    double closed = 0.0;
    double series = 0.0;
    double residual_mass = 0.0;

    double rel_err() const {
        return std::abs(closed - series) / std::max(std::abs(closed), 1e-300);
    }
};

}  // namespace approxop
