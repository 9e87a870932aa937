#pragma once

#include <cstdint>
#include <functional>

#include "approxop/policy.hpp"

namespace approxop {

/// The two weight families handled by this library.
///
/// NewFamily:  p_b(k,a) = (1-b) (a+bk)^k e^{-(a+bk)} / k!
/// Jain:       w_b(k,a) = a (a+bk)^{k-1} e^{-(a+bk)} / k!
///
/// Both are probability distributions over k = 0,1,2,... for a >= 0 and
/// 0 <= b < 1, and both reduce to the Poisson(a) pmf at b = 0.
enum class WeightKind { NewFamily, Jain };

/// log of the weight; -inf when the weight is exactly zero.
///
/// Assembled in extended precision through a saddle-point form of the
/// Poisson pmf (stirlerr/bd0 decomposition), so the returned log is correct
/// to its last bit even for k in the millions, where the naive
/// k*log(a+bk) - (a+bk) - lgamma(k+1) route loses ~1e-9. Exponentiating the
/// (double) result costs |log| * eps / 2 in relative terms; weight() avoids
/// that rounding and is accurate to a few ulps everywhere.
///
/// Conventions: 0^0 := 1, so p_b(0,0) = (1-b); the k = 0 Jain weight is
/// e^{-a} (the a * a^{-1} factor cancels).
double log_weight(std::uint64_t k, double alpha, BetaParam beta, WeightKind kind);

/// The weight itself, exponentiated before the log is rounded; in [0,1].
double weight(std::uint64_t k, double alpha, BetaParam beta, WeightKind kind);

/// Smallest K <= policy.max_terms with 1 - sum_{k<=K} weight(k) < policy.epsilon.
///
/// The residual is certified exactly through the normalization identity
/// (the weights sum to one), not estimated from term decay.
/// Throws CapExhaustedError if the cap is hit first.
std::uint64_t truncation_index(double alpha, BetaParam beta, WeightKind kind,
                               const TruncationPolicy& policy);

/// Growth envelope for the summand of series_sum: |g(k)| is assumed to be
/// O((k/scale)^degree) for large k, which tightens the residual-mass target
/// accordingly. degree = 0 means g is treated as bounded.
struct GrowthEnvelope {
    int degree = 0;
    double scale = 1.0;
};

/// Certified truncated sum of weight(k) * g(k).
///
/// g must be defined for every k up to the truncation index and of at most
/// polynomial growth in k. The reported residual_mass is the uncaptured
/// probability mass and is below policy.epsilon on success.
SeriesResult series_sum(const std::function<double(std::uint64_t)>& g, double alpha,
                        BetaParam beta, WeightKind kind, const TruncationPolicy& policy,
                        GrowthEnvelope envelope = {});

namespace detail {

/// stirlerr(n) = log(n!) - log( sqrt(2 pi n) (n/e)^n ).
double stirlerr(std::uint64_t n);

/// Deviance term bd0(x, np) = x log(x/np) + np - x, evaluated without
/// cancellation when x ~ np.
double bd0(double x, double np);

/// log of the Poisson pmf at k with mean lambda >= 0 (lambda = 0 allowed).
double log_poisson_pmf(std::uint64_t k, double lambda);

/// Mean of k under the weight distribution; used to seed the summation window.
double weight_mean(double alpha, double beta, WeightKind kind);

}  // namespace detail

}  // namespace approxop
