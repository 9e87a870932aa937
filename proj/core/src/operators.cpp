#include "approxop/operators.hpp"

#include <cmath>

namespace approxop {

namespace {

constexpr double kMaxX = 1e6;

SeriesResult apply_impl(const ScalarFunction& f, const OperatorParams& params, double x,
                        const TruncationPolicy& policy, WeightKind kind) {
    if (!(x >= 0.0)) throw std::domain_error("operator argument x must be >= 0");
    if (x > kMaxX) throw std::domain_error("operator argument x exceeds the 1e6 cap");
    const double n = static_cast<double>(params.n);
    const double alpha = n * x;
    auto g = [&](std::uint64_t k) { return f.eval(static_cast<double>(k) / n); };
    return series_sum(g, alpha, params.beta, kind, policy,
                      GrowthEnvelope{f.envelope_degree, n});
}

}  // namespace

SeriesResult apply_p(const ScalarFunction& f, const OperatorParams& params, double x,
                     const TruncationPolicy& policy) {
    return apply_impl(f, params, x, policy, WeightKind::NewFamily);
}

SeriesResult apply_jain(const ScalarFunction& f, const OperatorParams& params, double x,
                        const TruncationPolicy& policy) {
    return apply_impl(f, params, x, policy, WeightKind::Jain);
}

SeriesResult apply_szasz(const ScalarFunction& f, std::int64_t n, double x,
                         const TruncationPolicy& policy) {
    return apply_p(f, OperatorParams(n, BetaParam(0.0)), x, policy);
}

}  // namespace approxop
