#include "approxop/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace approxop {

namespace {

double ipow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

[[noreturn]] void unsupported_order(const char* what, int order) {
    throw std::invalid_argument(std::string("unsupported ") + what + " order " +
                                std::to_string(order));
}

}  // namespace

double s_closed(int r, double alpha, BetaParam beta) {
    if (!(alpha >= 0.0)) throw std::domain_error("s_closed: alpha must be >= 0");
    const double a = alpha;
    const double b = beta.value();
    const double u = 1.0 - b;
    switch (r) {
        case 0:
            return 1.0 / u;
        case 1:
            return a / ipow(u, 2) + b * b / ipow(u, 3);
        case 2:
            return a * a / ipow(u, 3) + 3.0 * a * b * b / ipow(u, 4) +
                   ipow(b, 3) * (1.0 + 2.0 * b) / ipow(u, 5);
        case 3:
            return ipow(a, 3) / ipow(u, 4) + 6.0 * a * a * b * b / ipow(u, 5) +
                   a * ipow(b, 3) * (4.0 + 11.0 * b) / ipow(u, 6) +
                   (ipow(b, 4) + 8.0 * ipow(b, 5) + 6.0 * ipow(b, 6)) / ipow(u, 7);
        case 4:
            return ipow(a, 4) / ipow(u, 5) + 10.0 * ipow(a, 3) * b * b / ipow(u, 6) +
                   5.0 * a * a * (2.0 * ipow(b, 3) + 7.0 * ipow(b, 4)) / ipow(u, 7) +
                   5.0 * a * (ipow(b, 4) + 10.0 * ipow(b, 5) + 10.0 * ipow(b, 6)) / ipow(u, 8) +
                   (ipow(b, 5) + 22.0 * ipow(b, 6) + 58.0 * ipow(b, 7) + 24.0 * ipow(b, 8)) /
                       ipow(u, 9);
        default:
            unsupported_order("S", r);
    }
}

SeriesResult s_series(int r, double alpha, BetaParam beta, const TruncationPolicy& policy) {
    if (r < 0) unsupported_order("S", r);
    const double b = beta.value();
    const double scale = 1.0 / (1.0 - b);
    // S(r) = sum_k p_beta(k, alpha) (alpha + beta k)^r / (1 - beta)
    auto g = [=](std::uint64_t k) {
        const double lambda = alpha + b * static_cast<double>(k);
        return ipow(lambda, r) * scale;
    };
    return series_sum(g, alpha, beta, WeightKind::NewFamily, policy, GrowthEnvelope{r, 1.0});
}

double raw_moment(int j, const OperatorParams& params, double x) {
    const double n = static_cast<double>(params.n);
    const double b = params.beta.value();
    const double u = 1.0 - b;
    switch (j) {
        case 0:
            return 1.0;
        case 1:
            return x / u + b / (n * ipow(u, 2));
        case 2:
            return x * x / ipow(u, 2) + x * (1.0 + 2.0 * b) / (n * ipow(u, 3)) +
                   b * (1.0 + 2.0 * b) / (n * n * ipow(u, 4));
        case 3:
            return ipow(x, 3) / ipow(u, 3) + 3.0 * x * x * (1.0 + b) / (n * ipow(u, 4)) +
                   x * (1.0 + 8.0 * b + 6.0 * b * b) / (n * n * ipow(u, 5)) +
                   b * (1.0 + 8.0 * b + 6.0 * b * b) / (ipow(n, 3) * ipow(u, 6));
        case 4:
            return ipow(x, 4) / ipow(u, 4) + 2.0 * ipow(x, 3) * (3.0 + 2.0 * b) / (n * ipow(u, 5)) +
                   x * x * (7.0 + 26.0 * b + 12.0 * b * b) / (n * n * ipow(u, 6)) +
                   x * (1.0 + 22.0 * b + 58.0 * b * b + 24.0 * ipow(b, 3)) /
                       (ipow(n, 3) * ipow(u, 7)) +
                   b * (1.0 + 22.0 * b + 58.0 * b * b + 24.0 * ipow(b, 3)) /
                       (ipow(n, 4) * ipow(u, 8));
        default:
            unsupported_order("raw moment", j);
    }
}

double central_moment(int s, const OperatorParams& params, double x) {
    const double n = static_cast<double>(params.n);
    const double b = params.beta.value();
    const double u = 1.0 - b;
    switch (s) {
        case 1:
            return x * b / u + b / (n * ipow(u, 2));
        case 2:
            return x * x * b * b / ipow(u, 2) + x * (1.0 + 2.0 * b * b) / (n * ipow(u, 3)) +
                   b * (1.0 + 2.0 * b) / (n * n * ipow(u, 4));
        case 3:
            return ipow(x * b, 3) / ipow(u, 3) +
                   3.0 * x * x * b * (1.0 + b * b) / (n * ipow(u, 4)) +
                   x * (1.0 + 5.0 * b + 3.0 * b * b + 6.0 * ipow(b, 3)) / (n * n * ipow(u, 5)) +
                   b * (1.0 + 8.0 * b + 6.0 * b * b) / (ipow(n, 3) * ipow(u, 6));
        case 4:
            return ipow(x * b, 4) / ipow(u, 4) +
                   2.0 * ipow(x, 3) * b * b * (3.0 + 2.0 * b * b) / (n * ipow(u, 5)) +
                   x * x * (3.0 + 4.0 * b + 20.0 * b * b + 6.0 * ipow(b, 3) + 12.0 * ipow(b, 4)) /
                       (n * n * ipow(u, 6)) +
                   x * (1.0 + 18.0 * b + 30.0 * b * b + 32.0 * ipow(b, 3) + 24.0 * ipow(b, 4)) /
                       (ipow(n, 3) * ipow(u, 7)) +
                   b * (1.0 + 22.0 * b + 58.0 * b * b + 24.0 * ipow(b, 3)) /
                       (ipow(n, 4) * ipow(u, 8));
        default:
            unsupported_order("central moment", s);
    }
}

SeriesResult central_moment_series(int s, const OperatorParams& params, double x,
                                   const TruncationPolicy& policy) {
    if (s < 1 || s > 8) unsupported_order("central moment series", s);
    if (!(x >= 0.0)) throw std::domain_error("central_moment_series: x must be >= 0");
    const double n = static_cast<double>(params.n);
    auto g = [=](std::uint64_t k) { return ipow(static_cast<double>(k) / n - x, s); };
    return series_sum(g, n * x, params.beta, WeightKind::NewFamily, policy,
                      GrowthEnvelope{s, n});
}

double second_central_bound(const OperatorParams& params, double x) {
    const double n = static_cast<double>(params.n);
    const double b = params.beta.value();
    const double u = 1.0 - b;
    return (1.0 + (2.0 + n) * b * b) / (n * ipow(u, 4)) * (x * (1.0 + x) + 1.0 / n);
}

double fourth_central_bound(const OperatorParams& params, double x) {
    const double n = static_cast<double>(params.n);
    const double b = params.beta.value();
    return 267.0 * (x + x * x + ipow(x, 3) + ipow(x, 4)) / (ipow(n, 4) * ipow(1.0 - b, 8));
}

bool fourth_bound_dominates(const OperatorParams& params, double x) {
    return fourth_central_bound(params, x) >= central_moment(4, params, x);
}

}  // namespace approxop
