#pragma once

// Brute-force long-double series oracles, independent of the library's
// log-space evaluation path. Weights are computed from the raw formulas with
// logl/lgammal; sums run from k = 0 until the terms are dead.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

namespace oracle {

inline long double log_weight_new(std::uint64_t k, long double alpha, long double beta) {
    const long double lam = alpha + beta * static_cast<long double>(k);
    if (k == 0) return std::log(1.0L - beta) - lam;  // 0^0 = 1
    if (lam == 0.0L) return -std::numeric_limits<long double>::infinity();
    return std::log(1.0L - beta) + static_cast<long double>(k) * std::log(lam) - lam -
           std::lgamma(static_cast<long double>(k) + 1.0L);
}

inline long double log_weight_jain(std::uint64_t k, long double alpha, long double beta) {
    if (k == 0) return -alpha;
    if (alpha == 0.0L) return -std::numeric_limits<long double>::infinity();
    const long double lam = alpha + beta * static_cast<long double>(k);
    return std::log(alpha) + (static_cast<long double>(k) - 1.0L) * std::log(lam) - lam -
           std::lgamma(static_cast<long double>(k) + 1.0L);
}

inline long double series(const std::function<long double(std::uint64_t)>& g,
                          long double alpha, long double beta, bool jain = false,
                          std::uint64_t k_max = 5'000'000) {
    long double sum = 0.0L;
    long double abs_sum = 0.0L;
    const long double mean = alpha / (1.0L - beta) + (jain ? 0.0L : beta / ((1.0L - beta) * (1.0L - beta)));
    int tiny = 0;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        const long double lw = jain ? log_weight_jain(k, alpha, beta)
                                    : log_weight_new(k, alpha, beta);
        const long double t = std::exp(lw) * g(k);
        sum += t;
        abs_sum += std::abs(t);
        if (static_cast<long double>(k) > mean + 10.0L &&
            std::abs(t) < 1e-26L * (abs_sum + 1e-30L)) {
            if (++tiny >= 16) break;
        } else {
            tiny = 0;
        }
    }
    return sum;
}

inline long double weight_sum(long double alpha, long double beta, bool jain = false) {
    return series([](std::uint64_t) { return 1.0L; }, alpha, beta, jain);
}

}  // namespace oracle
