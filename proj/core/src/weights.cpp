#include "approxop/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace approxop {

namespace {

constexpr long double kLog2PiL = 1.837877066409345483560659472811235279723L;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Computed residual mass cannot be resolved below this in double arithmetic.
constexpr double kResidualFloor = 1e-15;

// All pmf assembly runs in extended precision: rounding the finished log to
// double is the only double-rounding step, so weight() built on expl() stays
// within a couple of ulps of the exact value even far out in the tails.

// log(n!) - log(sqrt(2 pi n) (n/e)^n) for n = 1..30, 40-digit arithmetic.
constexpr long double kStirlerrTable[31] = {
    0.0L,
    0.0810614667953272582196703L,    // n=1
    0.0413406959554092940938221L,    // n=2
    0.0276779256849983391487893L,    // n=3
    0.0207906721037650931115228L,    // n=4
    0.0166446911898211921631949L,    // n=5
    0.0138761288230707479987457L,    // n=6
    0.0118967099458917700950557L,    // n=7
    0.0104112652619720964974786L,    // n=8
    0.00925546218271273291772864L,   // n=9
    0.00833056343336287125646932L,   // n=10
    0.00757367548795184079497202L,   // n=11
    0.00694284010720952986566415L,   // n=12
    0.00640899418800420706843963L,   // n=13
    0.00595137011275884773562442L,   // n=14
    0.00555473355196280137103869L,   // n=15
    0.005207655919609640440718L,     // n=16
    0.00490139594843473786071682L,   // n=17
    0.00462915374933402859242721L,   // n=18
    0.00438556024923232426828774L,   // n=19
    0.00416631969199692245746292L,   // n=20
    0.00396795421864085961728764L,   // n=21
    0.00378761806844443457786668L,   // n=22
    0.0036229602246830947073812L,    // n=23
    0.00347202138297876696294512L,   // n=24
    0.00333315563672809287580702L,   // n=25
    0.00320497022805503801118416L,   // n=26
    0.00308627868260877706325624L,   // n=27
    0.00297606398355040882602116L,   // n=28
    0.00287344936235246638755235L,   // n=29
    0.0027776749297526936035949L,    // n=30
};

long double stirlerr_l(std::uint64_t n) {
    constexpr long double S0 = 1.0L / 12.0L;
    constexpr long double S1 = 1.0L / 360.0L;
    constexpr long double S2 = 1.0L / 1260.0L;
    constexpr long double S3 = 1.0L / 1680.0L;
    constexpr long double S4 = 1.0L / 1188.0L;

    if (n <= 30) return kStirlerrTable[n];
    const long double nn = static_cast<long double>(n);
    const long double n2 = nn * nn;
    if (n > 500) return (S0 - S1 / n2) / nn;
    if (n > 80) return (S0 - (S1 - S2 / n2) / n2) / nn;
    return (S0 - (S1 - (S2 - (S3 - S4 / n2) / n2) / n2) / n2) / nn;
}

// deviance term x log(x/np) + np - x without cancellation near x = np
long double bd0_l(long double x, long double np) {
    if (std::abs(x - np) < 0.1L * (x + np)) {
        const long double v = (x - np) / (x + np);
        long double s = (x - np) * v;
        long double ej = 2.0L * x * v;
        const long double v2 = v * v;
        for (int j = 1;; ++j) {
            ej *= v2;
            const long double s1 = s + ej / (2 * j + 1);
            if (s1 == s) return s1;
            s = s1;
        }
    }
    return x * std::log(x / np) + np - x;
}

long double log_poisson_pmf_l(std::uint64_t k, long double lambda) {
    if (lambda == 0.0L)
        return k == 0 ? 0.0L : -std::numeric_limits<long double>::infinity();
    if (k == 0) return -lambda;
    const long double kd = static_cast<long double>(k);
    return -stirlerr_l(k) - bd0_l(kd, lambda) - 0.5L * (kLog2PiL + std::log(kd));
}

// log of the weight in extended precision; -inf for exact zeros
long double log_weight_l(std::uint64_t k, double alpha, double b, WeightKind kind) {
    const long double lambda =
        static_cast<long double>(alpha) + static_cast<long double>(b) * static_cast<long double>(k);
    if (kind == WeightKind::NewFamily)
        return std::log1p(-static_cast<long double>(b)) + log_poisson_pmf_l(k, lambda);
    // Jain: a (a+bk)^{k-1} e^{-(a+bk)} / k! = (a/lambda) * Poisson(k; lambda)
    if (k == 0) return -static_cast<long double>(alpha);
    if (alpha == 0.0)
        return -std::numeric_limits<long double>::infinity();
    return std::log(static_cast<long double>(alpha) / lambda) + log_poisson_pmf_l(k, lambda);
}

// Neumaier-compensated accumulator; keeps 1 - sum meaningful near sum = 1.
struct Accum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace

namespace detail {

double stirlerr(std::uint64_t n) { return static_cast<double>(stirlerr_l(n)); }

double bd0(double x, double np) { return static_cast<double>(bd0_l(x, np)); }

double log_poisson_pmf(std::uint64_t k, double lambda) {
    return static_cast<double>(log_poisson_pmf_l(k, lambda));
}

double weight_mean(double alpha, double beta, WeightKind kind) {
    const double om = 1.0 - beta;
    if (kind == WeightKind::Jain) return alpha / om;
    return alpha / om + beta / (om * om);
}

}  // namespace detail

double log_weight(std::uint64_t k, double alpha, BetaParam beta, WeightKind kind) {
    if (!(alpha >= 0.0)) throw std::domain_error("weight: alpha must be >= 0");
    const long double lw = log_weight_l(k, alpha, beta.value(), kind);
    if (std::isinf(static_cast<double>(lw))) return kNegInf;
    return static_cast<double>(lw);
}

double weight(std::uint64_t k, double alpha, BetaParam beta, WeightKind kind) {
    if (!(alpha >= 0.0)) throw std::domain_error("weight: alpha must be >= 0");
    const long double lw = log_weight_l(k, alpha, beta.value(), kind);
    return std::min(static_cast<double>(std::exp(lw)), 1.0);
}

std::uint64_t truncation_index(double alpha, BetaParam beta, WeightKind kind,
                               const TruncationPolicy& policy) {
    policy.validate();
    if (!(alpha >= 0.0)) throw std::domain_error("truncation_index: alpha must be >= 0");
    Accum mass;
    for (std::uint64_t k = 0; k <= policy.max_terms; ++k) {
        mass.add(weight(k, alpha, beta, kind));
        const double residual = (1.0 - mass.sum) - mass.comp;
        if (residual < policy.epsilon) return k;
    }
    throw CapExhaustedError(policy.max_terms, mass.value());
}

SeriesResult series_sum(const std::function<double(std::uint64_t)>& g, double alpha,
                        BetaParam beta, WeightKind kind, const TruncationPolicy& policy,
                        GrowthEnvelope envelope) {
    policy.validate();
    if (!(alpha >= 0.0)) throw std::domain_error("series_sum: alpha must be >= 0");
    if (!(envelope.scale > 0.0)) throw std::domain_error("series_sum: envelope scale must be > 0");

    // Terms beyond the certified range must fall this far below the epsilon
    // scale for a few consecutive ks before a side of the window is closed.
    constexpr double kTinyFactor = 1e-3;
    constexpr int kTinyRun = 8;

    Accum mass;
    Accum value;
    double abs_sum = 0.0;
    std::uint64_t terms = 0;

    // Start near the distribution mean and grow the window outward; the
    // residual certificate 1 - captured mass is exact regardless of window
    // shape because the weights are a probability distribution.
    const double mean = detail::weight_mean(alpha, beta.value(), kind);
    const std::uint64_t k0 =
        static_cast<std::uint64_t>(std::max(0.0, std::min(std::floor(mean), 4.0e18)));

    auto add_term = [&](std::uint64_t k) -> double {
        const double w = weight(k, alpha, beta, kind);
        const double t = w * g(k);
        mass.add(w);
        value.add(t);
        abs_sum += std::abs(t);
        ++terms;
        return std::abs(t);
    };

    double last = add_term(k0);
    std::uint64_t lo = k0;
    std::uint64_t hi = k0;
    double last_lo = last;
    double last_hi = last;
    int tiny_lo = 0;
    int tiny_hi = 0;

    const auto tiny_threshold = [&] {
        return kTinyFactor * policy.epsilon * std::max(1.0, abs_sum);
    };
    const auto env_at = [&](std::uint64_t k) {
        if (envelope.degree <= 0) return 1.0;
        return std::max(1.0, std::pow(static_cast<double>(k) / envelope.scale,
                                      envelope.degree));
    };

    while (true) {
        const bool lo_open = lo > 0 && tiny_lo < kTinyRun;
        const bool hi_open = tiny_hi < kTinyRun;
        if (!lo_open && !hi_open) {
            const double residual = std::max(0.0, (1.0 - mass.sum) - mass.comp);
            const double required = std::max(policy.epsilon / env_at(hi), kResidualFloor);
            if (residual < required && residual < policy.epsilon)
                return {value.value(), residual, terms};
            // certified mass still short of target: reopen the window
            tiny_hi = 0;
            if (lo > 0) tiny_lo = 0;
            continue;
        }
        if (terms >= policy.max_terms)
            throw CapExhaustedError(terms, mass.value());

        // extend the side whose last term carried more mass
        if (lo_open && (!hi_open || last_lo > last_hi)) {
            last_lo = add_term(--lo);
            tiny_lo = last_lo < tiny_threshold() ? tiny_lo + 1 : 0;
        } else {
            last_hi = add_term(++hi);
            tiny_hi = last_hi < tiny_threshold() ? tiny_hi + 1 : 0;
        }
    }
}

}  // namespace approxop
