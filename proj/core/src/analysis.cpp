#include "approxop/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace approxop {

namespace {

// Base-point grids for the moduli sup searches are capped at this many
// points; offsets h keep their fine grid, so small-delta calls stay cheap
// even on wide windows.
constexpr int kMaxBasePoints = 4096;

double pow_int(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// B = (1 + (2+n) beta^2) / (n (1-beta)^4), the factor of the second-moment bound.
double moment_bound_factor(const OperatorParams& params) {
    const double n = static_cast<double>(params.n);
    const double b = params.beta.value();
    return (1.0 + (2.0 + n) * b * b) / (n * pow_int(1.0 - b, 4));
}

double delta_sq(const OperatorParams& params, double x) {
    return x * (1.0 + x) + 1.0 / static_cast<double>(params.n);
}

}  // namespace

std::vector<double> Domain::grid() const {
    std::vector<double> pts;
    const auto m = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9));
    pts.reserve(m + 2);
    for (std::size_t i = 0; i <= m; ++i) pts.push_back(a + static_cast<double>(i) * step);
    if (pts.back() < b - 1e-12 * (b - a)) pts.push_back(b);
    return pts;
}

void BoundInputs::validate() const {
    if (!(M_f >= 0.0)) throw std::domain_error("bound inputs: M_f must be >= 0");
    if (!(a > 0.0)) throw std::domain_error("bound inputs: a must be > 0");
    if (!(C > 0.0)) throw std::domain_error("bound inputs: C must be > 0");
    if (!(alpha_exp > 0.0 && alpha_exp <= 1.0))
        throw std::domain_error("bound inputs: alpha_exp must lie in (0, 1]");
    if (!(dist_E >= 0.0)) throw std::domain_error("bound inputs: dist_E must be >= 0");
}

double modulus_continuity(const std::function<double(double)>& f, double a, double delta,
                          double step) {
    if (!(a > 0.0) || !(delta > 0.0)) throw std::domain_error("modulus: empty grid");
    if (delta > a) throw std::domain_error("modulus: delta must not exceed a");
    const double h_step = step > 0.0 ? step : delta / 100.0;
    if (h_step > delta / 10.0 + 1e-15 * delta)
        throw std::domain_error("modulus: step must be <= delta/10");

    const double x_step = std::max(h_step, a / kMaxBasePoints);
    double sup = 0.0;
    const auto n_h = static_cast<std::size_t>(std::floor(delta / h_step + 1e-9));
    for (std::size_t j = 1; j <= n_h; ++j) {
        const double h = std::min(static_cast<double>(j) * h_step, delta);
        const auto n_x = static_cast<std::size_t>(std::floor((a - h) / x_step + 1e-9));
        for (std::size_t i = 0; i <= n_x; ++i) {
            const double x = static_cast<double>(i) * x_step;
            sup = std::max(sup, std::abs(f(x + h) - f(x)));
        }
    }
    return sup;
}

double second_modulus(const std::function<double(double)>& f, double delta,
                      const Domain& domain, double step) {
    if (!(delta > 0.0)) throw std::domain_error("second modulus: delta must be > 0");
    const double h_step = step > 0.0 ? step : delta / 100.0;
    if (domain.b - domain.a < 2.0 * h_step)
        throw std::domain_error("second modulus: domain cannot accommodate x + 2h");

    const double x_step = std::max(domain.step, (domain.b - domain.a) / kMaxBasePoints);
    double sup = 0.0;
    const auto n_h = static_cast<std::size_t>(std::floor(delta / h_step + 1e-9));
    for (std::size_t j = 1; j <= n_h; ++j) {
        const double h = std::min(static_cast<double>(j) * h_step, delta);
        if (domain.a + 2.0 * h > domain.b) break;
        const double x_end = domain.b - 2.0 * h;
        const auto n_x = static_cast<std::size_t>(std::floor((x_end - domain.a) / x_step + 1e-9));
        for (std::size_t i = 0; i <= n_x; ++i) {
            const double x = domain.a + static_cast<double>(i) * x_step;
            sup = std::max(sup, std::abs(f(x + 2.0 * h) - 2.0 * f(x + h) + f(x)));
        }
    }
    return sup;
}

double weighted_norm(const std::function<double(double)>& f, double x_max, double step) {
    if (!(x_max > 0.0) || !(step > 0.0)) throw std::domain_error("weighted norm: bad grid");
    double sup = 0.0;
    for (double x : Domain(0.0, x_max, std::min(step, x_max)).grid())
        sup = std::max(sup, std::abs(f(x)) / (1.0 + x * x));
    return sup;
}

double local_approx_bound(const ScalarFunction& f, const OperatorParams& params, double x,
                          const BoundInputs& inputs, double step) {
    inputs.validate();
    if (!(x >= 0.0)) throw std::domain_error("local bound: x must be >= 0");
    const double n = static_cast<double>(params.n);
    const double b = params.beta.value();
    const double q = b * (1.0 + n * x * (1.0 - b)) / (n * pow_int(1.0 - b, 2));
    const double inner = moment_bound_factor(params) * delta_sq(params, x) + q * q;

    const double window = inputs.a;
    const double h2 = std::min(0.5 * std::sqrt(inner), window / 2.0);
    const double w2 =
        second_modulus(f.eval, h2, Domain(0.0, window, window / kMaxBasePoints), step);
    // at beta = 0 the whole argument of the first-order modulus vanishes
    const double w1 = q > 0.0 ? modulus_continuity(f.eval, window, std::min(q, window), step)
                              : 0.0;
    return inputs.C * w2 + w1;
}

double lipschitz_bound(const BoundInputs& inputs, const OperatorParams& params, double x) {
    inputs.validate();
    if (!(x >= 0.0)) throw std::domain_error("lipschitz bound: x must be >= 0");
    const double base = moment_bound_factor(params) * delta_sq(params, x);
    return inputs.M_f * (std::pow(base, inputs.alpha_exp / 2.0) +
                         2.0 * std::pow(inputs.dist_E, inputs.alpha_exp));
}

double rate_bound(const ScalarFunction& f, const BoundInputs& inputs,
                  const OperatorParams& params, double step) {
    inputs.validate();
    const double a = inputs.a;
    const double big_k = 6.0 * inputs.M_f * (1.0 + a * a) * (1.0 + a + a * a);
    const double t = moment_bound_factor(params) * big_k;
    if (t == 0.0) return 0.0;  // M_f = 0: the modulus argument collapses too
    const double delta = std::min(std::sqrt(t), a + 1.0);
    return t + 2.0 * modulus_continuity(f.eval, a + 1.0, delta, step);
}

double voronovskaya_residual(const ScalarFunction& f, std::int64_t n, BetaParam beta,
                             double x, const TruncationPolicy& policy) {
    if (!f.d2)
        throw std::invalid_argument("voronovskaya residual requires f with a second derivative");
    const OperatorParams params(n, beta);
    const SeriesResult r = apply_p(f, params, x, policy);
    return static_cast<double>(n) * (r.value - f.eval(x));
}

}  // namespace approxop
