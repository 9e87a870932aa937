#include "approxop/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "approxop/moments.hpp"
#include "approxop/operators.hpp"
#include "approxop/weights.hpp"

namespace approxop {

namespace {

constexpr double kBetaCap = 1.0 - 1e-9;

void check_n_list(const std::vector<std::int64_t>& n_list) {
    if (n_list.empty()) throw std::domain_error("n list must be nonempty");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 1) throw std::domain_error("n values must be >= 1");
        if (i > 0 && n_list[i] <= n_list[i - 1])
            throw std::domain_error("n list must be strictly ascending");
    }
}

void check_asymptotic_schedule(const BetaSchedule& schedule) {
    // n beta_n -> 0 is what the asymptotic limits need; p > 1 guarantees it
    if (schedule.c != 0.0 && !(schedule.p > 1.0))
        throw std::domain_error("asymptotic runs need a schedule with p > 1 (or c = 0)");
}

// Smallest M with |f(x)| <= M (1 + x^2) derivable from f's growth class.
double quadratic_growth_constant(const ScalarFunction& f) {
    switch (*f.growth) {
        case GrowthClass::Bounded: return f.growth_constant;
        case GrowthClass::Linear: return 2.0 * f.growth_constant;  // 1+x <= 2(1+x^2)
        case GrowthClass::Quadratic: return f.growth_constant;
    }
    return f.growth_constant;
}

}  // namespace

double BetaSchedule::beta_for(std::int64_t n) const {
    if (n < 1) throw std::domain_error("schedule evaluated at n < 1");
    return std::min(c * std::pow(static_cast<double>(n), -p), kBetaCap);
}

std::vector<std::int64_t> default_n_list() { return {10, 32, 100, 316, 1000, 3162, 10000}; }

ExperimentReport run_convergence(const ScalarFunction& f, const BetaSchedule& schedule,
                                 const std::vector<std::int64_t>& n_list, const Domain& domain,
                                 const TruncationPolicy& policy) {
    check_n_list(n_list);
    const auto grid = domain.grid();

    ExperimentReport report;
    std::vector<double> sup_errors;
    for (std::int64_t n : n_list) {
        const OperatorParams params(n, BetaParam(schedule.beta_for(n)));
        double sup = 0.0, arg = grid.front(), residual = 0.0;
        for (double x : grid) {
            const SeriesResult r = apply_p(f, params, x, policy);
            const double err = std::abs(r.value - f.eval(x));
            residual = std::max(residual, r.residual_mass);
            if (err > sup) {
                sup = err;
                arg = x;
            }
        }
        sup_errors.push_back(sup);

        ReportRow row{"convergence", n, params.beta.value(), arg, sup, 0.0, {}, residual};
        if (f.growth) {
            BoundInputs inputs;
            inputs.M_f = quadratic_growth_constant(f);
            inputs.a = domain.b;
            row.bound = rate_bound(f, inputs, params);
        }
        report.rows.push_back(std::move(row));
    }
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (!(sup_errors[i - 1] > 0.0 && sup_errors[i] > 0.0)) continue;
        const double order = std::log(sup_errors[i - 1] / sup_errors[i]) /
                             std::log(static_cast<double>(n_list[i]) /
                                      static_cast<double>(n_list[i - 1]));
        report.rows.push_back({"convergence/order", n_list[i],
                               schedule.beta_for(n_list[i]), 0.0, order, 0.0, {}, 0.0});
    }
    report.sort_rows();
    return report;
}

ExperimentReport run_voronovskaya(const ScalarFunction& f, const BetaSchedule& schedule,
                                  const std::vector<std::int64_t>& n_list,
                                  const std::vector<double>& x_list,
                                  const TruncationPolicy& policy) {
    check_n_list(n_list);
    check_asymptotic_schedule(schedule);
    if (!f.d2) throw std::invalid_argument("voronovskaya run requires f with a second derivative");
    if (x_list.empty()) throw std::domain_error("x list must be nonempty");

    ExperimentReport report;
    for (std::int64_t n : n_list) {
        const OperatorParams params(n, BetaParam(schedule.beta_for(n)));
        for (double x : x_list) {
            const SeriesResult r = apply_p(f, params, x, policy);
            const double measured = static_cast<double>(n) * (r.value - f.eval(x));
            const double reference = 0.5 * x * f.d2(x);
            report.rows.push_back({"voronovskaya", n, params.beta.value(), x, measured,
                                   reference, {}, r.residual_mass});
        }
    }
    report.sort_rows();
    return report;
}

ExperimentReport run_fourth_moment_limit(const BetaSchedule& schedule,
                                         const std::vector<std::int64_t>& n_list,
                                         const std::vector<double>& x_list,
                                         const TruncationPolicy& policy) {
    (void)policy;  // closed forms only; nothing to truncate
    check_n_list(n_list);
    check_asymptotic_schedule(schedule);
    if (x_list.empty()) throw std::domain_error("x list must be nonempty");

    ExperimentReport report;
    for (std::int64_t n : n_list) {
        const OperatorParams params(n, BetaParam(schedule.beta_for(n)));
        const double n2 = static_cast<double>(n) * static_cast<double>(n);
        for (double x : x_list) {
            const double measured = n2 * central_moment(4, params, x);
            report.rows.push_back({"fourth-moment-limit", n, params.beta.value(), x, measured,
                                   3.0 * x * x, {}, 0.0});
        }
    }
    report.sort_rows();
    return report;
}

ExperimentReport run_weighted(const ScalarFunction& f, const BetaSchedule& schedule,
                              const std::vector<std::int64_t>& n_list, double x_max,
                              double step, const TruncationPolicy& policy) {
    check_n_list(n_list);
    if (!f.growth)
        throw std::invalid_argument("weighted run requires f with a certified growth class");
    const auto grid = Domain(0.0, x_max, step).grid();

    ExperimentReport report;
    for (std::int64_t n : n_list) {
        const OperatorParams params(n, BetaParam(schedule.beta_for(n)));
        double sup = 0.0, arg = 0.0, residual = 0.0;
        for (double x : grid) {
            const SeriesResult r = apply_p(f, params, x, policy);
            const double v = std::abs(r.value - f.eval(x)) / (1.0 + x * x);
            residual = std::max(residual, r.residual_mass);
            if (v > sup) {
                sup = v;
                arg = x;
            }
        }
        report.rows.push_back({"weighted", n, params.beta.value(), arg, sup, 0.0, {}, residual});
    }
    report.sort_rows();
    return report;
}

ExperimentReport run_moment_validation(const std::vector<std::int64_t>& n_list,
                                       const std::vector<double>& beta_list,
                                       const std::vector<double>& x_list,
                                       const TruncationPolicy& policy) {
    check_n_list(n_list);
    if (beta_list.empty() || x_list.empty())
        throw std::domain_error("moment validation grid must be nonempty");

    ExperimentReport report;
    for (std::int64_t n : n_list) {
        const double nd = static_cast<double>(n);
        for (double b : beta_list) {
            const OperatorParams params(n, BetaParam(b));
            for (double x : x_list) {
                const double alpha = nd * x;
                for (int j = 0; j <= 4; ++j) {
                    auto g = [=](std::uint64_t k) {
                        double t = static_cast<double>(k) / nd, r = 1.0;
                        for (int i = 0; i < j; ++i) r *= t;
                        return r;
                    };
                    const SeriesResult s = series_sum(g, alpha, params.beta,
                                                      WeightKind::NewFamily, policy,
                                                      GrowthEnvelope{j, nd});
                    report.rows.push_back({"raw-moment-" + std::to_string(j), n, b, x, s.value,
                                           raw_moment(j, params, x), {}, s.residual_mass});
                }
                for (int s = 1; s <= 4; ++s) {
                    const SeriesResult r = central_moment_series(s, params, x, policy);
                    report.rows.push_back({"central-moment-" + std::to_string(s), n, b, x,
                                           r.value, central_moment(s, params, x), {},
                                           r.residual_mass});
                }
                for (int r = 0; r <= 4; ++r) {
                    const SeriesResult s = s_series(r, alpha, params.beta, policy);
                    report.rows.push_back({"s-function-" + std::to_string(r), n, b, x, s.value,
                                           s_closed(r, alpha, params.beta), {},
                                           s.residual_mass});
                }
                const double b2 = second_central_bound(params, x);
                report.rows.push_back({"bound2-margin", n, b, x,
                                       b2 - central_moment(2, params, x), 0.0, b2, 0.0});
                const double b4 = fourth_central_bound(params, x);
                report.rows.push_back({"bound4-margin", n, b, x,
                                       b4 - central_moment(4, params, x), 0.0, b4, 0.0});
            }
        }
    }
    report.sort_rows();
    return report;
}

}  // namespace approxop
