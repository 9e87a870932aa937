#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "approxop/experiments.hpp"
#include "approxop/functions.hpp"
#include "approxop/moments.hpp"

using namespace approxop;

namespace {

const TruncationPolicy kPolicy{};

std::vector<ReportRow> rows_named(const ExperimentReport& r, const std::string& name) {
    std::vector<ReportRow> out;
    for (const auto& row : r.rows)
        if (row.experiment == name) out.push_back(row);
    return out;
}

bool is_sorted_canonically(const ExperimentReport& r) {
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        const auto& a = r.rows[i - 1];
        const auto& b = r.rows[i];
        if (std::tie(a.experiment, a.n, a.x, a.beta) > std::tie(b.experiment, b.n, b.x, b.beta))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("beta schedules") {
    const BetaSchedule s(1.0, 1.0);
    CHECK(s.beta_for(10) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(s.beta_for(10000) == doctest::Approx(1e-4).epsilon(1e-15));
    CHECK(s.beta_for(1) < 1.0);  // capped below one

    const BetaSchedule zero(0.0, 2.0);
    CHECK(zero.beta_for(7) == 0.0);

    // monotone for n >= 1
    double prev = 1.0;
    for (std::int64_t n : default_n_list()) {
        const double b = s.beta_for(n);
        CHECK(b < prev);
        CHECK(b >= 0.0);
        prev = b;
    }

    CHECK_THROWS_AS(BetaSchedule(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(BetaSchedule(1.0, 0.0), std::domain_error);
}

TEST_CASE("run_convergence") {
    const Domain domain(0.0, 2.0, 0.05);
    const std::vector<std::int64_t> ns{10, 100, 1000, 10000};

    SUBCASE("constants are reproduced exactly") {
        const auto rep = run_convergence(make_scalar_function("poly:1"), BetaSchedule(1.0, 1.0),
                                         ns, domain, kPolicy);
        for (const auto& row : rows_named(rep, "convergence")) CHECK(row.measured < 1e-12);
    }

    SUBCASE("t is exact under the Szasz schedule c = 0") {
        const auto rep = run_convergence(make_scalar_function("poly:0,1"), BetaSchedule(0.0, 1.0),
                                         ns, domain, kPolicy);
        for (const auto& row : rows_named(rep, "convergence")) CHECK(row.measured < 1e-12);
    }

    SUBCASE("exp-decay sup errors decrease strictly and respect the rate bound") {
        const auto rep = run_convergence(make_scalar_function("exp-decay"),
                                         BetaSchedule(1.0, 1.0), ns, domain, kPolicy);
        const auto rows = rows_named(rep, "convergence");
        REQUIRE(rows.size() == ns.size());
        for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].measured < rows[i - 1].measured);
        for (const auto& row : rows) {
            REQUIRE(row.bound.has_value());
            CHECK(*row.bound >= row.measured);
            CHECK(row.residual_mass < kPolicy.epsilon);
        }
        // empirical order rows accompany each consecutive pair
        CHECK(rows_named(rep, "convergence/order").size() == ns.size() - 1);
        CHECK(is_sorted_canonically(rep));
    }

    CHECK_THROWS_AS(run_convergence(make_scalar_function("sin"), BetaSchedule(1.0, 1.0), {},
                                    domain, kPolicy),
                    std::domain_error);
    CHECK_THROWS_AS(run_convergence(make_scalar_function("sin"), BetaSchedule(1.0, 1.0),
                                    {10, 10}, domain, kPolicy),
                    std::domain_error);
}

TEST_CASE("run_voronovskaya") {
    SUBCASE("t^2 under beta = 0 is exact: measured = reference = x") {
        const auto rep = run_voronovskaya(make_scalar_function("poly:0,0,1"),
                                          BetaSchedule(0.0, 2.0), {10, 100}, {0.5, 1.0, 2.0},
                                          {1e-14, 4'000'000});
        for (const auto& row : rep.rows) {
            CHECK(row.reference == doctest::Approx(row.x).epsilon(1e-15));
            CHECK(std::abs(row.measured - row.x) <= 1e-12);
        }
    }

    SUBCASE("t^3 under beta = 0: measured = 3 x^2 + x/n") {
        const auto rep = run_voronovskaya(make_scalar_function("poly:0,0,0,1"),
                                          BetaSchedule(0.0, 2.0), {100}, {2.0}, kPolicy);
        REQUIRE(rep.rows.size() == 1);
        CHECK(rep.rows[0].reference == doctest::Approx(12.0).epsilon(1e-15));
        CHECK(rep.rows[0].measured == doctest::Approx(12.0 + 2.0 / 100.0).epsilon(1e-9));
    }

    SUBCASE("exp-decay under p = 2 approaches the limit") {
        const auto rep = run_voronovskaya(make_scalar_function("exp-decay"),
                                          BetaSchedule(1.0, 2.0), {1000}, {1.0}, kPolicy);
        REQUIRE(rep.rows.size() == 1);
        const double ref = 0.5 * std::exp(-1.0);
        CHECK(rep.rows[0].reference == doctest::Approx(ref).epsilon(1e-15));
        CHECK(std::abs(rep.rows[0].measured - ref) / ref < 5e-3);
    }

    // p <= 1 does not drive n beta_n to zero
    CHECK_THROWS_AS(run_voronovskaya(make_scalar_function("poly:0,0,1"), BetaSchedule(1.0, 1.0),
                                     {10}, {1.0}, kPolicy),
                    std::domain_error);
    CHECK_THROWS_AS(run_voronovskaya(make_scalar_function("abs:1"), BetaSchedule(1.0, 2.0), {10},
                                     {1.0}, kPolicy),
                    std::invalid_argument);
}

TEST_CASE("run_fourth_moment_limit") {
    SUBCASE("beta = 0 closed form: n^2 mu4 = 3 x^2 + x/n") {
        const auto rep =
            run_fourth_moment_limit(BetaSchedule(0.0, 2.0), {100}, {0.0, 1.0}, kPolicy);
        REQUIRE(rep.rows.size() == 2);
        CHECK(rep.rows[0].x == 0.0);
        CHECK(rep.rows[0].measured == 0.0);
        CHECK(rep.rows[0].reference == 0.0);
        CHECK(rep.rows[1].measured == doctest::Approx(3.01).epsilon(1e-14));
        CHECK(rep.rows[1].reference == doctest::Approx(3.0).epsilon(1e-15));
    }

    SUBCASE("p = 2 schedule converges to 3 x^2") {
        const auto rep = run_fourth_moment_limit(BetaSchedule(1.0, 2.0), {1000}, {2.0}, kPolicy);
        REQUIRE(rep.rows.size() == 1);
        CHECK(std::abs(rep.rows[0].measured - 12.0) / 12.0 < 1e-2);
    }

    CHECK_THROWS_AS(run_fourth_moment_limit(BetaSchedule(1.0, 0.5), {10}, {1.0}, kPolicy),
                    std::domain_error);
}

TEST_CASE("run_weighted") {
    const std::vector<std::int64_t> ns{10, 100, 1000, 10000};

    SUBCASE("constants give zero") {
        const auto rep = run_weighted(make_scalar_function("poly:1"), BetaSchedule(1.0, 1.0),
                                      {10, 100}, 100.0, 1.0, kPolicy);
        for (const auto& row : rep.rows) CHECK(row.measured < 1e-12);
    }

    SUBCASE("t under beta = 0 gives zero") {
        const auto rep = run_weighted(make_scalar_function("poly:0,1"), BetaSchedule(0.0, 1.0),
                                      {10, 100}, 100.0, 1.0, kPolicy);
        for (const auto& row : rep.rows) CHECK(row.measured < 1e-12);
    }

    SUBCASE("t^2 norms decrease toward zero under c=1, p=1") {
        const auto rep = run_weighted(make_scalar_function("poly:0,0,1"), BetaSchedule(1.0, 1.0),
                                      ns, 100.0, 1.0, kPolicy);
        REQUIRE(rep.rows.size() == ns.size());
        for (std::size_t i = 1; i < rep.rows.size(); ++i)
            CHECK(rep.rows[i].measured < rep.rows[i - 1].measured);
        CHECK(rep.rows.back().measured < 1e-2);
        for (const auto& row : rep.rows) CHECK(row.residual_mass < kPolicy.epsilon);
    }

    // no certified growth class: not in the weighted space contract
    CHECK_THROWS_AS(run_weighted(make_scalar_function("poly:0,0,0,1"), BetaSchedule(1.0, 1.0),
                                 {10}, 100.0, 1.0, kPolicy),
                    std::invalid_argument);
}

TEST_CASE("run_moment_validation") {
    const std::vector<std::int64_t> ns{1, 5, 10, 50};
    const std::vector<double> betas{0.0, 0.1, 0.5, 0.9};
    const std::vector<double> xs{0.1, 1.0, 5.0};
    const auto rep = run_moment_validation(ns, betas, xs, kPolicy);

    // 5 raw + 4 central + 5 S + 2 margins per grid point
    CHECK(rep.rows.size() == ns.size() * betas.size() * xs.size() * 16);
    CHECK(is_sorted_canonically(rep));

    for (const auto& row : rep.rows) {
        CAPTURE(row.experiment);
        CAPTURE(row.n);
        CAPTURE(row.beta);
        CAPTURE(row.x);
        CHECK(row.residual_mass < kPolicy.epsilon);
        if (row.experiment.rfind("bound", 0) == 0) continue;
        // measured = series, reference = closed form
        const double tol = row.beta == 0.0
                               ? std::max(1e-11 * std::abs(row.reference), 1e-13)
                               : std::max(1e-9 * std::abs(row.reference), 1e-12);
        CHECK(std::abs(row.measured - row.reference) <= tol);
    }

    // the second-moment bound dominates everywhere in 0 < beta < 1
    for (const auto& row : rows_named(rep, "bound2-margin"))
        if (row.beta > 0.0) CHECK(row.measured >= 0.0);
}

TEST_CASE("reports are deterministic") {
    const auto make = [] {
        return run_moment_validation({5, 10}, {0.0, 0.5}, {1.0}, kPolicy);
    };
    const ExperimentReport a = make();
    const ExperimentReport b = make();
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_json(a) == to_json(b));

    // header-only serialization for empty reports
    CHECK(to_csv(ExperimentReport{}) ==
          "experiment,n,beta,x,measured,reference,bound,residual_mass\n");
}
