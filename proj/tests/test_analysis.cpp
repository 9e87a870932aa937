#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "approxop/analysis.hpp"
#include "approxop/moments.hpp"

using namespace approxop;

namespace {

const TruncationPolicy kPolicy{};

double ident(double x) { return x; }
double square(double x) { return x * x; }
double constant(double) { return 4.2; }

}  // namespace

TEST_CASE("domain grids") {
    const Domain d(0.0, 1.0, 0.25);
    const auto g = d.grid();
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);

    // non-dividing step still includes the right endpoint
    const auto g2 = Domain(0.0, 1.0, 0.3).grid();
    CHECK(g2.back() == 1.0);

    CHECK_THROWS_AS(Domain(1.0, 1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(Domain(-0.5, 1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(Domain(0.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(Domain(0.0, 1.0, 2.0), std::domain_error);
}

TEST_CASE("modulus of continuity") {
    CHECK(modulus_continuity(ident, 1.0, 0.25) == doctest::Approx(0.25).epsilon(1e-12));
    // t^2 on [0,1]: attained at the pair (0.9, 1.0)
    CHECK(modulus_continuity(square, 1.0, 0.1) == doctest::Approx(0.19).epsilon(1e-12));
    CHECK(modulus_continuity(constant, 2.0, 0.5) == 0.0);

    SUBCASE("nondecreasing in delta") {
        double prev = 0.0;
        for (double delta : {0.05, 0.1, 0.2, 0.4}) {
            const double w = modulus_continuity(square, 1.0, delta);
            CHECK(w >= prev);
            prev = w;
        }
    }

    SUBCASE("subadditive within grid tolerance") {
        const double step = 1e-3;
        const ScalarFunction fabs1 = make_scalar_function("abs:1");
        // Lipschitz constants on [0,1]: 2 for t^2, 1 for |t-1|
        const std::pair<std::function<double(double)>, double> fns[] = {{square, 2.0},
                                                                        {fabs1.eval, 1.0}};
        for (const auto& [f, lip] : fns)
            for (auto [d1, d2] : {std::pair{0.1, 0.1}, {0.1, 0.2}, {0.05, 0.3}}) {
                const double lhs = modulus_continuity(f, 1.0, d1 + d2, step);
                const double rhs = modulus_continuity(f, 1.0, d1, step) +
                                   modulus_continuity(f, 1.0, d2, step);
                CHECK(lhs <= rhs + 2.0 * step * lip);
            }
    }

    SUBCASE("domain errors") {
        CHECK_THROWS_AS(modulus_continuity(ident, 0.0, 0.1), std::domain_error);
        CHECK_THROWS_AS(modulus_continuity(ident, 1.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(modulus_continuity(ident, 1.0, 2.0), std::domain_error);   // delta > a
        CHECK_THROWS_AS(modulus_continuity(ident, 1.0, 0.1, 0.05), std::domain_error);  // step > delta/10
    }
}

TEST_CASE("second modulus") {
    const Domain window(0.0, 1.0, 1e-3);

    // affine functions have vanishing second differences (up to grid rounding)
    CHECK(second_modulus(ident, 0.1, window) <= 1e-14);
    CHECK(second_modulus(constant, 0.1, window) == 0.0);

    // t^2: second difference is exactly 2 h^2
    CHECK(second_modulus(square, 0.1, window) == doctest::Approx(0.02).epsilon(1e-12));

    SUBCASE("sin: decreasing delta drives the modulus to zero") {
        const Domain w(0.0, 7.0, 1e-3);
        double prev = 1e9;
        for (double delta : {0.4, 0.2, 0.1, 0.05, 0.025}) {
            const double v = second_modulus([](double x) { return std::sin(x); }, delta, w);
            CHECK(v <= prev);
            prev = v;
        }
        CHECK(prev <= 4.0 * 0.025 * 0.025 * 1.01);
    }

    SUBCASE("bounded by 4 sup |f| across the bounded registry") {
        for (const char* spec : {"sin", "exp-decay", "runge"}) {
            const ScalarFunction f = make_scalar_function(spec);
            REQUIRE(f.growth == GrowthClass::Bounded);
            for (double delta : {0.1, 1.0, 3.0}) {
                const double v = second_modulus(f.eval, delta, Domain(0.0, 12.0, 1e-2));
                CAPTURE(spec);
                CHECK(v <= 4.0 * f.growth_constant + 1e-12);
            }
        }
    }

    CHECK_THROWS_AS(second_modulus(ident, 0.0, window), std::domain_error);
}

TEST_CASE("weighted norm") {
    CHECK(weighted_norm(constant, 10.0, 0.01) == doctest::Approx(4.2).epsilon(1e-14));
    CHECK(weighted_norm([](double) { return 1.0; }, 50.0, 0.5) == 1.0);
    CHECK(weighted_norm(square, 100.0, 0.01) ==
          doctest::Approx(10000.0 / 10001.0).epsilon(1e-12));
    // x/(1+x^2) peaks at x = 1 with value 1/2
    CHECK(weighted_norm(ident, 100.0, 0.01) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("local approximation bound") {
    BoundInputs inputs;
    inputs.C = 4.0;
    inputs.a = 16.0;

    SUBCASE("affine f at beta = 0: bound and error both vanish") {
        const ScalarFunction affine = make_scalar_function("poly:1,1");
        const OperatorParams params(50, BetaParam(0.0));
        // the omega term vanishes identically; the omega_2 term is zero up to
        // second-difference rounding on the grid
        CHECK(local_approx_bound(affine, params, 1.0, inputs) <= 1e-13);
        const double err =
            std::abs(apply_p(affine, params, 1.0, kPolicy).value - affine.eval(1.0));
        CHECK(err <= 1e-12);
    }

    SUBCASE("dominates the measured error") {
        const ScalarFunction f = make_scalar_function("exp-decay");
        for (std::int64_t n : {10, 100})
            for (double b : {0.0, 0.01, 0.1})
                for (double x : {0.5, 1.0, 2.0}) {
                    const OperatorParams params(n, BetaParam(b));
                    const double err =
                        std::abs(apply_p(f, params, x, kPolicy).value - f.eval(x));
                    CAPTURE(n);
                    CAPTURE(b);
                    CAPTURE(x);
                    CHECK(local_approx_bound(f, params, x, inputs) >= err);
                }
    }

    SUBCASE("dominates for t^2 at (n=100, beta=0.01, x=1) with C=4") {
        const ScalarFunction f = make_scalar_function("poly:0,0,1");
        const OperatorParams params(100, BetaParam(0.01));
        const double err = std::abs(apply_p(f, params, 1.0, kPolicy).value - 1.0);
        CHECK(err == doctest::Approx(0.0308173).epsilon(1e-4));
        CHECK(local_approx_bound(f, params, 1.0, inputs) >= err);
    }

    CHECK_THROWS_AS(local_approx_bound(make_scalar_function("sin"),
                                       OperatorParams(10, BetaParam(0.1)), -1.0, inputs),
                    std::domain_error);
}

TEST_CASE("lipschitz bound") {
    BoundInputs inputs;

    SUBCASE("M_f = 0 gives zero") {
        inputs.M_f = 0.0;
        CHECK(lipschitz_bound(inputs, OperatorParams(10, BetaParam(0.3)), 1.0) == 0.0);
    }

    SUBCASE("f = t at beta = 0: explicit formula, and the error is zero") {
        inputs = BoundInputs{};
        const OperatorParams params(100, BetaParam(0.0));
        const double x = 1.0;
        const double expected = std::sqrt((x + x * x + 0.01) / 100.0);
        CHECK(lipschitz_bound(inputs, params, x) == doctest::Approx(expected).epsilon(1e-14));
        const ScalarFunction t = make_scalar_function("poly:0,1");
        CHECK(std::abs(apply_p(t, params, x, kPolicy).value - x) <= 1e-12);
    }

    SUBCASE("dominates |t - 1| errors") {
        inputs = BoundInputs{};  // M_f = 1, alpha = 1, d(x,E) = 0 with E = [0, inf)
        const ScalarFunction f = make_scalar_function("abs:1");
        for (std::int64_t n : {10, 100})
            for (double b : {0.0, 0.01, 0.1})
                for (double x : {0.1, 1.0, 3.0}) {
                    const OperatorParams params(n, BetaParam(b));
                    const double err =
                        std::abs(apply_p(f, params, x, kPolicy).value - f.eval(x));
                    CAPTURE(n);
                    CAPTURE(b);
                    CAPTURE(x);
                    CHECK(lipschitz_bound(inputs, params, x) >= err);
                }
    }

    SUBCASE("input validation") {
        inputs = BoundInputs{};
        inputs.alpha_exp = 1.5;
        CHECK_THROWS_AS(lipschitz_bound(inputs, OperatorParams(10, BetaParam(0.1)), 1.0),
                        std::domain_error);
    }
}

TEST_CASE("rate bound") {
    SUBCASE("K = 36 at M_f = 1, a = 1") {
        // with a constant f the modulus term vanishes, leaving T = B K
        BoundInputs inputs;
        const ScalarFunction c = make_scalar_function("poly:5");
        const OperatorParams params(10, BetaParam(0.0));
        CHECK(rate_bound(c, inputs, params) == doctest::Approx(36.0 / 10.0).epsilon(1e-14));
    }

    SUBCASE("M_f = 0 gives zero") {
        BoundInputs inputs;
        inputs.M_f = 0.0;
        CHECK(rate_bound(make_scalar_function("sin"), inputs, OperatorParams(10, BetaParam(0.2))) ==
              0.0);
    }

    SUBCASE("dominates the sup error of t^2 on [0, 1]") {
        BoundInputs inputs;  // M_f = 1, a = 1
        const ScalarFunction f = make_scalar_function("poly:0,0,1");
        for (std::int64_t n : {10, 1000})
            for (double b : {0.0, 0.01, 0.1}) {
                const OperatorParams params(n, BetaParam(b));
                double sup = 0.0;
                for (double x : Domain(0.0, 1.0, 0.01).grid())
                    sup = std::max(sup,
                                   std::abs(apply_p(f, params, x, kPolicy).value - f.eval(x)));
                CAPTURE(n);
                CAPTURE(b);
                CHECK(rate_bound(f, inputs, params) >= sup);
            }
    }
}

TEST_CASE("voronovskaya residual") {
    SUBCASE("t^2 at beta = 0 gives exactly x") {
        const ScalarFunction f = make_scalar_function("poly:0,0,1");
        for (std::int64_t n : {10, 100})
            for (double x : {0.5, 1.0, 2.0}) {
                const double r =
                    voronovskaya_residual(f, n, BetaParam(0.0), x, {1e-14, 4'000'000});
                CAPTURE(n);
                CAPTURE(x);
                CHECK(std::abs(r - x) <= 1e-12);
            }
    }

    SUBCASE("exp-decay approaches e^{-1}/2 under beta = n^{-2}") {
        const ScalarFunction f = make_scalar_function("exp-decay");
        const double target = 0.5 * std::exp(-1.0);
        const double r = voronovskaya_residual(f, 1000, BetaParam(1e-6), 1.0, kPolicy);
        CHECK(std::abs(r - target) / target < 5e-3);
    }

    SUBCASE("affine residual vanishes at beta = 0") {
        const ScalarFunction f = make_scalar_function("poly:2,3");
        CHECK(std::abs(voronovskaya_residual(f, 50, BetaParam(0.0), 1.5, kPolicy)) <= 1e-10);
    }

    SUBCASE("requires a registered second derivative") {
        CHECK_THROWS_AS(
            voronovskaya_residual(make_scalar_function("abs:1"), 10, BetaParam(0.0), 1.0, kPolicy),
            std::invalid_argument);
    }
}
