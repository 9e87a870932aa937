#pragma once

#include <functional>
#include <vector>

#include "approxop/functions.hpp"
#include "approxop/operators.hpp"
#include "approxop/policy.hpp"

namespace approxop {

/// A finite evaluation window [a, b] with grid resolution `step`.
struct Domain {
    Domain(double a_, double b_, double step_) : a(a_), b(b_), step(step_) {
        if (!(a >= 0.0 && b > a)) throw std::domain_error("domain requires 0 <= a < b");
        if (!(step > 0.0 && step <= b - a))
            throw std::domain_error("domain step must satisfy 0 < step <= b - a");
    }
    double a;
    double b;
    double step;

    bool operator==(const Domain&) const = default;

    /// {a, a+step, ..., b}; the right endpoint is always included.
    std::vector<double> grid() const;
};

/// Caller-supplied constants consumed by the error-bound expressions.
struct BoundInputs {
    double M_f = 1.0;       // growth or Lipschitz constant of f
    double a = 1.0;         // interval end: moduli windows use [0, a] ([0, a+1] for the rate bound)
    double C = 4.0;         // absolute constant of the K-functional inequality
    double alpha_exp = 1.0; // Lipschitz exponent in (0, 1]
    double dist_E = 0.0;    // d(x, E)

    bool operator==(const BoundInputs&) const = default;

    void validate() const;
};

/// omega_a(f, delta): sup of |f(t) - f(x)| over x, t in [0, a] with |t - x| <= delta.
///
/// Grid search over pair offsets h in (0, delta] with increment `step`
/// (default delta/100) and base points on [0, a]; under-approximates the
/// supremum, with error O(step * Lip(f)) for Lipschitz f.
double modulus_continuity(const std::function<double(double)>& f, double a, double delta,
                          double step = 0.0);

/// Second modulus of smoothness: sup over h in (0, delta] and x in the domain
/// of |f(x+2h) - 2 f(x+h) + f(x)|. The h grid uses `step` (default delta/100);
/// base points come from domain.step.
double second_modulus(const std::function<double(double)>& f, double delta,
                      const Domain& domain, double step = 0.0);

/// Truncated weighted sup-norm: max of |f(x)| / (1 + x^2) over the grid
/// {0, step, ..., x_max}.
double weighted_norm(const std::function<double(double)>& f, double x_max, double step);

/// Right-hand side of the local approximation theorem:
///   C w2(f, 1/2 sqrt(B d2(x) + q^2)) + w(f, q)
/// with B = (1+(2+n) b^2)/(n (1-b)^4), d2(x) = x(1+x) + 1/n and
/// q = b (1 + n x (1-b)) / (n (1-b)^2). The moduli suprema are searched over
/// [0, inputs.a]; at b = 0 the w term vanishes identically.
double local_approx_bound(const ScalarFunction& f, const OperatorParams& params, double x,
                          const BoundInputs& inputs, double step = 0.0);

/// Right-hand side of the local Lipschitz-class theorem:
///   M_f ( (B d2(x))^{alpha/2} + 2 d(x,E)^alpha ).
double lipschitz_bound(const BoundInputs& inputs, const OperatorParams& params, double x);

/// Right-hand side of the rate-of-convergence theorem on [0, a]:
///   T + 2 w_{a+1}(f, sqrt(T)),  T = (1+(2+n) b^2) K / (n (1-b)^4),
/// with K = 6 M_f (1 + a^2)(1 + a + a^2).
double rate_bound(const ScalarFunction& f, const BoundInputs& inputs,
                  const OperatorParams& params, double step = 0.0);

/// n (P_n^[beta](f, x) - f(x)); the caller compares against (x/2) f''(x).
/// Requires f to carry a second derivative.
double voronovskaya_residual(const ScalarFunction& f, std::int64_t n, BetaParam beta,
                             double x, const TruncationPolicy& policy);

}  // namespace approxop
