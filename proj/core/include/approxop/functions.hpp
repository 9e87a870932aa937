#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace approxop {

/// Certified growth class of a test function on [0, inf).
/// Quadratic means |f(x)| <= M_f (1 + x^2); Linear |f(x)| <= M_f (1 + x);
/// Bounded |f(x)| <= M_f. Functions growing faster than quadratically carry
/// no class and are rejected by the class-gated experiments.
enum class GrowthClass { Bounded, Linear, Quadratic };

/// A registered scalar test function with optional derivatives and growth
/// metadata. envelope_degree bounds the polynomial growth of |f| and feeds
/// the series truncation envelope.
struct ScalarFunction {
    std::string name;
    std::function<double(double)> eval;
    std::function<double(double)> d1;  // may be empty
    std::function<double(double)> d2;  // may be empty
    std::optional<GrowthClass> growth;
    double growth_constant = 0.0;  // the M_f of the growth class
    int envelope_degree = 0;
};

/// Builds a function from a registry spec string.
///
/// Grammar:
///   poly:c0,c1,...   polynomial c0 + c1 t + c2 t^2 + ...
///   exp-decay        e^{-t}
///   sin              sin t
///   abs:c            |t - c|
///   runge            1 / (1 + 25 t^2)
///
/// Throws std::invalid_argument for unknown names; the message lists the
/// registry.
ScalarFunction make_scalar_function(const std::string& spec);

/// The registry spec forms accepted by make_scalar_function.
std::vector<std::string> function_registry();

}  // namespace approxop
