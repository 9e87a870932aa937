#include "approxop/functions.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace approxop {

namespace {

std::vector<double> parse_coeffs(const std::string& list, const std::string& spec) {
    std::vector<double> cs;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            cs.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient '" + item + "' in '" + spec + "'");
        }
    }
    if (cs.empty()) throw std::invalid_argument("no coefficients in '" + spec + "'");
    return cs;
}

ScalarFunction make_poly(const std::string& spec) {
    const auto cs = parse_coeffs(spec.substr(5), spec);
    int degree = 0;
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != 0.0) degree = static_cast<int>(i);

    auto horner = [](const std::vector<double>& c, double x) {
        double v = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        return v;
    };
    std::vector<double> c1(cs.size() > 1 ? cs.size() - 1 : 0);
    for (std::size_t i = 0; i < c1.size(); ++i) c1[i] = cs[i + 1] * static_cast<double>(i + 1);
    std::vector<double> c2(c1.size() > 1 ? c1.size() - 1 : 0);
    for (std::size_t i = 0; i < c2.size(); ++i) c2[i] = c1[i + 1] * static_cast<double>(i + 1);

    ScalarFunction f;
    f.name = spec;
    f.eval = [cs, horner](double x) { return horner(cs, x); };
    f.d1 = [c1, horner](double x) { return c1.empty() ? 0.0 : horner(c1, x); };
    f.d2 = [c2, horner](double x) { return c2.empty() ? 0.0 : horner(c2, x); };
    f.envelope_degree = degree;
    // |sum c_i x^i| <= (sum |c_i|)(1 + x^d) for d <= 2; no class beyond that
    const double msum =
        std::accumulate(cs.begin(), cs.end(), 0.0, [](double a, double c) { return a + std::abs(c); });
    if (degree == 0) {
        f.growth = GrowthClass::Bounded;
        f.growth_constant = std::abs(cs[0]);
    } else if (degree == 1) {
        f.growth = GrowthClass::Linear;
        f.growth_constant = msum;
    } else if (degree == 2) {
        f.growth = GrowthClass::Quadratic;
        f.growth_constant = msum;
    }
    return f;
}

ScalarFunction make_abs(const std::string& spec) {
    const auto cs = parse_coeffs(spec.substr(4), spec);
    if (cs.size() != 1) throw std::invalid_argument("abs takes exactly one parameter, got '" + spec + "'");
    const double c = cs[0];
    ScalarFunction f;
    f.name = spec;
    f.eval = [c](double x) { return std::abs(x - c); };
    f.growth = GrowthClass::Linear;
    f.growth_constant = std::max(1.0, std::abs(c));
    f.envelope_degree = 1;
    return f;
}

}  // namespace

ScalarFunction make_scalar_function(const std::string& spec) {
    if (spec.rfind("poly:", 0) == 0) return make_poly(spec);
    if (spec.rfind("abs:", 0) == 0) return make_abs(spec);
    if (spec == "exp-decay") {
        ScalarFunction f;
        f.name = spec;
        f.eval = [](double x) { return std::exp(-x); };
        f.d1 = [](double x) { return -std::exp(-x); };
        f.d2 = [](double x) { return std::exp(-x); };
        f.growth = GrowthClass::Bounded;
        f.growth_constant = 1.0;
        return f;
    }
    if (spec == "sin") {
        ScalarFunction f;
        f.name = spec;
        f.eval = [](double x) { return std::sin(x); };
        f.d1 = [](double x) { return std::cos(x); };
        f.d2 = [](double x) { return -std::sin(x); };
        f.growth = GrowthClass::Bounded;
        f.growth_constant = 1.0;
        return f;
    }
    if (spec == "runge") {
        ScalarFunction f;
        f.name = spec;
        f.eval = [](double x) { return 1.0 / (1.0 + 25.0 * x * x); };
        f.d1 = [](double x) {
            const double d = 1.0 + 25.0 * x * x;
            return -50.0 * x / (d * d);
        };
        f.d2 = [](double x) {
            const double d = 1.0 + 25.0 * x * x;
            return (3750.0 * x * x - 50.0) / (d * d * d);
        };
        f.growth = GrowthClass::Bounded;
        f.growth_constant = 1.0;
        return f;
    }
    std::string msg = "unknown function '" + spec + "'; registry:";
    for (const auto& r : function_registry()) msg += " " + r;
    throw std::invalid_argument(msg);
}

std::vector<std::string> function_registry() {
    return {"poly:c0,c1,...", "exp-decay", "sin", "abs:c", "runge"};
}

}  // namespace approxop
