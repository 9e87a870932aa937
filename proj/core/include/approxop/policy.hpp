#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace approxop {

/// Operator parameter beta, restricted to 0 <= beta < 1.
class BetaParam {
  public:
    explicit BetaParam(double value) : value_(value) {
        if (!(value >= 0.0 && value < 1.0))
            throw std::domain_error("beta must satisfy 0 <= beta < 1, got " +
                                    std::to_string(value));
    }
    double value() const { return value_; }

  private:
    double value_;
};

/// Controls certified truncation of the infinite weight series.
///
/// A summation under this policy either certifies that the residual
/// probability mass beyond the summed range is below `epsilon`, or fails
/// with CapExhaustedError once `max_terms` weight evaluations are spent.
struct TruncationPolicy {
    double epsilon = 1e-12;
    std::uint64_t max_terms = 4'000'000;

    void validate() const {
        if (!(epsilon > 0.0))
            throw std::domain_error("truncation epsilon must be > 0");
        if (max_terms < 1)
            throw std::domain_error("max_terms must be >= 1");
    }
};

/// Certified value of a truncated series.
struct SeriesResult {
    double value = 0.0;
    double residual_mass = 0.0;  // uncaptured probability mass, < policy.epsilon
    std::uint64_t terms = 0;     // number of weight evaluations spent
};

/// Raised when the term cap is exhausted before the tail could be certified.
class CapExhaustedError : public std::runtime_error {
  public:
    CapExhaustedError(std::uint64_t terms, double accumulated_mass)
        : std::runtime_error("series truncation cap exhausted after " +
                             std::to_string(terms) + " terms (captured mass " +
                             std::to_string(accumulated_mass) + ")"),
          terms_(terms),
          accumulated_mass_(accumulated_mass) {}

    std::uint64_t terms() const { return terms_; }
    double accumulated_mass() const { return accumulated_mass_; }

  private:
    std::uint64_t terms_;
    double accumulated_mass_;
};

}  // namespace approxop
