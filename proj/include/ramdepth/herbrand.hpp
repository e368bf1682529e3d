#pragma once

#include <vector>

#include "ramdepth/extension.hpp"
#include "ramdepth/rational.hpp"

namespace ramdepth {

/// Continuous, strictly increasing piecewise-linear function on [0, inf)
/// with f(0) = 0: breakpoints 0 = b_0 < b_1 < ... and a positive slope on
/// each [b_i, b_{i+1}] (the last slope extending to infinity).
class PLFunction {
  public:
    PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> slopes);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& slopes() const { return slopes_; }
    /// Values f(b_i), precomputed.
    const std::vector<Rational>& values() const { return values_; }

    /// Throws std::domain_error for u < 0.
    Rational eval(const Rational& u) const;

    /// The inverse function: breakpoints map through f, slopes reciprocate.
    PLFunction inverse() const;

  private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> slopes_;
    std::vector<Rational> values_;
};

/// phi_{L/K}(u) = integral_0^u dt / (G_0 : G_t), with the convention
/// G_u = G_{ceil(u)} for non-integer u >= 0: slope |G| / |G_0| on each step
/// of the filtration. For the single-break family this is breakpoints
/// {0, m} with slopes {1, 1/p}; for the tame control, breakpoints {0} with
/// slope {1/e}.
PLFunction phi_from_ramification(const RamificationData& rd);

}  // namespace ramdepth
