#include "ramdepth/herbrand.hpp"

namespace ramdepth {

PLFunction::PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> slopes)
    : breakpoints_(std::move(breakpoints)), slopes_(std::move(slopes)) {
    if (breakpoints_.empty() || breakpoints_.size() != slopes_.size())
        throw std::invalid_argument("breakpoints and slopes must pair up");
    if (!(breakpoints_.front() == Rational(0)))
        throw std::invalid_argument("first breakpoint must be 0");
    for (size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!(slopes_[i] > Rational(0)))
            throw std::invalid_argument("slopes must be positive");
        if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i]))
            throw std::invalid_argument("breakpoints must strictly increase");
    }
    values_.push_back(Rational(0));
    for (size_t i = 1; i < breakpoints_.size(); ++i)
        values_.push_back(values_[i - 1] +
                          slopes_[i - 1] * (breakpoints_[i] - breakpoints_[i - 1]));
}

Rational PLFunction::eval(const Rational& u) const {
    if (u < Rational(0))
        throw std::domain_error("piecewise-linear function evaluated below 0");
    size_t i = breakpoints_.size() - 1;
    while (i > 0 && u < breakpoints_[i]) --i;
    return values_[i] + slopes_[i] * (u - breakpoints_[i]);
}

PLFunction PLFunction::inverse() const {
    std::vector<Rational> inv_slopes;
    inv_slopes.reserve(slopes_.size());
    for (const Rational& s : slopes_) inv_slopes.push_back(Rational(1) / s);
    return PLFunction(values_, inv_slopes);
}

PLFunction phi_from_ramification(const RamificationData& rd) {
    rd.validate();
    int64_t g0 = rd.steps.front().order;
    std::vector<Rational> bps{Rational(0)};
    std::vector<Rational> slopes;
    for (const auto& step : rd.steps) {
        Rational upper = (step.upper_end == kInf) ? Rational(0) : Rational(step.upper_end);
        if (step.upper_end != kInf && !(bps.back() < upper)) continue;  // zero-length piece
        slopes.push_back(Rational(step.order, g0));
        if (step.upper_end == kInf) break;
        bps.push_back(upper);
    }
    return PLFunction(std::move(bps), std::move(slopes));
}

}  // namespace ramdepth
