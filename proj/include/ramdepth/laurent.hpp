#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramdepth/fq.hpp"

namespace ramdepth {

/// Sentinel for +infinity in valuations and precisions.
inline constexpr int64_t kInf = std::numeric_limits<int64_t>::max();

/// Thrown by as_reduce when the input class lies in the image of the ring of
/// integers, i.e. the reduction loop reaches valuation >= 0. Such an input
/// does not define a wildly ramified extension of the intended shape.
struct ReducesToIntegral : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of K = F_q((t)) with explicit valuation and precision.
///
/// Coefficients are stored densely from exponent v upward; prec = N means the
/// series is known modulo t^N, prec = kInf means it is exact with finite
/// support. Stored leading and trailing zero coefficients are trimmed, and a
/// series with no stored coefficients has v = kInf.
class LaurentSeries {
  public:
    explicit LaurentSeries(const FieldSpec& spec) : spec_(spec) {}

    static LaurentSeries zero(const FieldSpec& spec) { return LaurentSeries(spec); }
    static LaurentSeries one(const FieldSpec& spec) {
        return from_term(FqElem::one(spec), 0);
    }
    /// The monomial c * t^e.
    static LaurentSeries from_term(const FqElem& c, int64_t e);
    /// t^e.
    static LaurentSeries t_power(const FieldSpec& spec, int64_t e) {
        return from_term(FqElem::one(spec), e);
    }

    const FieldSpec& spec() const { return spec_; }
    int64_t prec() const { return prec_; }
    bool is_exact() const { return prec_ == kInf; }
    /// True when the series is exactly zero (not merely zero to precision).
    bool is_exact_zero() const { return coeffs_.empty() && prec_ == kInf; }
    bool known_part_empty() const { return coeffs_.empty(); }

    /// Exact valuation; kInf for the exact zero series. Throws
    /// std::domain_error when the series is zero to its (finite) precision,
    /// in which case only the bound v >= prec is known.
    int64_t valuation() const;
    /// Lower bound on the valuation that is always available: the valuation
    /// of the known part, or prec when the known part vanishes.
    int64_t valuation_bound() const;

    FqElem leading_coeff() const;
    /// Coefficient of t^e; throws std::domain_error for e >= prec.
    FqElem coeff_at(int64_t e) const;
    /// One past the last stored exponent (equals v for an empty known part).
    int64_t support_end() const {
        return coeffs_.empty() ? v_ : v_ + static_cast<int64_t>(coeffs_.size());
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) {
        return !(a == b);
    }

    LaurentSeries pow(uint64_t e) const;
    /// Multiplication by t^s.
    LaurentSeries shifted(int64_t s) const;
    /// Truncation to precision N (drops coefficients at exponents >= N).
    LaurentSeries truncated(int64_t n) const;
    /// Reciprocal, known modulo t^n. Requires a nonzero known part and enough
    /// input precision to determine every requested coefficient.
    LaurentSeries inverse(int64_t n) const;

    std::string to_string() const;
    /// Parses the series grammar: sum of terms COEF*t^EXP | t^EXP | COEF,
    /// COEF a decimal integer or a parenthesized polynomial in x. "0" is the
    /// zero series. Throws std::invalid_argument with a position on bad
    /// syntax; the result is always exact.
    static LaurentSeries parse(const std::string& text, const FieldSpec& spec);

  private:
    void normalize();

    FieldSpec spec_;
    int64_t v_ = kInf;
    std::vector<FqElem> coeffs_;
    int64_t prec_ = kInf;
};

/// The Artin-Schreier map x -> x^p - x.
LaurentSeries wp(const LaurentSeries& a);

struct AsReduceResult {
    LaurentSeries a_red;
    int64_t m;
    LaurentSeries witness;
};

/// Normalizes the leading p-divisible exponents of an exact series with
/// v(a) < 0: repeatedly subtracts wp(pth_root(c) * t^{-n/p}) while the
/// leading term c * t^{-n} has p | n, accumulating the witness, so that
/// a - a_red = wp(witness) and v(a_red) = -m with gcd(m, p) = 1. Throws
/// ReducesToIntegral when the loop reaches valuation >= 0.
AsReduceResult as_reduce(const LaurentSeries& a);

}  // namespace ramdepth
