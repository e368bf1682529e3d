#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramdepth/laurent.hpp"

namespace ramdepth {

/// Thrown when a Galois displacement disagrees with the predicted
/// ramification break.
struct BreakMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lower-numbering ramification filtration of a totally ramified abelian
/// extension, recorded as half-open steps: |G_u| = steps[i].order for
/// steps[i-1].upper_end < u <= steps[i].upper_end (with u > steps.back-1
/// covered by the final step, whose upper_end is kInf and order 1).
struct RamificationData {
    struct Step {
        int64_t upper_end;  // kInf on the final step
        int64_t order;
        friend bool operator==(const Step& a, const Step& b) {
            return a.upper_end == b.upper_end && a.order == b.order;
        }
    };
    std::vector<Step> steps;

    /// Checks monotonicity: upper ends strictly increasing, orders strictly
    /// decreasing with each dividing the previous, final step (kInf, 1).
    void validate() const;

    /// Filtration with the single jump G_0 = ... = G_m of the given order,
    /// then trivial: steps {(m, order), (kInf, 1)}.
    static RamificationData single_break(int64_t m, int64_t order);
    /// Tame filtration: G_0 of order e, G_u trivial for u > 0. For e = 1 the
    /// single trivial step.
    static RamificationData tame(int64_t e);
};

/// The degree-p extension L = K[A]/(A^p - A - a) of K = F_q((t)), with a
/// already reduced so that v(a) = -m, gcd(m, p) = 1. Totally wildly
/// ramified with e(L/K) = p and residue degree 1.
class ASExtension {
  public:
    /// Reduces the given exact series (v < 0) and fixes the uniformizer
    /// exponents: pi_L = t^w * A^u with p*w - m*u = 1, 1 <= u < p.
    explicit ASExtension(const LaurentSeries& a);

    const FieldSpec& spec() const { return spec_; }
    int64_t p() const { return spec_.p(); }
    int64_t q() const { return spec_.q(); }
    const LaurentSeries& a() const { return a_red_; }
    const LaurentSeries& witness() const { return witness_; }
    int64_t m() const { return m_; }
    int64_t ram_index() const { return spec_.p(); }
    int64_t pi_w() const { return w_; }
    int64_t pi_u() const { return u_; }

  private:
    FieldSpec spec_;
    LaurentSeries a_red_;
    LaurentSeries witness_;
    int64_t m_;
    int64_t w_;
    int64_t u_;
};

using ExtHandle = std::shared_ptr<const ASExtension>;

inline ExtHandle make_extension(const LaurentSeries& a) {
    return std::make_shared<ASExtension>(a);
}

/// Element of L in the basis 1, A, ..., A^{p-1}: coordinates are Laurent
/// series over K. Value-semantic; all arithmetic reduces via A^p = A + a.
class LElement {
  public:
    explicit LElement(ExtHandle ext);

    static LElement from_series(ExtHandle ext, const LaurentSeries& c0);
    static LElement constant(ExtHandle ext, const FqElem& c);
    static LElement constant(ExtHandle ext, int64_t c);
    static LElement one(ExtHandle ext) { return constant(ext, 1); }
    static LElement alpha(ExtHandle ext);

    const ExtHandle& ext() const { return ext_; }
    const LaurentSeries& coord(size_t i) const { return c_.at(i); }
    size_t degree() const { return c_.size(); }

    friend LElement operator+(const LElement& a, const LElement& b);
    friend LElement operator-(const LElement& a, const LElement& b);
    friend LElement operator-(const LElement& a);
    friend LElement operator*(const LElement& a, const LElement& b);
    friend bool operator==(const LElement& a, const LElement& b);
    friend bool operator!=(const LElement& a, const LElement& b) { return !(a == b); }

    LElement pow(uint64_t e) const;
    bool is_exact_zero() const;

    /// Coordinate-wise multiplication by a residue-field scalar.
    LElement scaled(const FqElem& c) const;
    /// Discards all information at v_L >= n: coordinate i is truncated at
    /// t-exponent ceil((n + m*i) / p). Requires n >= 1.
    LElement truncated(int64_t n) const;

    std::string to_string() const;

  private:
    void check_same(const LElement& other) const;

    ExtHandle ext_;
    std::vector<LaurentSeries> c_;
};

/// Valuation in L, normalized so v_L(pi_L) = 1 and v_L(t) = p: the minimum
/// over coordinates of p*v_K(c_i) - m*i, which is attained exactly once
/// because the summands are pairwise distinct mod p. Returns kInf for the
/// exact zero; throws std::domain_error when the precision of a coordinate
/// leaves the minimum undetermined.
int64_t v_L(const LElement& x);

/// Always-available lower bound on v_L: uses each coordinate's valuation
/// bound (its precision when the known part vanishes). kInf iff exact zero.
int64_t v_L_lower_bound(const LElement& x);

/// The Galois substitution A -> A + j (j mod p), extended coefficientwise.
LElement galois_apply(int64_t j, const LElement& x);

/// The canonical uniformizer pi_L = t^w * A^u.
LElement uniformizer(const ExtHandle& ext);

/// i(sigma_j) = v_L(sigma_j(pi_L) - pi_L) for j = 1..p-1, in that order.
std::vector<int64_t> galois_displacements(const ExtHandle& ext);

/// Computes the filtration from the displacements and checks every
/// nontrivial sigma has i(sigma) = m + 1; throws BreakMismatch otherwise.
RamificationData ramification_breaks(const ExtHandle& ext);

/// Residue of a valuation-0 element: the t^0 coefficient of coordinate 0.
/// Requires v_L(x) = 0 (throws std::domain_error otherwise).
FqElem residue(const LElement& x);

/// 1/A = (A^{p-1} - 1) / a, with 1/a expanded modulo t^series_prec.
LElement alpha_inverse(const ExtHandle& ext, int64_t series_prec);

/// pi_L^{-n} as a truncated element, with enough internal precision that
/// multiplying by any exact y with v_L(y) >= n leaves the residue of
/// y * pi_L^{-n} determined. Requires n >= 0.
LElement pi_inverse_pow(const ExtHandle& ext, int64_t n);

}  // namespace ramdepth
