#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ramdepth/extension.hpp"
#include "ramdepth/rational.hpp"

namespace ramdepth {

/// Enumeration cap: unit_group refuses orders q^{N-1} above this.
inline constexpr int64_t kEnumerationCap = 1 << 14;

/// Element of U^1_L / U^N_L in canonical digit form
/// x = 1 + c_1 pi + c_2 pi^2 + ... + c_{N-1} pi^{N-1} (digits in F_q).
struct TruncatedUnit {
    ExtHandle ext;
    int64_t level = 0;               // N
    std::vector<FqElem> digits;      // c_1 .. c_{N-1}

    /// Lexicographic code with c_1 most significant: sum of
    /// digit_code(c_j) * q^{N-1-j}.
    int64_t code() const;
    /// The exact representative 1 + sum c_j pi^j.
    LElement to_element() const;
};

class AbelianGroupStructure;
using GroupHandle = std::shared_ptr<const AbelianGroupStructure>;

/// The finite abelian p-group U^1/U^N with a computed basis: order q^{N-1},
/// invariant factors d_1 | d_2 | ... | d_r (ascending), and a dense table
/// mapping every element code to its exponent vector over the basis.
class AbelianGroupStructure {
  public:
    AbelianGroupStructure(ExtHandle ext, int64_t level);

    const ExtHandle& ext() const { return ext_; }
    int64_t level() const { return level_; }
    int64_t q() const { return ext_->q(); }
    int64_t order() const { return order_; }
    const std::vector<TruncatedUnit>& basis() const { return basis_; }
    const std::vector<int64_t>& invariant_factors() const { return factors_; }
    const std::vector<int64_t>& exponents(int64_t code) const {
        return table_.at(static_cast<size_t>(code));
    }

    TruncatedUnit unit_from_code(int64_t code) const;
    /// Digit-wise canonical product: digitize(to_element(a) * to_element(b)).
    int64_t mul_codes(int64_t a, int64_t b) const;
    int64_t pow_code(int64_t a, int64_t e) const;
    /// Exact representative of a code (uses the cached pi powers).
    LElement element(int64_t code) const;
    /// Canonical digits of an exact x with v_L(x - 1) >= 1.
    TruncatedUnit digitize(const LElement& x) const;

  private:
    void build();
    LElement z_rep(int64_t code) const;
    std::vector<FqElem> peel(LElement z) const;
    int64_t code_of_digits(const std::vector<FqElem>& digits) const;
    int64_t frobenius_code(int64_t a) const;

    ExtHandle ext_;
    int64_t level_;
    int64_t order_;
    std::vector<LElement> pi_pows_;        // pi^0 .. pi^{N-1}, exact
    std::vector<LElement> pi_pows_w_;      // same, windowed below v_L = N
    std::vector<LElement> alpha_p_pows_;   // (A + a)^i = A^{ip}, i < p
    std::vector<size_t> lead_coord_;       // leading coordinate of pi^v
    std::vector<FqElem> lead_inv_;         // inverse leading coefficient of pi^v
    std::vector<TruncatedUnit> basis_;
    std::vector<int64_t> factors_;
    std::vector<std::vector<int64_t>> table_;
};

/// Builds U^1/U^N; requires N >= 2 and q^{N-1} <= kEnumerationCap
/// (std::domain_error otherwise).
GroupHandle unit_group(const ExtHandle& ext, int64_t level);

/// Standalone digit extraction (builds its own pi-power caches).
TruncatedUnit digitize(const ExtHandle& ext, const LElement& x, int64_t level);

/// Character of U^1/U^N given by phases r_i in Q/Z with d_i r_i integral:
/// chi(x) = exp(2 pi i * sum e_i r_i) on exponent vector e.
struct UnitCharacter {
    GroupHandle group;
    std::vector<Rational> phases;

    /// The phase in [0, 1) of chi at the element with this code.
    Rational phase_at(int64_t code) const;
    bool trivial_at(int64_t code) const { return phase_at(code) == Rational(0); }
};

/// All q^{N-1} characters in deterministic lexicographic order of the
/// integer tuples (a_1, ..., a_r), a_i in [0, d_i), phases a_i / d_i.
std::vector<UnitCharacter> enumerate_characters(const GroupHandle& group);

/// Depth: the largest n >= 1 with chi nontrivial on the image of U^n,
/// or 0 when chi is trivial on all of U^1. Requires n <= N - 1 by
/// construction.
int64_t char_depth(const UnitCharacter& chi);

/// Smooth character of L^x restricted to its standard pieces; the depth of
/// the whole character equals char_depth of the unit part, because the tame
/// and uniformizer parts live at depth 0.
struct LxCharacter {
    UnitCharacter unit_part;
    Rational tame_part{0};         // phase on the Teichmueller component
    Rational uniformizer_part{0};  // phase on pi^Z
};

/// Deterministically picks the first enumerated character of exact depth d
/// inside U^1/U^N; requires 1 <= d <= N - 1 (at N = d + 1 triviality on
/// U^{d+1} holds automatically, so any choice pulls back to depth d on U^1).
LxCharacter character_of_depth(const ExtHandle& ext, int64_t d, int64_t level);

}  // namespace ramdepth
