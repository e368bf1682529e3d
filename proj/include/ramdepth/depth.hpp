#pragma once

#include <optional>
#include <vector>

#include "ramdepth/herbrand.hpp"
#include "ramdepth/unit_characters.hpp"

namespace ramdepth {

enum class DepthCase { I, II };

/// One verified row of the depth comparison: a character of depth d on L^x
/// against the depth of its induced parameter.
struct DepthReport {
    int64_t p = 0;  // 0 on tame control rows
    int64_t q = 0;
    int64_t m = 0;  // ramification break; 0 on tame rows
    int64_t e = 0;  // ramification index
    int64_t d = 0;  // character depth
    Rational parameter_depth{0};
    std::optional<DepthCase> which_case;  // unset on tame rows
    bool preserved = false;
    Rational delta{0};  // parameter_depth - d
};

/// Largest d whose depth-d certificate group (level d + 2) stays within the
/// enumeration cap: q^{d+1} <= kEnumerationCap.
int64_t character_cap_depth(int64_t q);

/// Depth of the parameter attached to a depth-d character of L^x:
/// phi_{L/K}(e * d) evaluated on the first-principles break data.
Rational parameter_depth(const ExtHandle& ext, int64_t d);

/// For d = 1..d_max: computes phi(p*d) from the Galois-action break data,
/// checks it equals the case-split closed form (case I, p*d > m:
/// d + m(p-1)/p; case II: p*d) and strictly exceeds d, and for every d
/// within the character cap certifies by enumeration that a depth-d
/// character exists with the claimed depth. Throws std::runtime_error
/// naming the offending row on any violation.
std::vector<DepthReport> verify_theorem(const ExtHandle& ext, int64_t d_max);

/// The p = 2 family a = t^{-m}, m = 1, 3, 5, ..., 2*count - 1 over F_2:
/// verifies each member up to depth 3, asserts the breaks are pairwise
/// distinct, and returns the depth-1 rows.
std::vector<DepthReport> corollary_family(int64_t count);

/// Tame contrast: a totally tame degree-e filtration has phi(e*d) = d, so
/// depth is preserved at every positive depth. Throws on violation.
std::vector<DepthReport> tame_control(int64_t e, int64_t d_max);

}  // namespace ramdepth
