#include "ramdepth/unit_characters.hpp"

#include <algorithm>

namespace ramdepth {

namespace {

int64_t checked_order(int64_t q, int64_t level) {
    if (level < 2) throw std::invalid_argument("level must be >= 2");
    int64_t order = 1;
    for (int64_t i = 1; i < level; ++i) {
        order *= q;
        if (order > kEnumerationCap)
            throw std::domain_error("unit group order " + std::to_string(q) + "^" +
                                    std::to_string(level - 1) + " exceeds cap " +
                                    std::to_string(kEnumerationCap));
    }
    return order;
}

}  // namespace

int64_t TruncatedUnit::code() const {
    int64_t q = ext->q();
    int64_t c = 0;
    for (const FqElem& d : digits) c = c * q + d.code();
    return c;
}

LElement TruncatedUnit::to_element() const {
    LElement acc = LElement::one(ext);
    LElement pi = uniformizer(ext);
    LElement pipow = LElement::one(ext);
    for (size_t j = 0; j < digits.size(); ++j) {
        pipow = pipow * pi;
        acc = acc + pipow.scaled(digits[j]);
    }
    return acc;
}

AbelianGroupStructure::AbelianGroupStructure(ExtHandle ext, int64_t level)
    : ext_(std::move(ext)),
      level_(level),
      order_(checked_order(ext_->q(), level)) {
    build();
}

TruncatedUnit AbelianGroupStructure::unit_from_code(int64_t code) const {
    if (code < 0 || code >= order_) throw std::invalid_argument("code out of range");
    const FieldSpec& spec = ext_->spec();
    TruncatedUnit u{ext_, level_, {}};
    u.digits.assign(static_cast<size_t>(level_ - 1), FqElem::zero(spec));
    int64_t q = ext_->q();
    for (size_t j = u.digits.size(); j-- > 0;) {
        u.digits[j] = FqElem::from_code(spec, code % q);
        code /= q;
    }
    return u;
}

LElement AbelianGroupStructure::element(int64_t code) const {
    TruncatedUnit u = unit_from_code(code);
    LElement acc = LElement::one(ext_);
    for (size_t j = 0; j < u.digits.size(); ++j)
        acc = acc + pi_pows_[j + 1].scaled(u.digits[j]);
    return acc;
}

// Windowed representative of x - 1 for the element with the given digits:
// all arithmetic in the quotient U^1/U^N happens on these.
LElement AbelianGroupStructure::z_rep(int64_t code) const {
    TruncatedUnit u = unit_from_code(code);
    LElement z(ext_);
    for (size_t j = 0; j < u.digits.size(); ++j)
        z = z + pi_pows_w_[j + 1].scaled(u.digits[j]);
    return z.truncated(level_);
}

// Canonical digits of 1 + z from a windowed z (precision at least level_ in
// v_L). Residues are read off by exact leading-coefficient division against
// the cached leading monomial of pi^v.
std::vector<FqElem> AbelianGroupStructure::peel(LElement z) const {
    std::vector<FqElem> digits(static_cast<size_t>(level_ - 1),
                               FqElem::zero(ext_->spec()));
    int64_t last_v = 0;
    while (true) {
        int64_t lb = v_L_lower_bound(z);
        if (lb >= level_) break;
        int64_t v = v_L(z);
        if (v <= last_v || v < 1) throw std::logic_error("digit peel did not advance");
        last_v = v;
        size_t iv = lead_coord_[static_cast<size_t>(v)];
        FqElem c = z.coord(iv).leading_coeff() * lead_inv_[static_cast<size_t>(v)];
        digits[static_cast<size_t>(v - 1)] = c;
        z = (z - pi_pows_w_[static_cast<size_t>(v)].scaled(c)).truncated(level_);
    }
    return digits;
}

int64_t AbelianGroupStructure::code_of_digits(const std::vector<FqElem>& digits) const {
    int64_t q = ext_->q();
    int64_t c = 0;
    for (const FqElem& d : digits) c = c * q + d.code();
    return c;
}

TruncatedUnit AbelianGroupStructure::digitize(const LElement& x) const {
    LElement z = (x - LElement::one(ext_)).truncated(level_);
    if (v_L_lower_bound(z) < 1)
        throw std::invalid_argument("digitize requires v_L(x - 1) >= 1");
    TruncatedUnit u{ext_, level_, peel(z)};
    return u;
}

int64_t AbelianGroupStructure::mul_codes(int64_t a, int64_t b) const {
    LElement za = z_rep(a);
    LElement zb = z_rep(b);
    LElement zc = (za + zb + za * zb).truncated(level_);
    return code_of_digits(peel(zc));
}

int64_t AbelianGroupStructure::pow_code(int64_t a, int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    int64_t acc = 0;
    int64_t base = a;
    while (e > 0) {
        if (e & 1) acc = mul_codes(acc, base);
        e >>= 1;
        if (e > 0) base = mul_codes(base, base);
    }
    return acc;
}

// (1 + z)^p = 1 + z^p in characteristic p; z^p is computed coordinatewise
// via the Frobenius (sum of p-th powers) and the reduction of A^{ip}.
int64_t AbelianGroupStructure::frobenius_code(int64_t a) const {
    LElement z = z_rep(a);
    int64_t p = ext_->p();
    LElement zp(ext_);
    for (size_t i = 0; i < z.degree(); ++i) {
        const LaurentSeries& ci = z.coord(i);
        if (ci.is_exact_zero()) continue;
        // ci(t)^p has the coefficients' p-th powers at p-fold exponents.
        LaurentSeries cip = LaurentSeries::zero(ext_->spec());
        if (!ci.known_part_empty()) {
            int64_t v = ci.valuation();
            int64_t hi = ci.support_end();
            for (int64_t e = v; e < hi; ++e) {
                FqElem coef = ci.coeff_at(e);
                if (coef == FqElem::zero(ext_->spec())) continue;
                cip = cip + LaurentSeries::from_term(
                                coef.pow(static_cast<uint64_t>(p)), p * e);
            }
        }
        if (ci.prec() != kInf)
            cip = cip.truncated(p * ci.prec());
        zp = zp + alpha_p_pows_[i] * LElement::from_series(ext_, cip);
    }
    return code_of_digits(peel(zp.truncated(level_)));
}

void AbelianGroupStructure::build() {
    int64_t p = ext_->p();
    // pi powers, exact and windowed, plus leading monomial data per level.
    LElement pi = uniformizer(ext_);
    pi_pows_.push_back(LElement::one(ext_));
    for (int64_t v = 1; v < level_; ++v) pi_pows_.push_back(pi_pows_.back() * pi);
    for (const LElement& x : pi_pows_) pi_pows_w_.push_back(x.truncated(level_));
    lead_coord_.assign(static_cast<size_t>(level_), 0);
    lead_inv_.assign(static_cast<size_t>(level_), FqElem::one(ext_->spec()));
    for (int64_t v = 1; v < level_; ++v) {
        const LElement& piv = pi_pows_[static_cast<size_t>(v)];
        bool found = false;
        for (size_t i = 0; i < piv.degree(); ++i) {
            const LaurentSeries& c = piv.coord(i);
            if (c.is_exact_zero()) continue;
            if (p * c.valuation() - ext_->m() * static_cast<int64_t>(i) == v) {
                lead_coord_[static_cast<size_t>(v)] = i;
                lead_inv_[static_cast<size_t>(v)] = c.leading_coeff().inv();
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("pi power has no leading monomial");
    }
    // A^{ip} = (A + a)^i for i < p, windowed.
    LElement alpha_p = LElement::alpha(ext_) +
                       LElement::from_series(ext_, ext_->a());
    LElement acc = LElement::one(ext_);
    alpha_p_pows_.push_back(acc);
    for (int64_t i = 1; i < p; ++i) {
        acc = acc * alpha_p;
        alpha_p_pows_.push_back(acc);
    }

    // p-power map on codes, for cheap order-in-quotient scans.
    std::vector<int64_t> pmap(static_cast<size_t>(order_));
    for (int64_t c = 0; c < order_; ++c) pmap[static_cast<size_t>(c)] = frobenius_code(c);

    // Greedy invariant-factor peeling: repeatedly adjoin an element of
    // maximal order in G/H. Descending factors here; reversed at the end.
    std::vector<char> in_h(static_cast<size_t>(order_), 0);
    table_.assign(static_cast<size_t>(order_), {});
    std::vector<int64_t> h_codes{0};
    in_h[0] = 1;
    std::vector<int64_t> basis_codes;
    std::vector<int64_t> factors_desc;
    int64_t global_bound = 1;
    while (global_bound < level_) global_bound *= p;  // x^{p^j} = 1 + (x-1)^{p^j}
    while (static_cast<int64_t>(h_codes.size()) < order_) {
        int64_t bound = factors_desc.empty() ? global_bound : factors_desc.back();
        int64_t best_code = -1;
        int64_t best_ord = 0;
        for (int64_t c = 1; c < order_; ++c) {
            if (in_h[static_cast<size_t>(c)]) continue;
            int64_t e = 1;
            int64_t y = c;
            while (!in_h[static_cast<size_t>(y)]) {
                y = pmap[static_cast<size_t>(y)];
                e *= p;
            }
            if (e > bound) throw std::logic_error("quotient order exceeds bound");
            if (e > best_ord) {
                best_ord = e;
                best_code = c;
            }
            if (best_ord == bound) break;
        }
        // x^e lands in H = <b_1> x ... x <b_s>; maximality of the previous
        // factors forces e | f_i, which makes the correction land x' with
        // <x'> meeting H trivially.
        int64_t hcode = pow_code(best_code, best_ord);
        std::vector<int64_t> f = table_[static_cast<size_t>(hcode)];
        int64_t xprime = best_code;
        for (size_t i = 0; i < f.size(); ++i) {
            if (f[i] % best_ord != 0)
                throw std::logic_error("maximal-order invariant violated");
            int64_t di = factors_desc[i];
            int64_t adj = (di - f[i] / best_ord) % di;
            xprime = mul_codes(xprime, pow_code(basis_codes[i], adj));
        }
        if (pow_code(xprime, best_ord) != 0)
            throw std::logic_error("corrected generator order too large");
        if (best_ord > 1 && pow_code(xprime, best_ord / p) == 0)
            throw std::logic_error("corrected generator order too small");
        // Extend H by the cosets x'^j H, recording exponents.
        std::vector<int64_t> snapshot = h_codes;
        int64_t cur = xprime;
        for (int64_t j = 1; j < best_ord; ++j) {
            for (int64_t h : snapshot) {
                int64_t nc = mul_codes(h, cur);
                if (in_h[static_cast<size_t>(nc)])
                    throw std::logic_error("coset collision while extending basis");
                in_h[static_cast<size_t>(nc)] = 1;
                std::vector<int64_t> ex = table_[static_cast<size_t>(h)];
                ex.push_back(j);
                table_[static_cast<size_t>(nc)] = std::move(ex);
                h_codes.push_back(nc);
            }
            if (j + 1 < best_ord) cur = mul_codes(cur, xprime);
        }
        for (int64_t h : snapshot) table_[static_cast<size_t>(h)].push_back(0);
        basis_codes.push_back(xprime);
        factors_desc.push_back(best_ord);
    }
    // Ascending invariant factors d_1 | d_2 | ... | d_r.
    factors_.assign(factors_desc.rbegin(), factors_desc.rend());
    for (auto& row : table_) std::reverse(row.begin(), row.end());
    for (auto it = basis_codes.rbegin(); it != basis_codes.rend(); ++it)
        basis_.push_back(unit_from_code(*it));
    int64_t prod = 1;
    for (int64_t d : factors_) prod *= d;
    if (prod != order_) throw std::logic_error("invariant factors do not multiply to the order");
    for (size_t i = 1; i < factors_.size(); ++i)
        if (factors_[i] % factors_[i - 1] != 0)
            throw std::logic_error("invariant factors fail divisibility");
}

GroupHandle unit_group(const ExtHandle& ext, int64_t level) {
    return std::make_shared<AbelianGroupStructure>(ext, level);
}

TruncatedUnit digitize(const ExtHandle& ext, const LElement& x, int64_t level) {
    if (level < 2) throw std::invalid_argument("level must be >= 2");
    const FieldSpec& spec = ext->spec();
    LElement z = x - LElement::one(ext);
    if (v_L_lower_bound(z) < 1)
        throw std::invalid_argument("digitize requires v_L(x - 1) >= 1");
    LElement pi = uniformizer(ext);
    std::vector<LElement> pi_pows{LElement::one(ext)};
    for (int64_t v = 1; v < level; ++v) pi_pows.push_back(pi_pows.back() * pi);
    TruncatedUnit u{ext, level, {}};
    u.digits.assign(static_cast<size_t>(level - 1), FqElem::zero(spec));
    while (v_L_lower_bound(z) < level) {
        int64_t v = v_L(z);
        FqElem c = residue(z * pi_inverse_pow(ext, v));
        u.digits[static_cast<size_t>(v - 1)] = c;
        z = z - pi_pows[static_cast<size_t>(v)].scaled(c);
        if (v_L_lower_bound(z) <= v) throw std::logic_error("digit peel did not advance");
    }
    return u;
}

Rational UnitCharacter::phase_at(int64_t code) const {
    const std::vector<int64_t>& e = group->exponents(code);
    Rational acc(0);
    for (size_t i = 0; i < e.size(); ++i)
        acc = acc + Rational(e[i]) * phases[i];
    return acc.mod1();
}

namespace {

UnitCharacter character_from_index(const GroupHandle& group, int64_t idx) {
    const std::vector<int64_t>& d = group->invariant_factors();
    std::vector<int64_t> a(d.size(), 0);
    for (size_t i = d.size(); i-- > 0;) {
        a[i] = idx % d[i];
        idx /= d[i];
    }
    UnitCharacter chi{group, {}};
    for (size_t i = 0; i < d.size(); ++i) chi.phases.push_back(Rational(a[i], d[i]));
    return chi;
}

// Image of U^n in U^1/U^N is exactly the codes below q^{N-n} (digit c_j = 0
// for j < n), a contiguous prefix under the lexicographic code.
int64_t subgroup_size(const GroupHandle& group, int64_t n) {
    int64_t size = 1;
    for (int64_t j = 0; j < group->level() - n; ++j) size *= group->q();
    return size;
}

bool trivial_on_subgroup(const UnitCharacter& chi, int64_t n) {
    int64_t size = subgroup_size(chi.group, n);
    for (int64_t code = 1; code < size; ++code)
        if (!chi.trivial_at(code)) return false;
    return true;
}

}  // namespace

std::vector<UnitCharacter> enumerate_characters(const GroupHandle& group) {
    std::vector<UnitCharacter> out;
    out.reserve(static_cast<size_t>(group->order()));
    for (int64_t idx = 0; idx < group->order(); ++idx)
        out.push_back(character_from_index(group, idx));
    return out;
}

int64_t char_depth(const UnitCharacter& chi) {
    for (int64_t n = chi.group->level() - 1; n >= 1; --n)
        if (!trivial_on_subgroup(chi, n)) return n;
    return 0;
}

LxCharacter character_of_depth(const ExtHandle& ext, int64_t d, int64_t level) {
    if (d < 1) throw std::invalid_argument("depth must be >= 1");
    if (level < d + 1)
        throw std::invalid_argument("level must exceed the requested depth");
    GroupHandle g = unit_group(ext, level);
    for (int64_t idx = 0; idx < g->order(); ++idx) {
        UnitCharacter chi = character_from_index(g, idx);
        if (trivial_on_subgroup(chi, d + 1) && !trivial_on_subgroup(chi, d))
            return LxCharacter{chi, Rational(0), Rational(0)};
    }
    throw std::logic_error("no character of the requested depth exists");
}

}  // namespace ramdepth
