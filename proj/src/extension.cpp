#include "ramdepth/extension.hpp"

#include <algorithm>
#include <sstream>

namespace ramdepth {

void RamificationData::validate() const {
    if (steps.empty()) throw std::invalid_argument("empty ramification data");
    if (steps.back().upper_end != kInf || steps.back().order != 1)
        throw std::invalid_argument("ramification data must end with (inf, 1)");
    for (size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].order < 1) throw std::invalid_argument("group order must be >= 1");
        if (i > 0) {
            if (steps[i - 1].upper_end >= steps[i].upper_end)
                throw std::invalid_argument("upper ends must strictly increase");
            if (steps[i].order >= steps[i - 1].order ||
                steps[i - 1].order % steps[i].order != 0)
                throw std::invalid_argument("orders must strictly decrease and divide");
        }
    }
}

RamificationData RamificationData::single_break(int64_t m, int64_t order) {
    RamificationData rd{{{m, order}, {kInf, 1}}};
    rd.validate();
    return rd;
}

RamificationData RamificationData::tame(int64_t e) {
    if (e < 1) throw std::invalid_argument("tame index must be >= 1");
    RamificationData rd = (e == 1) ? RamificationData{{{kInf, 1}}}
                                   : RamificationData{{{0, e}, {kInf, 1}}};
    rd.validate();
    return rd;
}

ASExtension::ASExtension(const LaurentSeries& a)
    : spec_(a.spec()), a_red_(a.spec()), witness_(a.spec()), m_(0), w_(0), u_(0) {
    AsReduceResult red = as_reduce(a);
    a_red_ = red.a_red;
    witness_ = red.witness;
    m_ = red.m;
    int64_t p = spec_.p();
    // p*w - m*u = 1 with 1 <= u < p: unique since gcd(m, p) = 1.
    for (int64_t u = 1; u < p; ++u) {
        if ((1 + m_ * u) % p == 0) {
            u_ = u;
            w_ = (1 + m_ * u) / p;
            break;
        }
    }
    if (u_ == 0) throw std::logic_error("no uniformizer exponent found");
}

LElement::LElement(ExtHandle ext) : ext_(std::move(ext)) {
    c_.assign(static_cast<size_t>(ext_->p()), LaurentSeries::zero(ext_->spec()));
}

LElement LElement::from_series(ExtHandle ext, const LaurentSeries& c0) {
    if (!(c0.spec() == ext->spec())) throw std::invalid_argument("mismatched field spec");
    LElement r(std::move(ext));
    r.c_[0] = c0;
    return r;
}

LElement LElement::constant(ExtHandle ext, const FqElem& c) {
    return from_series(std::move(ext), LaurentSeries::from_term(c, 0));
}

LElement LElement::constant(ExtHandle ext, int64_t c) {
    const FieldSpec spec = ext->spec();
    return constant(std::move(ext), FqElem::from_int(spec, c));
}

LElement LElement::alpha(ExtHandle ext) {
    LElement r(std::move(ext));
    r.c_[1] = LaurentSeries::one(r.ext_->spec());
    return r;
}

void LElement::check_same(const LElement& other) const {
    if (ext_.get() != other.ext_.get())
        throw std::invalid_argument("elements of different extensions");
}

LElement operator+(const LElement& a, const LElement& b) {
    a.check_same(b);
    LElement r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
}

LElement operator-(const LElement& a) {
    LElement r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

LElement operator-(const LElement& a, const LElement& b) { return a + (-b); }

LElement operator*(const LElement& a, const LElement& b) {
    a.check_same(b);
    size_t p = a.c_.size();
    std::vector<LaurentSeries> conv(2 * p - 1, LaurentSeries::zero(a.ext_->spec()));
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j)
            conv[i + j] = conv[i + j] + a.c_[i] * b.c_[j];
    // Fold A^j for j >= p via A^p = A + a.
    const LaurentSeries& ared = a.ext_->a();
    for (size_t j = 2 * p - 2; j >= p; --j) {
        conv[j - p + 1] = conv[j - p + 1] + conv[j];
        conv[j - p] = conv[j - p] + conv[j] * ared;
        conv[j] = LaurentSeries::zero(a.ext_->spec());
    }
    LElement r(a.ext_);
    for (size_t i = 0; i < p; ++i) r.c_[i] = conv[i];
    return r;
}

bool operator==(const LElement& a, const LElement& b) {
    return a.ext_.get() == b.ext_.get() && a.c_ == b.c_;
}

LElement LElement::pow(uint64_t e) const {
    LElement acc = one(ext_);
    LElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

bool LElement::is_exact_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const LaurentSeries& s) { return s.is_exact_zero(); });
}

LElement LElement::scaled(const FqElem& c) const {
    LElement r = *this;
    LaurentSeries cs = LaurentSeries::from_term(c, 0);
    for (auto& coord : r.c_) coord = coord * cs;
    return r;
}

LElement LElement::truncated(int64_t n) const {
    if (n < 1) throw std::invalid_argument("truncation level must be >= 1");
    int64_t p = ext_->p();
    int64_t m = ext_->m();
    LElement r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i) {
        // Smallest T with p*T - m*i >= n.
        int64_t t = (n + m * static_cast<int64_t>(i) + p - 1) / p;
        r.c_[i] = r.c_[i].truncated(t);
    }
    return r;
}

std::string LElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_exact_zero()) continue;
        if (!first) out << " + ";
        out << "(" << c_[i].to_string() << ")";
        if (i == 1) out << "*A";
        if (i > 1) out << "*A^" << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

int64_t v_L(const LElement& x) {
    int64_t p = x.ext()->p();
    int64_t m = x.ext()->m();
    int64_t known = kInf;
    int64_t bound = kInf;
    for (size_t i = 0; i < x.degree(); ++i) {
        const LaurentSeries& c = x.coord(i);
        if (c.is_exact_zero()) continue;
        int64_t vb = c.valuation_bound();
        int64_t term_bound = p * vb - m * static_cast<int64_t>(i);
        bound = std::min(bound, term_bound);
        if (!c.known_part_empty())
            known = std::min(known, p * c.valuation() - m * static_cast<int64_t>(i));
    }
    if (known == kInf && bound == kInf) return kInf;  // exact zero
    // The minimum over coordinates is attained once (residues of the terms
    // are distinct mod p), so a known term at or below every unknown bound
    // decides the valuation.
    if (known != kInf && known <= bound) return known;
    throw std::domain_error("valuation undetermined at this precision");
}

int64_t v_L_lower_bound(const LElement& x) {
    int64_t p = x.ext()->p();
    int64_t m = x.ext()->m();
    int64_t bound = kInf;
    for (size_t i = 0; i < x.degree(); ++i) {
        const LaurentSeries& c = x.coord(i);
        if (c.is_exact_zero()) continue;
        bound = std::min(bound, p * c.valuation_bound() - m * static_cast<int64_t>(i));
    }
    return bound;
}

LElement galois_apply(int64_t j, const LElement& x) {
    const ExtHandle& ext = x.ext();
    int64_t p = ext->p();
    j = ((j % p) + p) % p;
    LElement shifted_alpha = LElement::alpha(ext) + LElement::constant(ext, j);
    // Horner in A + j.
    LElement acc(ext);
    for (size_t i = x.degree(); i-- > 0;)
        acc = acc * shifted_alpha + LElement::from_series(ext, x.coord(i));
    return acc;
}

LElement uniformizer(const ExtHandle& ext) {
    LElement pi = LElement::alpha(ext).pow(static_cast<uint64_t>(ext->pi_u()));
    pi = pi * LElement::from_series(
                  ext, LaurentSeries::t_power(ext->spec(), ext->pi_w()));
    if (v_L(pi) != 1) throw std::logic_error("uniformizer has wrong valuation");
    return pi;
}

std::vector<int64_t> galois_displacements(const ExtHandle& ext) {
    LElement pi = uniformizer(ext);
    std::vector<int64_t> out;
    for (int64_t j = 1; j < ext->p(); ++j)
        out.push_back(v_L(galois_apply(j, pi) - pi));
    return out;
}

RamificationData ramification_breaks(const ExtHandle& ext) {
    std::vector<int64_t> disp = galois_displacements(ext);
    int64_t expected = ext->m() + 1;
    for (size_t j = 0; j < disp.size(); ++j) {
        if (disp[j] != expected)
            throw BreakMismatch("displacement of sigma_" + std::to_string(j + 1) +
                                " is " + std::to_string(disp[j]) + ", expected " +
                                std::to_string(expected));
    }
    // i(sigma) = m + 1 for all sigma != 1 means G_u = G for u <= m, then 1.
    return RamificationData::single_break(ext->m(), ext->p());
}

FqElem residue(const LElement& x) {
    if (v_L(x) != 0) throw std::domain_error("residue requires v_L(x) = 0");
    return x.coord(0).coeff_at(0);
}

LElement alpha_inverse(const ExtHandle& ext, int64_t series_prec) {
    LElement num = LElement::alpha(ext).pow(static_cast<uint64_t>(ext->p() - 1)) -
                   LElement::one(ext);
    LaurentSeries a_inv = ext->a().inverse(series_prec);
    return num * LElement::from_series(ext, a_inv);
}

LElement pi_inverse_pow(const ExtHandle& ext, int64_t n) {
    if (n < 0) throw std::invalid_argument("pi_inverse_pow requires n >= 0");
    // With 1/a known mod t^{m+4}, each 1/pi^n keeps coordinate precision at
    // least 1 - n + p*3, comfortably past what residue extraction reads.
    LElement ainv = alpha_inverse(ext, ext->m() + 4);
    LElement r = ainv.pow(static_cast<uint64_t>(ext->pi_u()) * static_cast<uint64_t>(n));
    LElement tshift = LElement::from_series(
        ext, LaurentSeries::t_power(ext->spec(), -ext->pi_w() * n));
    return r * tshift;
}

}  // namespace ramdepth
