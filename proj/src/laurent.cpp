#include "ramdepth/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ramdepth {

namespace {

// Saturating addition: kInf absorbs.
int64_t add_prec(int64_t a, int64_t b) {
    if (a == kInf || b == kInf) return kInf;
    return a + b;
}

}  // namespace

void LaurentSeries::normalize() {
    if (prec_ != kInf) {
        // Stored exponents must stay below the precision.
        while (!coeffs_.empty() &&
               v_ + static_cast<int64_t>(coeffs_.size()) > prec_) {
            coeffs_.pop_back();
        }
    }
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == FqElem::zero(spec_)) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<ptrdiff_t>(lead));
        v_ += static_cast<int64_t>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == FqElem::zero(spec_)) coeffs_.pop_back();
    if (coeffs_.empty()) v_ = kInf;
}

LaurentSeries LaurentSeries::from_term(const FqElem& c, int64_t e) {
    LaurentSeries r(c.spec());
    if (!(c == FqElem::zero(c.spec()))) {
        r.v_ = e;
        r.coeffs_ = {c};
    }
    return r;
}

int64_t LaurentSeries::valuation() const {
    if (coeffs_.empty()) {
        if (prec_ == kInf) return kInf;
        throw std::domain_error(
            "valuation undetermined: series is zero modulo t^" + std::to_string(prec_));
    }
    return v_;
}

int64_t LaurentSeries::valuation_bound() const {
    return coeffs_.empty() ? prec_ : v_;
}

FqElem LaurentSeries::leading_coeff() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero series");
    return coeffs_.front();
}

FqElem LaurentSeries::coeff_at(int64_t e) const {
    if (prec_ != kInf && e >= prec_)
        throw std::domain_error("coefficient of t^" + std::to_string(e) +
                                " beyond precision t^" + std::to_string(prec_));
    if (coeffs_.empty() || e < v_ || e >= v_ + static_cast<int64_t>(coeffs_.size()))
        return FqElem::zero(spec_);
    return coeffs_[static_cast<size_t>(e - v_)];
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    if (!(a.spec_ == b.spec_)) throw std::invalid_argument("mismatched field spec");
    LaurentSeries r(a.spec_);
    r.prec_ = std::min(a.prec_, b.prec_);
    if (a.coeffs_.empty() && b.coeffs_.empty()) {
        r.normalize();
        return r;
    }
    int64_t lo = std::min(a.coeffs_.empty() ? kInf : a.v_,
                          b.coeffs_.empty() ? kInf : b.v_);
    int64_t hi = std::max(a.coeffs_.empty() ? lo : a.v_ + static_cast<int64_t>(a.coeffs_.size()),
                          b.coeffs_.empty() ? lo : b.v_ + static_cast<int64_t>(b.coeffs_.size()));
    r.v_ = lo;
    r.coeffs_.assign(static_cast<size_t>(hi - lo), FqElem::zero(a.spec_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        r.coeffs_[static_cast<size_t>(a.v_ - lo) + i] = r.coeffs_[static_cast<size_t>(a.v_ - lo) + i] + a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i)
        r.coeffs_[static_cast<size_t>(b.v_ - lo) + i] = r.coeffs_[static_cast<size_t>(b.v_ - lo) + i] + b.coeffs_[i];
    r.normalize();
    return r;
}

LaurentSeries operator-(const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    if (!(a.spec_ == b.spec_)) throw std::invalid_argument("mismatched field spec");
    LaurentSeries r(a.spec_);
    // Exact zero annihilates regardless of the other operand's precision.
    if (a.is_exact_zero() || b.is_exact_zero()) return r;
    r.prec_ = std::min(add_prec(a.prec_, b.valuation_bound()),
                       add_prec(b.prec_, a.valuation_bound()));
    if (!a.coeffs_.empty() && !b.coeffs_.empty()) {
        r.v_ = a.v_ + b.v_;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, FqElem::zero(a.spec_));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    r.normalize();
    return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.spec_ == b.spec_ && a.v_ == b.v_ && a.prec_ == b.prec_ &&
           a.coeffs_ == b.coeffs_;
}

LaurentSeries LaurentSeries::pow(uint64_t e) const {
    LaurentSeries acc = one(spec_);
    LaurentSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

LaurentSeries LaurentSeries::shifted(int64_t s) const {
    LaurentSeries r = *this;
    if (!r.coeffs_.empty()) r.v_ += s;
    if (r.prec_ != kInf) r.prec_ += s;
    return r;
}

LaurentSeries LaurentSeries::truncated(int64_t n) const {
    LaurentSeries r = *this;
    r.prec_ = std::min(r.prec_, n);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::inverse(int64_t n) const {
    if (coeffs_.empty())
        throw std::domain_error("inverse of a series with no known nonzero term");
    int64_t va = v_;
    // 1/a = t^{-va} / u with u = a * t^{-va} a unit power series. The result
    // carries exponents -va .. n-1, i.e. len = n + va unit coefficients, and
    // coefficient u_j is only known when va + j < prec.
    int64_t len = n + va;
    if (len <= 0) {
        LaurentSeries r(spec_);
        r.prec_ = n;
        return r;
    }
    if (prec_ != kInf && prec_ - va < len)
        throw std::domain_error("insufficient precision to invert to t^" +
                                std::to_string(n));
    auto u = [&](int64_t j) -> FqElem {
        if (j < 0 || j >= static_cast<int64_t>(coeffs_.size()))
            return FqElem::zero(spec_);
        return coeffs_[static_cast<size_t>(j)];
    };
    std::vector<FqElem> w;
    w.reserve(static_cast<size_t>(len));
    FqElem inv0 = coeffs_.front().inv();
    w.push_back(inv0);
    for (int64_t j = 1; j < len; ++j) {
        FqElem s = FqElem::zero(spec_);
        for (int64_t i = 1; i <= j; ++i) s = s + u(i) * w[static_cast<size_t>(j - i)];
        w.push_back(-(inv0 * s));
    }
    LaurentSeries r(spec_);
    r.v_ = -va;
    r.coeffs_ = std::move(w);
    r.prec_ = n;
    r.normalize();
    return r;
}

LaurentSeries wp(const LaurentSeries& a) {
    return a.pow(static_cast<uint64_t>(a.spec().p())) - a;
}

AsReduceResult as_reduce(const LaurentSeries& a) {
    if (!a.is_exact())
        throw std::invalid_argument("reduction requires an exact series");
    if (a.is_exact_zero() || a.valuation() >= 0)
        throw std::invalid_argument("reduction requires v(a) < 0");
    const FieldSpec& spec = a.spec();
    int64_t p = spec.p();
    LaurentSeries cur = a;
    LaurentSeries witness = LaurentSeries::zero(spec);
    while (true) {
        if (cur.is_exact_zero() || cur.valuation() >= 0)
            throw ReducesToIntegral(
                "class reduces into the ring of integers: no totally wildly "
                "ramified degree-" + std::to_string(p) + " extension arises");
        int64_t n = -cur.valuation();
        if (n % p != 0) break;
        LaurentSeries r = LaurentSeries::from_term(cur.leading_coeff().pth_root(), -(n / p));
        cur = cur - wp(r);
        witness = witness + r;
    }
    return {cur, -cur.valuation(), witness};
}

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("series syntax error at position " +
                                    std::to_string(i) + ": " + what);
    }
    int64_t read_int() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t digits_from = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits_from) fail("expected an integer");
        try {
            return std::stoll(s.substr(start, i - start));
        } catch (const std::out_of_range&) {
            i = start;
            fail("integer out of range");
        }
    }
};

FqElem eval_poly_in_x(const std::vector<int64_t>& coeffs, const FieldSpec& spec) {
    if (spec.k() == 1) {
        for (size_t d = 1; d < coeffs.size(); ++d)
            if (coeffs[d] != 0)
                throw std::invalid_argument("coefficient not reducible in " +
                                            spec.to_string() + ": uses x");
        return coeffs.empty() ? FqElem::zero(spec) : FqElem::from_int(spec, coeffs[0]);
    }
    FqElem acc = FqElem::zero(spec);
    for (size_t d = coeffs.size(); d-- > 0;)
        acc = acc * FqElem::gen(spec) + FqElem::from_int(spec, coeffs[d]);
    return acc;
}

// COEF: decimal integer, parenthesized x-polynomial, or a bare x-polynomial
// term (the latter only meaningful when followed directly by '*' or the end
// of the term; parenthesized form is canonical).
FqElem read_coef(Cursor& c, const FieldSpec& spec) {
    if (c.peek() == '(') {
        size_t open = c.i;
        int depth = 0;
        size_t j = c.i;
        for (; j < c.s.size(); ++j) {
            if (c.s[j] == '(') ++depth;
            if (c.s[j] == ')' && --depth == 0) break;
        }
        if (j >= c.s.size()) {
            c.i = open;
            c.fail("unbalanced parenthesis");
        }
        std::string inner = c.s.substr(open + 1, j - open - 1);
        c.i = j + 1;
        std::vector<int64_t> coeffs;
        try {
            coeffs = parse_poly_in_x(inner, spec.p());
        } catch (const std::invalid_argument& e) {
            c.i = open;
            c.fail(e.what());
        }
        return eval_poly_in_x(coeffs, spec);
    }
    return FqElem::from_int(spec, c.read_int());
}

}  // namespace

LaurentSeries LaurentSeries::parse(const std::string& text, const FieldSpec& spec) {
    Cursor c{text};
    LaurentSeries acc = LaurentSeries::zero(spec);
    bool first = true;
    if (c.done()) c.fail("empty series");
    while (!c.done()) {
        FqElem sign = FqElem::one(spec);
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            ++c.i;
            if (ch == '-') sign = -sign;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        // term := COEF [* t [^ EXP]] | t [^ EXP]
        FqElem coef = FqElem::one(spec);
        bool have_coef = false;
        char nxt = c.peek();
        if (nxt != 't') {
            if (nxt == '(' || std::isdigit(static_cast<unsigned char>(nxt))) {
                coef = read_coef(c, spec);
                have_coef = true;
            } else {
                c.fail("expected a term");
            }
        }
        int64_t exp = 0;
        bool have_t = false;
        if (!have_coef || c.peek() == '*') {
            if (have_coef) ++c.i;  // consume '*'
            if (c.peek() != 't') c.fail("expected 't'");
            ++c.i;
            have_t = true;
            exp = 1;
            if (c.peek() == '^') {
                ++c.i;
                exp = c.read_int();
            }
        }
        (void)have_t;
        acc = acc + LaurentSeries::from_term(sign * coef, exp);
        first = false;
    }
    return acc;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream out;
    if (coeffs_.empty()) {
        out << "0";
    } else {
        bool first = true;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            const FqElem& c = coeffs_[i];
            if (c == FqElem::zero(spec_)) continue;
            if (!first) out << " + ";
            int64_t e = v_ + static_cast<int64_t>(i);
            std::string cs = c.to_string();
            bool composite = cs.find('x') != std::string::npos;
            if (composite) cs = "(" + cs + ")";
            if (e == 0) {
                out << cs;
            } else {
                if (!(c == FqElem::one(spec_))) out << cs << "*";
                out << "t";
                if (e != 1) out << "^" << e;
            }
            first = false;
        }
    }
    if (prec_ != kInf) out << " + O(t^" << prec_ << ")";
    return out.str();
}

}  // namespace ramdepth
