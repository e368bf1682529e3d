#include "ramdepth/fq.hpp"

#include <cctype>
#include <stdexcept>

namespace ramdepth {

namespace {

bool is_prime(int64_t n) {
    if (n < 2)
        return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

int64_t mod_p(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

int64_t pow_mod(int64_t a, int64_t e, int64_t p) {
    int64_t r = 1;
    a = mod_p(a, p);
    while (e > 0) {
        if (e & 1)
            r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

int64_t inv_mod(int64_t a, int64_t p) { return pow_mod(a, p - 2, p); }

int degree(const std::vector<int64_t>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0)
            return i;
    return -1;
}

// Remainder of f by the monic divisor g, coefficients mod p.
std::vector<int64_t> poly_rem(std::vector<int64_t> f, const std::vector<int64_t>& g, int64_t p) {
    int dg = degree(g);
    for (int i = degree(f); i >= dg; i = degree(f)) {
        int64_t c = f[i];
        for (int j = 0; j <= dg; ++j)
            f[i - dg + j] = mod_p(f[i - dg + j] - c * g[j], p);
    }
    return f;
}

}  // namespace

FieldSpec::FieldSpec(int64_t p) : p_(p), k_(1), q_(p) {
    validate({0, 1});  // modulus x
}

FieldSpec::FieldSpec(int64_t p, int k, const std::vector<int64_t>& modulus)
    : p_(p), k_(k) {
    validate(modulus);
}

void FieldSpec::validate(const std::vector<int64_t>& modulus) {
    if (!is_prime(p_))
        throw std::invalid_argument("p = " + std::to_string(p_) + " is not prime");
    if (k_ < 1 || k_ > kMaxDegree)
        throw std::invalid_argument("extension degree k must be in [1, 4]");
    q_ = 1;
    for (int i = 0; i < k_; ++i) {
        q_ *= p_;
        if (q_ > kMaxOrder)
            throw std::invalid_argument("field order q = p^k exceeds 2^16");
    }

    std::vector<int64_t> m(modulus);
    for (auto& c : m)
        c = mod_p(c, p_);
    if (degree(m) != k_)
        throw std::invalid_argument("modulus must have degree k = " + std::to_string(k_));
    if (m[k_] != 1) {
        int64_t s = inv_mod(m[k_], p_);
        for (auto& c : m)
            c = mod_p(c * s, p_);
    }
    if (k_ == 1 && m[0] != 0)
        throw std::invalid_argument("prime-field modulus must be the polynomial x");

    // Brute-force irreducibility: a reducible degree-k polynomial has a monic
    // factor of degree <= k/2.
    for (int d = 1; d <= k_ / 2; ++d) {
        int64_t count = 1;
        for (int i = 0; i < d; ++i)
            count *= p_;
        for (int64_t code = 0; code < count; ++code) {
            std::vector<int64_t> g(d + 1, 0);
            int64_t c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = c % p_;
                c /= p_;
            }
            g[d] = 1;
            if (degree(poly_rem(m, g, p_)) < 0)
                throw std::invalid_argument("modulus is reducible over F_p");
        }
    }

    modulus_.fill(0);
    for (int i = 0; i <= k_; ++i)
        modulus_[i] = m[i];
}

std::string FieldSpec::to_string() const {
    if (k_ == 1)
        return "F_" + std::to_string(p_);
    std::string s = "F_" + std::to_string(q_) + " = F_" + std::to_string(p_) + "[x]/(";
    bool first = true;
    for (int i = k_; i >= 0; --i) {
        if (modulus_[i] == 0)
            continue;
        if (!first)
            s += "+";
        first = false;
        if (i == 0 || modulus_[i] != 1)
            s += std::to_string(modulus_[i]);
        if (i >= 1)
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
    return s + ")";
}

FqElem FqElem::from_int(const FieldSpec& spec, int64_t n) {
    FqElem e(spec);
    e.c_[0] = mod_p(n, spec.p());
    return e;
}

FqElem FqElem::gen(const FieldSpec& spec) {
    FqElem e(spec);
    if (spec.k() > 1)
        e.c_[1] = 1;
    return e;  // in a prime field x == 0 mod the modulus x
}

FqElem FqElem::from_coeffs(const FieldSpec& spec, const std::vector<int64_t>& c) {
    if (static_cast<int>(c.size()) > spec.k())
        throw std::invalid_argument("coefficient vector longer than extension degree");
    FqElem e(spec);
    for (size_t i = 0; i < c.size(); ++i)
        e.c_[i] = mod_p(c[i], spec.p());
    return e;
}

FqElem FqElem::from_code(const FieldSpec& spec, int64_t n) {
    if (n < 0 || n >= spec.q())
        throw std::invalid_argument("element code out of range");
    FqElem e(spec);
    for (int i = 0; i < spec.k(); ++i) {
        e.c_[i] = n % spec.p();
        n /= spec.p();
    }
    return e;
}

bool FqElem::is_zero() const {
    for (int i = 0; i < spec_.k(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

bool FqElem::is_one() const {
    if (c_[0] != 1)
        return false;
    for (int i = 1; i < spec_.k(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

int64_t FqElem::code() const {
    int64_t n = 0;
    for (int i = spec_.k() - 1; i >= 0; --i)
        n = n * spec_.p() + c_[i];
    return n;
}

namespace {
void check_same_spec(const FqElem& a, const FqElem& b) {
    if (a.spec() != b.spec())
        throw std::invalid_argument("mismatched field spec");
}
}  // namespace

FqElem operator+(const FqElem& a, const FqElem& b) {
    check_same_spec(a, b);
    FqElem r(a.spec_);
    for (int i = 0; i < a.spec_.k(); ++i)
        r.c_[i] = mod_p(a.c_[i] + b.c_[i], a.spec_.p());
    return r;
}

FqElem operator-(const FqElem& a, const FqElem& b) {
    check_same_spec(a, b);
    FqElem r(a.spec_);
    for (int i = 0; i < a.spec_.k(); ++i)
        r.c_[i] = mod_p(a.c_[i] - b.c_[i], a.spec_.p());
    return r;
}

FqElem operator-(const FqElem& a) { return FqElem::zero(a.spec()) - a; }

FqElem operator*(const FqElem& a, const FqElem& b) {
    check_same_spec(a, b);
    const int64_t p = a.spec_.p();
    const int k = a.spec_.k();
    std::array<int64_t, 2 * FieldSpec::kMaxDegree - 1> prod{};
    for (int i = 0; i < k; ++i) {
        if (a.c_[i] == 0)
            continue;
        for (int j = 0; j < k; ++j)
            prod[i + j] = mod_p(prod[i + j] + a.c_[i] * b.c_[j], p);
    }
    // reduce by the monic modulus: x^k = -(m_0 + ... + m_{k-1} x^{k-1})
    const auto& m = a.spec_.modulus();
    for (int i = 2 * k - 2; i >= k; --i) {
        int64_t c = prod[i];
        if (c == 0)
            continue;
        prod[i] = 0;
        for (int j = 0; j < k; ++j)
            prod[i - k + j] = mod_p(prod[i - k + j] - c * m[j], p);
    }
    FqElem r(a.spec_);
    for (int i = 0; i < k; ++i)
        r.c_[i] = prod[i];
    return r;
}

bool operator==(const FqElem& a, const FqElem& b) {
    return a.spec_ == b.spec_ && a.c_ == b.c_;
}

FqElem FqElem::pow(uint64_t e) const {
    FqElem r = one(spec_);
    FqElem base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FqElem FqElem::inv() const {
    if (is_zero())
        throw std::domain_error("division by zero in " + spec_.to_string());
    return pow(static_cast<uint64_t>(spec_.q() - 2));
}

FqElem FqElem::pth_root() const {
    uint64_t e = 1;
    for (int i = 0; i < spec_.k() - 1; ++i)
        e *= static_cast<uint64_t>(spec_.p());
    return pow(e);
}

std::string FqElem::to_string() const {
    if (is_zero())
        return "0";
    std::string s;
    for (int i = 0; i < spec_.k(); ++i) {
        if (c_[i] == 0)
            continue;
        if (!s.empty())
            s += "+";
        if (i == 0 || c_[i] != 1)
            s += std::to_string(c_[i]);
        if (i == 1)
            s += (c_[i] != 1 ? "*x" : "x");
        else if (i >= 2)
            s += (c_[i] != 1 ? "*x^" : "x^") + std::to_string(i);
    }
    return s;
}

std::vector<int64_t> parse_poly_in_x(const std::string& text, int64_t p) {
    std::vector<int64_t> coeffs;
    size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("poly syntax error at position " + std::to_string(pos) +
                                    ": " + what);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto add_term = [&](int64_t c, int64_t e) {
        if (e < 0 || e > FieldSpec::kMaxDegree)
            fail("exponent of x out of range");
        if (coeffs.size() <= static_cast<size_t>(e))
            coeffs.resize(e + 1, 0);
        coeffs[e] = ((coeffs[e] + c) % p + p) % p;
    };

    skip_ws();
    if (pos == text.size())
        fail("empty polynomial");
    bool first = true;
    while (pos < text.size()) {
        int64_t sign = 1;
        skip_ws();
        if (!first || text[pos] == '+' || text[pos] == '-') {
            if (pos == text.size() || (text[pos] != '+' && text[pos] != '-')) {
                if (!first)
                    fail("expected '+' or '-'");
            } else {
                sign = (text[pos] == '-') ? -1 : 1;
                ++pos;
            }
        }
        first = false;
        skip_ws();
        int64_t c = 1;
        bool saw_number = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            c = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                c = c * 10 + (text[pos] - '0');
                if (c > (int64_t(1) << 40))
                    c %= p;  // keep the accumulator small
                ++pos;
            }
            saw_number = true;
        }
        skip_ws();
        if (pos < text.size() && (text[pos] == '*' || text[pos] == 'x')) {
            if (text[pos] == '*') {
                ++pos;
                skip_ws();
            }
            if (pos == text.size() || text[pos] != 'x')
                fail("expected 'x'");
            ++pos;
            int64_t e = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    fail("expected exponent digits");
                e = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    e = e * 10 + (text[pos] - '0');
                    if (e > 100)
                        fail("exponent of x out of range");
                    ++pos;
                }
            }
            add_term(sign * (c % p), e);
        } else if (saw_number) {
            add_term(sign * (c % p), 0);
        } else {
            fail("expected a coefficient or 'x'");
        }
        skip_ws();
    }
    if (coeffs.empty())
        coeffs.push_back(0);
    return coeffs;
}

}  // namespace ramdepth
