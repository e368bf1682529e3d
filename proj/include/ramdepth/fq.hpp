#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ramdepth {

/// Description of a finite field F_q, q = p^k, as F_p[x]/(modulus).
/// The modulus is stored monic with coefficients in [0, p); for k = 1 it is
/// the polynomial x, so elements are plain residues mod p.
class FieldSpec {
  public:
    static constexpr int kMaxDegree = 4;
    static constexpr int64_t kMaxOrder = 1 << 16;

    /// Prime field F_p.
    explicit FieldSpec(int64_t p);

    /// Extension field F_p[x]/(modulus); modulus[i] is the coefficient of
    /// x^i and must have degree k. Irreducibility is checked by brute-force
    /// divisor search.
    FieldSpec(int64_t p, int k, const std::vector<int64_t>& modulus);

    int64_t p() const { return p_; }
    int k() const { return k_; }
    int64_t q() const { return q_; }
    const std::array<int64_t, kMaxDegree + 1>& modulus() const { return modulus_; }

    bool operator==(const FieldSpec& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    void validate(const std::vector<int64_t>& modulus);

    int64_t p_ = 2;
    int k_ = 1;
    int64_t q_ = 2;
    std::array<int64_t, kMaxDegree + 1> modulus_{};  // degree k, monic
};

/// Element of F_q in the polynomial basis 1, x, ..., x^{k-1}.
class FqElem {
  public:
    explicit FqElem(const FieldSpec& spec) : spec_(spec) {}

    static FqElem zero(const FieldSpec& spec) { return FqElem(spec); }
    static FqElem one(const FieldSpec& spec) { return from_int(spec, 1); }
    static FqElem from_int(const FieldSpec& spec, int64_t n);
    /// The class of x (zero in a prime field, where the modulus is x).
    static FqElem gen(const FieldSpec& spec);
    /// From the coefficient vector c (length <= k), c[i] the coefficient of x^i.
    static FqElem from_coeffs(const FieldSpec& spec, const std::vector<int64_t>& c);
    /// Inverse of code(): digits of n base p give the coefficients.
    static FqElem from_code(const FieldSpec& spec, int64_t n);

    const FieldSpec& spec() const { return spec_; }
    int64_t coeff(int i) const { return c_[i]; }
    bool is_zero() const;
    bool is_one() const;

    /// Integer in [0, q) encoding the element: sum c_i p^i. Orders the field
    /// elements deterministically; from_code inverts it.
    int64_t code() const;

    friend FqElem operator+(const FqElem& a, const FqElem& b);
    friend FqElem operator-(const FqElem& a, const FqElem& b);
    friend FqElem operator-(const FqElem& a);
    friend FqElem operator*(const FqElem& a, const FqElem& b);
    friend bool operator==(const FqElem& a, const FqElem& b);
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    FqElem pow(uint64_t e) const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    FqElem inv() const;
    /// The unique p-th root, computed as a^{p^{k-1}}.
    FqElem pth_root() const;

    /// Polynomial in x, e.g. "0", "2", "x", "1+x", "2+x^2".
    std::string to_string() const;

  private:
    FieldSpec spec_;
    std::array<int64_t, FieldSpec::kMaxDegree> c_{};
};

/// Parses a polynomial in x over F_p ("x^2+x+1", "2*x + 1", "7") into a
/// coefficient vector reduced mod p; index = power of x. Throws
/// std::invalid_argument with a position on malformed input.
std::vector<int64_t> parse_poly_in_x(const std::string& text, int64_t p);

}  // namespace ramdepth
