#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ramdepth {

/// Exact rational number with 64-bit numerator and denominator.
/// Every operation that could leave the 64-bit range throws
/// std::overflow_error instead of wrapping; nothing is ever rounded.
class Rational {
  public:
    Rational() = default;
    Rational(int64_t n) : num_(n), den_(1) {}
    Rational(int64_t n, int64_t d) {
        if (d == 0)
            throw std::domain_error("rational with zero denominator");
        num_ = n;
        den_ = d;
        normalize();
    }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    /// Largest integer <= *this.
    int64_t floor() const {
        if (num_ >= 0)
            return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }

    /// Representative of *this mod 1 in [0, 1).
    Rational mod1() const { return *this - Rational(floor()); }

    friend Rational operator-(const Rational& a) {
        return Rational::make(-static_cast<__int128>(a.num_), a.den_);
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                     static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.num_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::domain_error("rational division by zero");
        return make(static_cast<__int128>(a.num_) * b.den_,
                    static_cast<__int128>(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "a" for integers, "a/b" otherwise.
    std::string to_string() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "a" or "a/b".
    static Rational parse(const std::string& text);

  private:
    static Rational make(__int128 n, __int128 d) {
        Rational r;
        r.assign(n, d);
        return r;
    }

    void assign(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        num_ = static_cast<int64_t>(n);
        den_ = static_cast<int64_t>(d);
    }

    void normalize() { assign(num_, den_); }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    int64_t num_ = 0;
    int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)),
                        std::stoll(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw std::overflow_error("rational literal out of range: '" + text + "'");
    }
}

/// Decimal rendering with three places, computed in integer arithmetic
/// (round half away from zero). Display helper only.
inline std::string approx3(const Rational& r) {
    __int128 scaled = static_cast<__int128>(r.num()) * 1000;
    __int128 d = r.den();
    bool neg = scaled < 0;
    if (neg)
        scaled = -scaled;
    __int128 q = (scaled + d / 2) / d;
    std::string digits = std::to_string(static_cast<long long>(q % 1000));
    digits.insert(0, 3 - digits.size(), '0');
    return (neg ? "-" : "") + std::to_string(static_cast<long long>(q / 1000)) + "." + digits;
}

}  // namespace ramdepth
