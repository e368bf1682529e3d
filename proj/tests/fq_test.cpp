#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ramdepth/fq.hpp"

using namespace ramdepth;

namespace {

FieldSpec f2() { return FieldSpec(2); }
FieldSpec f3() { return FieldSpec(3); }
FieldSpec f4() { return FieldSpec(2, 2, {1, 1, 1}); }     // x^2 + x + 1
FieldSpec f9() { return FieldSpec(3, 2, {1, 0, 1}); }     // x^2 + 1
FieldSpec f25() { return FieldSpec(5, 2, {2, 0, 1}); }    // x^2 + 2
FieldSpec f8() { return FieldSpec(2, 3, {1, 1, 0, 1}); }  // x^3 + x + 1

}  // namespace

TEST_CASE("spec validation") {
    CHECK(f2().q() == 2);
    CHECK(f4().q() == 4);
    CHECK(f8().q() == 8);
    CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);         // not prime
    CHECK_THROWS_AS(FieldSpec(2, 2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(FieldSpec(2, 2, {0, 0, 1}), std::invalid_argument);  // x^2
    CHECK_THROWS_AS(FieldSpec(3, 5, {1, 1, 1, 1, 1, 1}), std::invalid_argument);  // k > 4
    CHECK_THROWS_AS(FieldSpec(257, 3, {}), std::invalid_argument);  // q > 2^16
}

TEST_CASE("prime field arithmetic") {
    FieldSpec s = f2();
    CHECK(FqElem::one(s) + FqElem::one(s) == FqElem::zero(s));
    FieldSpec t = f3();
    CHECK(FqElem::from_int(t, 2) * FqElem::from_int(t, 2) == FqElem::from_int(t, 1));
    CHECK(FqElem::from_int(t, 2).inv() == FqElem::from_int(t, 2));
    CHECK_THROWS_AS(FqElem::zero(t).inv(), std::domain_error);
}

TEST_CASE("extension field examples") {
    FieldSpec s = f4();
    FqElem x = FqElem::gen(s);
    FqElem one = FqElem::one(s);
    CHECK(x * (x + one) == one);          // x(x+1) = x^2+x = 1 mod x^2+x+1
    CHECK(x.pth_root() == x + one);       // (x+1)^2 = x
    CHECK((x + one) * (x + one) == x);
    CHECK(x.pth_root().pow(2) == x);
}

TEST_CASE("mismatched specs are rejected") {
    CHECK_THROWS_AS(FqElem::one(f2()) + FqElem::one(f3()), std::invalid_argument);
}

TEST_CASE("field axioms on random elements") {
    for (const FieldSpec& s : {f2(), f3(), f4(), f9(), f25(), f8()}) {
        std::mt19937 rng(987123 + s.q());
        std::uniform_int_distribution<int64_t> pick(0, s.q() - 1);
        for (int i = 0; i < 100; ++i) {
            FqElem a = FqElem::from_code(s, pick(rng));
            FqElem b = FqElem::from_code(s, pick(rng));
            FqElem c = FqElem::from_code(s, pick(rng));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + (-a) == FqElem::zero(s));
            if (!(b == FqElem::zero(s))) CHECK(b * b.inv() == FqElem::one(s));
        }
    }
}

TEST_CASE("pth_root is the inverse of Frobenius, exhaustively for q <= 256") {
    for (const FieldSpec& s : {f2(), f3(), f4(), f9(), f25(), f8(),
                               FieldSpec(2, 4, {1, 1, 0, 0, 1}),  // x^4+x+1
                               FieldSpec(251), FieldSpec(3, 4, {2, 1, 0, 0, 1})}) {
        REQUIRE(s.q() <= 256);
        for (int64_t code = 0; code < s.q(); ++code) {
            FqElem a = FqElem::from_code(s, code);
            CHECK(a.pth_root().pow(static_cast<uint64_t>(s.p())) == a);
            CHECK(a.pow(static_cast<uint64_t>(s.p())).pth_root() == a);
        }
    }
}

TEST_CASE("code round-trip gives a deterministic enumeration") {
    for (const FieldSpec& s : {f4(), f9(), f8()}) {
        for (int64_t code = 0; code < s.q(); ++code)
            CHECK(FqElem::from_code(s, code).code() == code);
    }
}

TEST_CASE("polynomial parser") {
    std::vector<int64_t> c = parse_poly_in_x("x^2+x+1", 2);
    CHECK(c == std::vector<int64_t>{1, 1, 1});
    CHECK(parse_poly_in_x("2*x + 1", 3) == std::vector<int64_t>{1, 2});
    CHECK(parse_poly_in_x("7", 5) == std::vector<int64_t>{2});
    CHECK(parse_poly_in_x("x^2 - 1", 3) == std::vector<int64_t>{2, 0, 1});
    CHECK_THROWS_AS(parse_poly_in_x("x^2 + y", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_in_x("", 2), std::invalid_argument);
}

TEST_CASE("element printing") {
    FieldSpec s = f4();
    CHECK((FqElem::gen(s) + FqElem::one(s)).to_string() == "1+x");
    CHECK(FqElem::zero(s).to_string() == "0");
    CHECK(FqElem::one(f3()).to_string() == "1");
}
