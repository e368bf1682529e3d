#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>

#include "ramdepth/unit_characters.hpp"

using namespace ramdepth;

namespace {

ExtHandle ext_q2() {
    static ExtHandle e = make_extension(LaurentSeries::t_power(FieldSpec(2), -3));
    return e;
}
ExtHandle ext_q3() {
    static ExtHandle e = make_extension(LaurentSeries::t_power(FieldSpec(3), -2));
    return e;
}
ExtHandle ext_q4() {
    static ExtHandle e =
        make_extension(LaurentSeries::t_power(FieldSpec(2, 2, {1, 1, 1}), -3));
    return e;
}

std::map<int64_t, int64_t> depth_census(const GroupHandle& g) {
    std::map<int64_t, int64_t> census;
    for (const UnitCharacter& chi : enumerate_characters(g)) ++census[char_depth(chi)];
    return census;
}

}  // namespace

TEST_CASE("small group structures") {
    GroupHandle g2 = unit_group(ext_q2(), 2);
    CHECK(g2->order() == 2);
    CHECK(g2->invariant_factors() == std::vector<int64_t>{2});
    CHECK(g2->mul_codes(1, 1) == 0);

    GroupHandle g3 = unit_group(ext_q2(), 3);
    CHECK(g3->order() == 4);
    CHECK(g3->invariant_factors() == std::vector<int64_t>{4});
    // (1 + pi)^2 = 1 + pi^2 in characteristic 2
    CHECK(g3->mul_codes(2, 2) == 1);
    CHECK(g3->pow_code(2, 4) == 0);

    GroupHandle g4 = unit_group(ext_q2(), 4);
    CHECK(g4->order() == 8);
    CHECK(g4->invariant_factors() == (std::vector<int64_t>{2, 4}));
}

TEST_CASE("group order and factor invariants") {
    struct Row {
        ExtHandle e;
        int64_t maxN;
    };
    for (const Row& r : {Row{ext_q2(), 5}, Row{ext_q3(), 4}, Row{ext_q4(), 3}}) {
        int64_t q = r.e->q();
        for (int64_t N = 2; N <= r.maxN; ++N) {
            GroupHandle g = unit_group(r.e, N);
            int64_t expect = 1;
            for (int64_t i = 1; i < N; ++i) expect *= q;
            CHECK(g->order() == expect);
            int64_t prod = 1;
            for (size_t i = 0; i < g->invariant_factors().size(); ++i) {
                int64_t d = g->invariant_factors()[i];
                prod *= d;
                if (i > 0) CHECK(d % g->invariant_factors()[i - 1] == 0);
                // basis element i has exact order d_i
                int64_t b = g->basis()[i].code();
                CHECK(g->pow_code(b, d) == 0);
                CHECK(g->pow_code(b, d / r.e->p()) != 0);
            }
            CHECK(prod == g->order());
        }
    }
}

TEST_CASE("codes are lexicographic in the digits") {
    GroupHandle g = unit_group(ext_q3(), 3);
    TruncatedUnit u = g->unit_from_code(5);
    CHECK(u.digits.size() == 2);
    CHECK(u.digits[0] == FqElem::from_int(FieldSpec(3), 1));
    CHECK(u.digits[1] == FqElem::from_int(FieldSpec(3), 2));
    CHECK(u.code() == 5);
    CHECK_THROWS_AS(g->unit_from_code(9), std::invalid_argument);
}

TEST_CASE("exponent table recombines over the basis") {
    for (const GroupHandle& g : {unit_group(ext_q2(), 4), unit_group(ext_q3(), 3),
                                 unit_group(ext_q4(), 3)}) {
        for (int64_t c = 0; c < g->order(); ++c) {
            const std::vector<int64_t>& e = g->exponents(c);
            REQUIRE(e.size() == g->invariant_factors().size());
            int64_t acc = 0;
            for (size_t i = 0; i < e.size(); ++i) {
                CHECK(e[i] >= 0);
                CHECK(e[i] < g->invariant_factors()[i]);
                acc = g->mul_codes(acc, g->pow_code(g->basis()[i].code(), e[i]));
            }
            CHECK(acc == c);
        }
    }
}

TEST_CASE("group law is abelian and respects the identity") {
    GroupHandle g = unit_group(ext_q3(), 4);
    std::mt19937 rng(60601);
    std::uniform_int_distribution<int64_t> dist(0, g->order() - 1);
    for (int i = 0; i < 50; ++i) {
        int64_t a = dist(rng);
        int64_t b = dist(rng);
        int64_t c = dist(rng);
        CHECK(g->mul_codes(a, b) == g->mul_codes(b, a));
        CHECK(g->mul_codes(a, 0) == a);
        CHECK(g->mul_codes(g->mul_codes(a, b), c) == g->mul_codes(a, g->mul_codes(b, c)));
        CHECK(g->pow_code(a, 3) ==
              g->mul_codes(a, g->mul_codes(a, a)));
    }
}

TEST_CASE("digit product commutes with the exact product") {
    // group-internal residue peeling vs the standalone route through
    // pi_inverse_pow, exhaustively on small groups
    for (int64_t N : {2, 3, 4, 5}) {
        GroupHandle g = unit_group(ext_q2(), N);
        for (int64_t a = 0; a < g->order(); ++a)
            for (int64_t b = 0; b < g->order(); ++b) {
                LElement prod = g->element(a) * g->element(b);
                CHECK(g->mul_codes(a, b) == digitize(ext_q2(), prod, N).code());
            }
    }
    std::mt19937 rng(77007);
    for (const GroupHandle& g : {unit_group(ext_q3(), 3), unit_group(ext_q4(), 3)}) {
        std::uniform_int_distribution<int64_t> dist(0, g->order() - 1);
        for (int i = 0; i < 20; ++i) {
            int64_t a = dist(rng);
            int64_t b = dist(rng);
            LElement prod = g->element(a) * g->element(b);
            CHECK(g->mul_codes(a, b) == digitize(g->ext(), prod, g->level()).code());
        }
    }
}

TEST_CASE("digitize round trips and ignores deeper terms") {
    for (const GroupHandle& g : {unit_group(ext_q2(), 4), unit_group(ext_q3(), 3)}) {
        for (int64_t c = 0; c < g->order(); ++c) {
            LElement x = g->unit_from_code(c).to_element();
            CHECK(g->digitize(x).code() == c);
            CHECK(digitize(g->ext(), x, g->level()).code() == c);
            // multiplying by 1 + pi^N does not change the digits mod U^N
            LElement deep = LElement::one(g->ext()) +
                            uniformizer(g->ext()).pow(static_cast<uint64_t>(g->level()));
            CHECK(g->digitize(x * deep).code() == c);
        }
    }
    CHECK_THROWS_AS(digitize(ext_q2(), LElement::alpha(ext_q2()), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(unit_group(ext_q2(), 3)->digitize(LElement::alpha(ext_q2())),
                    std::invalid_argument);
}

TEST_CASE("filtration images are code prefixes") {
    GroupHandle g = unit_group(ext_q2(), 5);
    for (int64_t n = 1; n < 5; ++n) {
        int64_t size = 1;
        for (int64_t j = 0; j < 5 - n; ++j) size *= 2;
        // closed under the group law, and representatives sit in U^n
        for (int64_t a = 0; a < size; ++a) {
            for (int64_t b = 0; b < size; ++b) CHECK(g->mul_codes(a, b) < size);
            if (a == 0) continue;
            LElement x = g->unit_from_code(a).to_element();
            CHECK(v_L(x - LElement::one(g->ext())) >= n);
        }
    }
}

TEST_CASE("group construction limits") {
    CHECK_THROWS_AS(unit_group(ext_q2(), 1), std::invalid_argument);
    CHECK_THROWS_AS(unit_group(ext_q2(), 16), std::domain_error);
    CHECK_THROWS_WITH_AS(unit_group(ext_q2(), 16), doctest::Contains("exceeds cap"),
                         std::domain_error);
}

TEST_CASE("character phases") {
    std::vector<UnitCharacter> dual2 = enumerate_characters(unit_group(ext_q2(), 2));
    REQUIRE(dual2.size() == 2);
    CHECK(dual2[0].phases == std::vector<Rational>{Rational(0)});
    CHECK(dual2[1].phases == std::vector<Rational>{Rational(1, 2)});
    CHECK(char_depth(dual2[0]) == 0);
    CHECK(char_depth(dual2[1]) == 1);

    GroupHandle g = unit_group(ext_q2(), 3);  // cyclic of order 4
    std::vector<UnitCharacter> chars = enumerate_characters(g);
    REQUIRE(chars.size() == 4);
    CHECK(chars[0].phases == std::vector<Rational>{Rational(0)});
    CHECK(chars[1].phases == std::vector<Rational>{Rational(1, 4)});
    CHECK(chars[3].phases == std::vector<Rational>{Rational(3, 4)});
    CHECK(chars[1].phase_at(0) == Rational(0));
    CHECK(enumerate_characters(unit_group(ext_q2(), 4)).size() == 8);

    // phases add along the group law
    std::mt19937 rng(90909);
    GroupHandle h = unit_group(ext_q3(), 3);
    std::uniform_int_distribution<int64_t> dist(0, h->order() - 1);
    for (const UnitCharacter& chi : enumerate_characters(h))
        for (int i = 0; i < 10; ++i) {
            int64_t a = dist(rng);
            int64_t b = dist(rng);
            CHECK(chi.phase_at(h->mul_codes(a, b)) ==
                  (chi.phase_at(a) + chi.phase_at(b)).mod1());
        }
}

TEST_CASE("depth census") {
    for (const GroupHandle& g :
         {unit_group(ext_q2(), 3), unit_group(ext_q2(), 4), unit_group(ext_q2(), 5),
          unit_group(ext_q3(), 4), unit_group(ext_q4(), 3)}) {
        std::map<int64_t, int64_t> census = depth_census(g);
        int64_t q = g->q();
        CHECK(census[0] == 1);
        int64_t total = census[0];
        int64_t qd = 1;
        for (int64_t d = 1; d < g->level(); ++d) {
            CHECK(census[d] == qd * (q - 1));
            total += census[d];
            qd *= q;
        }
        CHECK(total == g->order());
    }
}

TEST_CASE("character of a prescribed depth") {
    for (int64_t d = 1; d <= 3; ++d) {
        LxCharacter chi = character_of_depth(ext_q2(), d, d + 2);
        CHECK(char_depth(chi.unit_part) == d);
        CHECK(chi.tame_part == Rational(0));
        CHECK(chi.uniformizer_part == Rational(0));
    }
    // minimal level N = d + 1 is accepted; d = N - 1 is always attainable
    CHECK(char_depth(character_of_depth(ext_q2(), 1, 2).unit_part) == 1);
    CHECK(char_depth(character_of_depth(ext_q3(), 2, 3).unit_part) == 2);
    CHECK(char_depth(character_of_depth(ext_q2(), 4, 5).unit_part) == 4);
    CHECK_THROWS_AS(character_of_depth(ext_q2(), 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(character_of_depth(ext_q2(), 3, 3), std::invalid_argument);

    // every enumerated character's depth is reproduced by the picker
    GroupHandle g = unit_group(ext_q3(), 3);
    for (const UnitCharacter& chi : enumerate_characters(g)) {
        int64_t d = char_depth(chi);
        if (d == 0) continue;
        CHECK(char_depth(character_of_depth(ext_q3(), d, 3).unit_part) == d);
    }
}
