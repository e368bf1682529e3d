// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// failure. All checks are exact (finite fields and rationals); the clock is
// used only to report elapsed wall time.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ramdepth/cli.hpp"
#include "ramdepth/depth.hpp"
#include "ramdepth/serialize.hpp"

using namespace ramdepth;

namespace {

struct FamilyMember {
    int64_t p;
    FieldSpec spec;
    int64_t m;
};

std::vector<FamilyMember> family_members() {
    std::vector<FamilyMember> fam;
    struct Base {
        FieldSpec spec;
        std::vector<int64_t> ms;
    };
    std::vector<Base> bases{
        {FieldSpec(2), {1, 3, 5, 7, 9}},
        {FieldSpec(2, 2, {1, 1, 1}), {1, 3, 5, 7, 9}},
        {FieldSpec(3), {1, 2, 4, 5, 7, 8}},
        {FieldSpec(3, 2, {1, 0, 1}), {1, 2, 4, 5, 7, 8}},
        {FieldSpec(5), {1, 2, 3, 4, 6, 7, 8, 9}},
        {FieldSpec(5, 2, {2, 0, 1}), {1, 2, 3, 4, 6, 7, 8, 9}},
    };
    for (const Base& b : bases)
        for (int64_t m : b.ms) fam.push_back({b.spec.p(), b.spec, m});
    return fam;
}

ExtHandle member_ext(const FamilyMember& f) {
    return make_extension(LaurentSeries::t_power(f.spec, -f.m));
}

int64_t now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch())
        .count();
}

LaurentSeries random_series(std::mt19937& rng, const FieldSpec& spec, int64_t vmin,
                            int64_t vmax, int maxlen) {
    std::uniform_int_distribution<int64_t> vdist(vmin, vmax);
    std::uniform_int_distribution<int> ldist(1, maxlen);
    std::uniform_int_distribution<int64_t> cdist(0, spec.q() - 1);
    int64_t v = vdist(rng);
    int len = ldist(rng);
    LaurentSeries s = LaurentSeries::zero(spec);
    for (int i = 0; i < len; ++i)
        s = s + LaurentSeries::from_term(FqElem::from_code(spec, cdist(rng)), v + i);
    return s;
}

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

int g_failures = 0;
int64_t g_total_ms = 0;

void criterion(int number, const std::string& title,
               const std::function<std::string()>& body) {
    int64_t t0 = now_ms();
    try {
        std::string detail = body();
        int64_t ms = now_ms() - t0;
        g_total_ms += ms;
        std::cout << "PASS criterion " << number << ": " << title << " — " << detail
                  << " (" << ms << " ms)\n";
    } catch (const Failure& f) {
        int64_t ms = now_ms() - t0;
        g_total_ms += ms;
        ++g_failures;
        std::cout << "FAIL criterion " << number << ": " << title << " — " << f.what
                  << " (" << ms << " ms)\n";
    } catch (const std::exception& e) {
        int64_t ms = now_ms() - t0;
        g_total_ms += ms;
        ++g_failures;
        std::cout << "FAIL criterion " << number << ": " << title << " — " << e.what()
                  << " (" << ms << " ms)\n";
    }
}

std::string criterion1() {
    int cases = 0;
    int64_t worst = 0;
    for (const FamilyMember& f : family_members()) {
        int64_t t0 = now_ms();
        ExtHandle ext = member_ext(f);
        std::vector<int64_t> disp = galois_displacements(ext);
        expect(static_cast<int64_t>(disp.size()) == f.p - 1,
               "expected p - 1 displacements");
        for (int64_t i : disp)
            expect(i == f.m + 1, "displacement != m + 1 at p=" + std::to_string(f.p) +
                                     " q=" + std::to_string(f.spec.q()) +
                                     " m=" + std::to_string(f.m));
        RamificationData rd = ramification_breaks(ext);
        rd.validate();
        expect(rd.steps == RamificationData::single_break(f.m, f.p).steps,
               "filtration is not the single break at m");
        int64_t ms = now_ms() - t0;
        worst = std::max(worst, ms);
        expect(ms < 1000, "case exceeded 1 s");
        ++cases;
    }
    return std::to_string(cases) + " extensions, single break m with i(sigma_j) = m+1,"
                                   " worst case " +
           std::to_string(worst) + " ms";
}

std::string criterion2() {
    std::mt19937 rng(20260819);
    int64_t t0 = now_ms();
    int checks = 0;
    for (const FieldSpec& spec :
         {FieldSpec(2), FieldSpec(2, 2, {1, 1, 1}), FieldSpec(3),
          FieldSpec(3, 2, {1, 0, 1}), FieldSpec(5), FieldSpec(5, 2, {2, 0, 1})}) {
        int64_t p = spec.p();
        std::uniform_int_distribution<int64_t> mdist(1, 9);
        for (int i = 0; i < 50; ++i) {
            int64_t M = mdist(rng);
            while (M % p == 0) M = mdist(rng);
            LaurentSeries base = LaurentSeries::t_power(spec, -M) +
                                 random_series(rng, spec, -M + 1, 2, 4);
            LaurentSeries r = random_series(rng, spec, -3, 2, 4);
            LaurentSeries a = base + wp(r);
            AsReduceResult red = as_reduce(a);
            expect(a - red.a_red == wp(red.witness), "a - a_red != wp(witness)");
            expect(red.m == M, "break exponent changed under a + wp(r)");
            expect(red.a_red.valuation() == -M, "v(a_red) != -m");
            ++checks;
        }
    }
    expect(now_ms() - t0 < 5000, "exceeded 5 s");
    return std::to_string(checks) + " randomized reductions, exact witness identity";
}

std::string criterion3() {
    int points = 0;
    for (const FamilyMember& f : family_members()) {
        ExtHandle ext = member_ext(f);
        PLFunction phi = phi_from_ramification(ramification_breaks(ext));
        PLFunction psi = phi.inverse();
        for (int64_t j = 0; j <= 50; ++j) {
            Rational u(3 * f.m * j, 50);
            Rational closed = u <= Rational(f.m)
                                  ? u
                                  : Rational(f.m) + (u - Rational(f.m)) / Rational(f.p);
            expect(phi.eval(u) == closed, "phi(u) != closed form");
            expect(psi.eval(phi.eval(u)) == u, "psi(phi(u)) != u");
            expect(phi.eval(psi.eval(u)) == u, "phi(psi(u)) != u");
            ++points;
        }
    }
    return std::to_string(points) + " grid points, slope 1 then 1/p, exact inverse";
}

std::string criterion4() {
    int rows = 0;
    int certs = 0;
    for (const FamilyMember& f : family_members()) {
        ExtHandle ext = member_ext(f);
        int64_t cap = character_cap_depth(ext->q());
        // verify_theorem throws on any closed-form, strictness, or
        // certificate violation
        std::vector<DepthReport> out = verify_theorem(ext, 10);
        expect(static_cast<int64_t>(out.size()) == 10, "missing depth rows");
        for (const DepthReport& row : out) {
            expect(row.delta > Rational(0), "depth preserved at d=" +
                                                std::to_string(row.d));
            expect(!row.preserved, "preserved flag set");
            ++rows;
            if (row.d <= cap) ++certs;
        }
    }
    return std::to_string(rows) + " depth rows across the family, " +
           std::to_string(certs) + " brute-force character certificates";
}

std::string criterion5() {
    int64_t t0 = now_ms();
    int groups = 0;
    for (int64_t q : {2, 3}) {
        ExtHandle ext = q == 2 ? make_extension(LaurentSeries::t_power(FieldSpec(2), -3))
                               : make_extension(LaurentSeries::t_power(FieldSpec(3), -2));
        for (int64_t N = 2; N <= 5; ++N) {
            GroupHandle g = unit_group(ext, N);
            int64_t expect_order = 1;
            for (int64_t i = 1; i < N; ++i) expect_order *= q;
            expect(g->order() == expect_order, "|U^1/U^N| != q^{N-1}");
            std::vector<int64_t> census(static_cast<size_t>(N), 0);
            for (const UnitCharacter& chi : enumerate_characters(g))
                ++census[static_cast<size_t>(char_depth(chi))];
            expect(census[0] == 1, "depth-0 count != 1");
            int64_t qd = 1;
            for (int64_t d = 1; d < N; ++d) {
                expect(census[static_cast<size_t>(d)] == qd * (q - 1),
                       "depth-d count != q^d - q^{d-1}");
                qd *= q;
            }
            ++groups;
        }
    }
    expect(now_ms() - t0 < 10000, "exceeded 10 s");
    return std::to_string(groups) + " exhaustive censuses (q = 2, 3; N <= 5)";
}

std::string criterion6() {
    std::ostringstream out;
    std::ostringstream err;
    int code = run({"corollary", "--count", "5", "--format", "csv"}, out, err);
    expect(code == 0, "corollary exited " + std::to_string(code));
    expect(out.str() ==
               "p,q,m,e,d,parameter_depth,case,preserved,delta\n"
               "2,2,1,2,1,3/2,I,false,1/2\n"
               "2,2,3,2,1,2,II,false,1\n"
               "2,2,5,2,1,2,II,false,1\n"
               "2,2,7,2,1,2,II,false,1\n"
               "2,2,9,2,1,2,II,false,1\n",
           "unexpected corollary table");
    // distinct breaks are asserted inside corollary_family; double-check here
    std::vector<DepthReport> rows = corollary_family(5);
    for (size_t i = 0; i < rows.size(); ++i) {
        expect(rows[i].m == 2 * static_cast<int64_t>(i) + 1, "m != 1,3,5,7,9");
        expect(!rows[i].preserved, "depth preserved in the quadratic family");
        for (size_t j = 0; j < i; ++j)
            expect(rows[i].m != rows[j].m, "breaks not pairwise distinct");
    }
    return "m = 1,3,5,7,9 with distinct breaks, no row preserves depth";
}

std::string criterion7() {
    int rows = 0;
    for (int64_t e : {1, 2, 3, 4, 6}) {
        std::vector<DepthReport> out = tame_control(e, 10);
        for (const DepthReport& row : out) {
            expect(row.parameter_depth == Rational(row.d), "tame depth moved");
            expect(row.preserved, "tame row not marked preserved");
            ++rows;
        }
    }
    return std::to_string(rows) + " tame rows, depth preserved exactly";
}

std::string criterion8() {
    expect(g_total_ms < 60000, "criteria 1-7 took " + std::to_string(g_total_ms) +
                                   " ms, over the 60 s budget");
    return "criteria 1-7 ran in " + std::to_string(g_total_ms) +
           " ms; every comparison above used exact field/rational arithmetic";
}

}  // namespace

int main() {
    criterion(1, "break certification", criterion1);
    criterion(2, "reduction soundness", criterion2);
    criterion(3, "Herbrand exactness", criterion3);
    criterion(4, "depth never preserved, with character certificates", criterion4);
    criterion(5, "character census", criterion5);
    criterion(6, "quadratic family", criterion6);
    criterion(7, "tame control", criterion7);
    criterion(8, "wall-clock and exactness budget", criterion8);
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 8 criteria passed\n";
    return 0;
}
