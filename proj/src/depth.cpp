#include "ramdepth/depth.hpp"

#include <set>

namespace ramdepth {

namespace {

[[noreturn]] void row_failure(const ExtHandle& ext, int64_t d, const std::string& what) {
    throw std::runtime_error("depth row (p=" + std::to_string(ext->p()) +
                             ", q=" + std::to_string(ext->q()) +
                             ", m=" + std::to_string(ext->m()) +
                             ", d=" + std::to_string(d) + "): " + what);
}

}  // namespace

int64_t character_cap_depth(int64_t q) {
    int64_t d = 0;
    int64_t order = q;  // q^{d+1} at d = 0
    while (order * q <= kEnumerationCap) {
        order *= q;
        ++d;
    }
    return d;
}

Rational parameter_depth(const ExtHandle& ext, int64_t d) {
    PLFunction phi = phi_from_ramification(ramification_breaks(ext));
    return phi.eval(Rational(ext->ram_index() * d));
}

std::vector<DepthReport> verify_theorem(const ExtHandle& ext, int64_t d_max) {
    if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
    int64_t p = ext->p();
    int64_t m = ext->m();
    PLFunction phi = phi_from_ramification(ramification_breaks(ext));
    int64_t cap = character_cap_depth(ext->q());
    std::vector<DepthReport> rows;
    for (int64_t d = 1; d <= d_max; ++d) {
        Rational depth = phi.eval(Rational(p * d));
        bool case1 = p * d > m;
        Rational closed = case1 ? Rational(d) + Rational(m * (p - 1), p)
                                : Rational(p * d);
        if (!(depth == closed))
            row_failure(ext, d, "integral " + depth.to_string() +
                                    " != closed form " + closed.to_string());
        if (!(depth > Rational(d)))
            row_failure(ext, d, "parameter depth " + depth.to_string() +
                                    " not above character depth");
        if (d <= cap) {
            LxCharacter chi = character_of_depth(ext, d, d + 2);
            if (char_depth(chi.unit_part) != d)
                row_failure(ext, d, "certified character has wrong depth");
        }
        DepthReport r;
        r.p = p;
        r.q = ext->q();
        r.m = m;
        r.e = ext->ram_index();
        r.d = d;
        r.parameter_depth = depth;
        r.which_case = case1 ? DepthCase::I : DepthCase::II;
        r.preserved = (depth == Rational(d));
        r.delta = depth - Rational(d);
        rows.push_back(r);
    }
    return rows;
}

std::vector<DepthReport> corollary_family(int64_t count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    FieldSpec f2(2);
    std::vector<DepthReport> rows;
    std::set<int64_t> breaks;
    for (int64_t i = 0; i < count; ++i) {
        int64_t m = 2 * i + 1;
        ExtHandle ext = make_extension(
            LaurentSeries::from_term(FqElem::one(f2), -m));
        RamificationData rd = ramification_breaks(ext);
        int64_t brk = rd.steps.front().upper_end;
        if (!breaks.insert(brk).second)
            throw std::runtime_error("family breaks are not pairwise distinct at m=" +
                                     std::to_string(m));
        std::vector<DepthReport> member = verify_theorem(ext, 3);
        rows.push_back(member.front());  // the d = 1 row
    }
    return rows;
}

std::vector<DepthReport> tame_control(int64_t e, int64_t d_max) {
    if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
    PLFunction phi = phi_from_ramification(RamificationData::tame(e));
    std::vector<DepthReport> rows;
    for (int64_t d = 1; d <= d_max; ++d) {
        Rational depth = phi.eval(Rational(e * d));
        if (!(depth == Rational(d)))
            throw std::runtime_error("tame row (e=" + std::to_string(e) +
                                     ", d=" + std::to_string(d) + "): phi(e*d) = " +
                                     depth.to_string() + " != d");
        DepthReport r;
        r.e = e;
        r.d = d;
        r.parameter_depth = depth;
        r.preserved = true;
        r.delta = Rational(0);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace ramdepth
