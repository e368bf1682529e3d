#include "ramdepth/serialize.hpp"

#include <sstream>

namespace ramdepth {

nlohmann::json to_json(const Rational& r) { return r.to_string(); }

nlohmann::json to_json(const PLFunction& f) {
    nlohmann::json j;
    j["breakpoints"] = nlohmann::json::array();
    j["slopes"] = nlohmann::json::array();
    for (const Rational& b : f.breakpoints()) j["breakpoints"].push_back(to_json(b));
    for (const Rational& s : f.slopes()) j["slopes"].push_back(to_json(s));
    return j;
}

nlohmann::json to_json(const RamificationData& rd) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : rd.steps) {
        nlohmann::json step;
        step["upper_end"] = (s.upper_end == kInf) ? nlohmann::json(nullptr)
                                                  : nlohmann::json(s.upper_end);
        step["order"] = s.order;
        steps.push_back(step);
    }
    return nlohmann::json{{"steps", steps}};
}

nlohmann::json to_json(const UnitCharacter& chi) {
    nlohmann::json j;
    j["invariant_factors"] = chi.group->invariant_factors();
    j["phases"] = nlohmann::json::array();
    for (const Rational& r : chi.phases) j["phases"].push_back(to_json(r));
    j["depth"] = char_depth(chi);
    return j;
}

std::string case_name(DepthCase c) { return c == DepthCase::I ? "I" : "II"; }

nlohmann::json to_json(const DepthReport& row) {
    nlohmann::json j;
    j["p"] = row.p;
    j["q"] = row.q;
    j["m"] = row.m;
    j["e"] = row.e;
    j["d"] = row.d;
    j["parameter_depth"] = to_json(row.parameter_depth);
    j["case"] = row.which_case ? nlohmann::json(case_name(*row.which_case))
                               : nlohmann::json(nullptr);
    j["preserved"] = row.preserved;
    j["delta"] = to_json(row.delta);
    return j;
}

std::string depth_reports_csv(const std::vector<DepthReport>& rows) {
    std::ostringstream out;
    out << "p,q,m,e,d,parameter_depth,case,preserved,delta\n";
    for (const DepthReport& r : rows) {
        out << r.p << "," << r.q << "," << r.m << "," << r.e << "," << r.d << ","
            << r.parameter_depth.to_string() << ","
            << (r.which_case ? case_name(*r.which_case) : "") << ","
            << (r.preserved ? "true" : "false") << "," << r.delta.to_string()
            << "\n";
    }
    return out.str();
}

std::string pretty_rational(const Rational& r) {
    if (r.is_integer()) return r.to_string();
    return r.to_string() + " (≈" + approx3(r) + ")";
}

namespace {

// column width in code points, not bytes (tables may carry "≈")
size_t display_width(const std::string& s) {
    size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

}  // namespace

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], display_width(row[i]));
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << "  ";
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(width[i] - display_width(row[i]), ' ');
        }
        out << "\n";
    }
    return out.str();
}

std::string depth_reports_table(const std::vector<DepthReport>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"p", "q", "m", "e", "d", "parameter_depth", "case",
                     "preserved", "delta"});
    for (const DepthReport& r : rows) {
        bool tame = r.p == 0;  // control rows carry no wild data
        cells.push_back({tame ? "-" : std::to_string(r.p),
                         tame ? "-" : std::to_string(r.q),
                         tame ? "-" : std::to_string(r.m), std::to_string(r.e),
                         std::to_string(r.d), pretty_rational(r.parameter_depth),
                         r.which_case ? case_name(*r.which_case) : "-",
                         r.preserved ? "yes" : "no", pretty_rational(r.delta)});
    }
    return format_table(cells);
}

}  // namespace ramdepth
