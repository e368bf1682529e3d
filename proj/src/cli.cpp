#include "ramdepth/cli.hpp"

#include <CLI11.hpp>

#include "ramdepth/depth.hpp"
#include "ramdepth/serialize.hpp"

namespace ramdepth {

namespace {

// Parameter problems detected after CLI11 parsing but before any
// computation; reported as usage errors (exit 2).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FieldOpts {
    int64_t p = 0;
    int64_t k = 1;
    std::string modulus;

    void attach(CLI::App* cmd) {
        cmd->add_option("--p", p, "Residue characteristic (prime)")->required();
        cmd->add_option("--k", k, "Residue degree over F_p (q = p^k)")->capture_default_str();
        cmd->add_option("--modulus", modulus,
                        "Monic degree-k irreducible polynomial in x over F_p "
                        "(required when k > 1)");
    }

    FieldSpec make() const {
        try {
            if (k == 1 && modulus.empty()) return FieldSpec(p);
            if (k > 1 && modulus.empty())
                throw std::invalid_argument("--modulus is required when k > 1");
            return FieldSpec(p, static_cast<int>(k), parse_poly_in_x(modulus, p));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

struct ElementOpts {
    std::string a;
    int64_t m = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--a", a, "Laurent series over F_q, e.g. \"t^-4 + t^-3\"");
        cmd->add_option("--m", m,
                        "Shortcut: use a = t^-m (the canonical family member)");
    }

    LaurentSeries make(const FieldSpec& spec) const {
        if (a.empty() == (m == 0))
            throw UsageError("exactly one of --a and --m is required");
        try {
            if (!a.empty()) return LaurentSeries::parse(a, spec);
            if (m < 1) throw std::invalid_argument("--m must be >= 1");
            return LaurentSeries::from_term(FqElem::one(spec), -m);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

enum class Format { kTable, kJson, kCsv };

struct FormatOpt {
    std::string name = "table";

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", name, "Output format: table, json or csv")->capture_default_str()
            ->check(CLI::IsMember({"table", "json", "csv"}));
    }

    Format value() const {
        if (name == "json") return Format::kJson;
        if (name == "csv") return Format::kCsv;
        return Format::kTable;
    }
};

std::string json_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void print_depth_rows(const std::vector<DepthReport>& rows, Format fmt,
                      std::ostream& out) {
    switch (fmt) {
        case Format::kTable:
            out << depth_reports_table(rows);
            break;
        case Format::kJson: {
            nlohmann::json arr = nlohmann::json::array();
            for (const DepthReport& r : rows) arr.push_back(to_json(r));
            out << json_dump(arr);
            break;
        }
        case Format::kCsv:
            out << depth_reports_csv(rows);
            break;
    }
}

int cmd_reduce(const FieldSpec& spec, const LaurentSeries& a, Format fmt,
               std::ostream& out) {
    AsReduceResult red = as_reduce(a);
    switch (fmt) {
        case Format::kTable:
            out << format_table({{"field", spec.to_string()},
                                 {"a", a.to_string()},
                                 {"a_red", red.a_red.to_string()},
                                 {"m", std::to_string(red.m)},
                                 {"witness", red.witness.to_string()}});
            break;
        case Format::kJson:
            out << json_dump({{"field", spec.to_string()},
                              {"p", spec.p()},
                              {"q", spec.q()},
                              {"a", a.to_string()},
                              {"a_red", red.a_red.to_string()},
                              {"m", red.m},
                              {"witness", red.witness.to_string()}});
            break;
        case Format::kCsv:
            out << "a_red,m,witness\n"
                << red.a_red.to_string() << "," << red.m << ","
                << red.witness.to_string() << "\n";
            break;
    }
    return 0;
}

int cmd_breaks(const FieldSpec& spec, const LaurentSeries& a, Format fmt,
               std::ostream& out) {
    ExtHandle ext = make_extension(a);
    std::vector<int64_t> disp = galois_displacements(ext);
    RamificationData rd = ramification_breaks(ext);
    switch (fmt) {
        case Format::kTable: {
            out << format_table({{"field", spec.to_string()},
                                 {"a_red", ext->a().to_string()},
                                 {"m", std::to_string(ext->m())},
                                 {"break", std::to_string(rd.steps.front().upper_end)}});
            std::vector<std::vector<std::string>> cells{{"j", "i(sigma_j)"}};
            for (size_t j = 0; j < disp.size(); ++j)
                cells.push_back({std::to_string(j + 1), std::to_string(disp[j])});
            out << format_table(cells);
            out << "filtration: |G_u| = " << rd.steps.front().order
                << " for u <= " << rd.steps.front().upper_end << ", 1 after\n";
            break;
        }
        case Format::kJson: {
            nlohmann::json j{{"field", spec.to_string()},
                             {"p", spec.p()},
                             {"q", spec.q()},
                             {"a_red", ext->a().to_string()},
                             {"m", ext->m()}};
            nlohmann::json ds = nlohmann::json::array();
            for (size_t i = 0; i < disp.size(); ++i)
                ds.push_back({{"j", i + 1}, {"i", disp[i]}});
            j["displacements"] = ds;
            j["steps"] = to_json(rd)["steps"];
            out << json_dump(j);
            break;
        }
        case Format::kCsv:
            out << "j,i_sigma_j\n";
            for (size_t j = 0; j < disp.size(); ++j)
                out << (j + 1) << "," << disp[j] << "\n";
            break;
    }
    return 0;
}

int cmd_phi(const FieldSpec& spec, const LaurentSeries& a,
            const std::string& u_str, Format fmt, std::ostream& out) {
    (void)spec;
    ExtHandle ext = make_extension(a);
    PLFunction phi = phi_from_ramification(ramification_breaks(ext));
    bool have_u = !u_str.empty();
    Rational u(0), value(0);
    if (have_u) {
        try {
            u = Rational::parse(u_str);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        value = phi.eval(u);
    }
    switch (fmt) {
        case Format::kTable: {
            auto join = [](const std::vector<Rational>& v) {
                std::string s;
                for (size_t i = 0; i < v.size(); ++i)
                    s += (i ? ", " : "") + v[i].to_string();
                return s;
            };
            out << format_table({{"breakpoints", join(phi.breakpoints())},
                                 {"slopes", join(phi.slopes())}});
            if (have_u)
                out << "phi(" << u.to_string() << ") = " << value.to_string() << "\n";
            break;
        }
        case Format::kJson: {
            nlohmann::json j = to_json(phi);
            if (have_u) {
                j["u"] = u.to_string();
                j["value"] = value.to_string();
            }
            out << json_dump(j);
            break;
        }
        case Format::kCsv:
            if (have_u) {
                out << "u,value\n" << u.to_string() << "," << value.to_string() << "\n";
            } else {
                out << "breakpoint,slope\n";
                for (size_t i = 0; i < phi.breakpoints().size(); ++i)
                    out << phi.breakpoints()[i].to_string() << ","
                        << phi.slopes()[i].to_string() << "\n";
            }
            break;
    }
    return 0;
}

int cmd_verify(const LaurentSeries& a, int64_t d_max, Format fmt,
               std::ostream& out) {
    ExtHandle ext = make_extension(a);
    std::vector<DepthReport> rows = verify_theorem(ext, d_max);
    print_depth_rows(rows, fmt, out);
    if (fmt == Format::kTable) {
        out << "note: d = 0 sits outside the theorem: phi(0) = 0 preserves "
               "depth trivially\n";
        out << "PASS (" << rows.size() << " rows verified)\n";
    }
    return 0;
}

int cmd_chars(const FieldSpec& spec, const LaurentSeries& a, int64_t level,
              Format fmt, std::ostream& out) {
    ExtHandle ext = make_extension(a);
    GroupHandle g = unit_group(ext, level);
    std::vector<int64_t> census(static_cast<size_t>(level), 0);
    for (const UnitCharacter& chi : enumerate_characters(g))
        ++census[static_cast<size_t>(char_depth(chi))];
    switch (fmt) {
        case Format::kTable: {
            std::string factors;
            for (size_t i = 0; i < g->invariant_factors().size(); ++i)
                factors += (i ? ", " : "") + std::to_string(g->invariant_factors()[i]);
            out << format_table({{"field", spec.to_string()},
                                 {"m", std::to_string(ext->m())},
                                 {"N", std::to_string(level)},
                                 {"|U^1/U^N|", std::to_string(g->order())},
                                 {"invariant_factors", factors}});
            std::vector<std::vector<std::string>> cells{{"depth", "count"}};
            for (size_t d = 0; d < census.size(); ++d)
                cells.push_back({std::to_string(d), std::to_string(census[d])});
            out << format_table(cells);
            break;
        }
        case Format::kJson: {
            nlohmann::json j{{"field", spec.to_string()},
                             {"q", spec.q()},
                             {"m", ext->m()},
                             {"N", level},
                             {"order", g->order()},
                             {"invariant_factors", g->invariant_factors()}};
            nlohmann::json c = nlohmann::json::array();
            for (size_t d = 0; d < census.size(); ++d)
                c.push_back({{"depth", d}, {"count", census[d]}});
            j["census"] = c;
            out << json_dump(j);
            break;
        }
        case Format::kCsv:
            out << "depth,count\n";
            for (size_t d = 0; d < census.size(); ++d)
                out << d << "," << census[d] << "\n";
            break;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Depth change along the local Langlands correspondence for "
                 "wildly ramified Artin-Schreier tori"};
    app.require_subcommand(1);

    FieldOpts field_reduce, field_breaks, field_phi, field_depthmap,
        field_verify, field_chars;
    ElementOpts elem_reduce, elem_breaks, elem_phi, elem_depthmap, elem_verify,
        elem_chars;
    FormatOpt fmt_reduce, fmt_breaks, fmt_phi, fmt_depthmap, fmt_verify,
        fmt_corollary, fmt_tame, fmt_chars;
    std::string u_str;
    int64_t d = 0;
    int64_t d_max = 4;
    int64_t count = 0;
    int64_t e_tame = 0;
    int64_t level = 0;

    CLI::App* c_reduce =
        app.add_subcommand("reduce", "Reduce a modulo the Artin-Schreier image");
    field_reduce.attach(c_reduce);
    elem_reduce.attach(c_reduce);
    fmt_reduce.attach(c_reduce);

    CLI::App* c_breaks = app.add_subcommand(
        "breaks", "Ramification break via the Galois action on a uniformizer");
    field_breaks.attach(c_breaks);
    elem_breaks.attach(c_breaks);
    fmt_breaks.attach(c_breaks);

    CLI::App* c_phi =
        app.add_subcommand("phi", "Herbrand transition function of L/K");
    field_phi.attach(c_phi);
    elem_phi.attach(c_phi);
    fmt_phi.attach(c_phi);
    c_phi->add_option("--u", u_str, "Evaluate phi at this rational, e.g. 5 or 7/2");

    CLI::App* c_depthmap = app.add_subcommand(
        "depth-map", "Depth of the parameter attached to a depth-d character");
    field_depthmap.attach(c_depthmap);
    elem_depthmap.attach(c_depthmap);
    fmt_depthmap.attach(c_depthmap);
    c_depthmap->add_option("--d", d, "Character depth (>= 1)")->required();

    CLI::App* c_verify = app.add_subcommand(
        "verify", "Verify non-preservation for d = 1..d_max (integral vs "
                  "closed form, plus character certificates)");
    field_verify.attach(c_verify);
    elem_verify.attach(c_verify);
    fmt_verify.attach(c_verify);
    c_verify->add_option("--dmax", d_max, "Largest depth to verify")->capture_default_str();

    CLI::App* c_corollary = app.add_subcommand(
        "corollary", "The quadratic family over F_2: m = 1, 3, 5, ...");
    fmt_corollary.attach(c_corollary);
    c_corollary->add_option("--count", count, "Number of family members")
        ->required();

    CLI::App* c_tame = app.add_subcommand(
        "tame", "Tame control: depth is preserved when e is prime to p");
    fmt_tame.attach(c_tame);
    c_tame->add_option("--e", e_tame, "Tame ramification index (>= 1)")->required();
    c_tame->add_option("--dmax", d_max, "Largest depth to check")->capture_default_str();

    CLI::App* c_chars = app.add_subcommand(
        "chars", "Census of characters of U^1/U^N by depth");
    field_chars.attach(c_chars);
    elem_chars.attach(c_chars);
    fmt_chars.attach(c_chars);
    c_chars->add_option("--N", level, "Truncation level N (>= 2)")->required();

    std::vector<const char*> argv;
    argv.push_back("ramdepth");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_reduce))
            return cmd_reduce(field_reduce.make(),
                              elem_reduce.make(field_reduce.make()),
                              fmt_reduce.value(), out);
        if (app.got_subcommand(c_breaks))
            return cmd_breaks(field_breaks.make(),
                              elem_breaks.make(field_breaks.make()),
                              fmt_breaks.value(), out);
        if (app.got_subcommand(c_phi))
            return cmd_phi(field_phi.make(), elem_phi.make(field_phi.make()),
                           u_str, fmt_phi.value(), out);
        if (app.got_subcommand(c_depthmap)) {
            if (d < 1) throw UsageError("--d must be >= 1");
            ExtHandle ext =
                make_extension(elem_depthmap.make(field_depthmap.make()));
            std::vector<DepthReport> rows = verify_theorem(ext, d);
            if (fmt_depthmap.value() == Format::kJson)
                out << json_dump(to_json(rows.back()));  // a single report
            else
                print_depth_rows({rows.back()}, fmt_depthmap.value(), out);
            return 0;
        }
        if (app.got_subcommand(c_verify)) {
            if (d_max < 1) throw UsageError("--dmax must be >= 1");
            return cmd_verify(elem_verify.make(field_verify.make()), d_max,
                              fmt_verify.value(), out);
        }
        if (app.got_subcommand(c_corollary)) {
            if (count < 1) throw UsageError("--count must be >= 1");
            print_depth_rows(corollary_family(count), fmt_corollary.value(), out);
            return 0;
        }
        if (app.got_subcommand(c_tame)) {
            if (e_tame < 1) throw UsageError("--e must be >= 1");
            if (d_max < 1) throw UsageError("--dmax must be >= 1");
            print_depth_rows(tame_control(e_tame, d_max), fmt_tame.value(), out);
            return 0;
        }
        if (app.got_subcommand(c_chars)) {
            if (level < 2) throw UsageError("--N must be >= 2");
            return cmd_chars(field_chars.make(),
                             elem_chars.make(field_chars.make()), level,
                             fmt_chars.value(), out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace ramdepth
