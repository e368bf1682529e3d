#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ramdepth/depth.hpp"
#include "ramdepth/herbrand.hpp"
#include "ramdepth/unit_characters.hpp"

namespace ramdepth {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const PLFunction& f);
nlohmann::json to_json(const RamificationData& rd);
nlohmann::json to_json(const UnitCharacter& chi);
nlohmann::json to_json(const DepthReport& row);

/// "I" / "II".
std::string case_name(DepthCase c);

/// CSV with header p,q,m,e,d,parameter_depth,case,preserved,delta.
std::string depth_reports_csv(const std::vector<DepthReport>& rows);

/// Fixed-width text table of depth rows (rationals shown with a 3-decimal
/// approximation).
std::string depth_reports_table(const std::vector<DepthReport>& rows);

/// Rational for human tables: "a/b (~x.xxx)", integers plain.
std::string pretty_rational(const Rational& r);

/// Generic fixed-width table: first row is the header.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace ramdepth
