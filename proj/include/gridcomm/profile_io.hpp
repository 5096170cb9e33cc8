#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gridcomm/metrics.hpp"

namespace gridcomm {

inline constexpr std::string_view kProfileSchema = "gridcomm.profile.v1";

/// Stable JSON text: keys sorted, two-space indent, every real printed with
/// six decimals, trailing newline.
std::string dump_stable(const nlohmann::json& value);

nlohmann::json profile_to_json(const StatisticsProfile& profile);
std::string profile_to_string(const StatisticsProfile& profile);

/// Throws ParseError("profile", ...) on malformed JSON or schema violations.
StatisticsProfile profile_from_json(const nlohmann::json& value);
StatisticsProfile parse_profile(std::string_view text);

/// `length,count` rows for the primary shortest pathlength histogram.
std::string histogram_csv(const PathLengthHistogram& histogram);

}  // namespace gridcomm
