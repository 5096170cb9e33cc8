#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gridcomm/metrics.hpp"

namespace gridcomm {

/// Allowed deviation per metric family. All but `aebc_relative` are
/// absolute; `aebc_relative` is a fraction of the reference value.
struct ToleranceSpec {
    double matrix_cell = 0.02;
    double ratio = 0.02;
    double adl = 0.25;
    double skewness = 0.10;
    double aebc_relative = 0.25;

    /// Throws PreconditionError if any tolerance is negative or NaN.
    void validate() const;
};

struct ComparisonEntry {
    std::string name;    // e.g. "adl.transmission"
    std::string metric;  // tolerance family: matrix_cell, ratio, adl, skewness, aebc_relative
    double reference = 0.0;
    double candidate = 0.0;
    double delta = 0.0;  // |reference - candidate|
    double limit = 0.0;  // largest delta that still passes
    bool pass = false;
};

struct ComparisonReport {
    std::vector<ComparisonEntry> entries;
    bool pass = true;
};

/// One entry per scalar metric and per matrix / map cell present in either
/// profile; a missing counterpart compares as 0. AEBC entries pass when
/// delta <= aebc_relative * |reference|.
ComparisonReport compare_profiles(const StatisticsProfile& reference, const StatisticsProfile& candidate,
                                  const ToleranceSpec& tolerances);

nlohmann::json report_to_json(const ComparisonReport& report, const ToleranceSpec& tolerances);

/// Aligned plain-text table, one row per entry plus an overall line.
std::string report_to_text(const ComparisonReport& report);

}  // namespace gridcomm
