#include "gridcomm/compare.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "gridcomm/error.hpp"

namespace gridcomm {

namespace {

template <class Key>
std::set<Key> union_keys(const std::map<Key, double>& a, const std::map<Key, double>& b) {
    std::set<Key> keys;
    for (const auto& [k, v] : a) keys.insert(k);
    for (const auto& [k, v] : b) keys.insert(k);
    return keys;
}

template <class Key>
double value_or_zero(const std::map<Key, double>& m, const Key& key) {
    auto it = m.find(key);
    return it == m.end() ? 0.0 : it->second;
}

ComparisonEntry make_entry(std::string name, std::string metric, double reference, double candidate,
                           double limit) {
    ComparisonEntry e{std::move(name), std::move(metric), reference, candidate, std::abs(reference - candidate),
                      limit, false};
    e.pass = e.delta <= e.limit;
    return e;
}

std::string fixed(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    return buffer;
}

}  // namespace

void ToleranceSpec::validate() const {
    const std::pair<const char*, double> all[] = {
        {"matrix_cell", matrix_cell}, {"ratio", ratio}, {"adl", adl},
        {"skewness", skewness},       {"aebc_relative", aebc_relative},
    };
    for (const auto& [name, value] : all)
        if (!(value >= 0.0)) throw PreconditionError(std::string("tolerance '") + name + "' must be >= 0");
}

ComparisonReport compare_profiles(const StatisticsProfile& reference, const StatisticsProfile& candidate,
                                  const ToleranceSpec& tol) {
    tol.validate();
    ComparisonReport report;
    auto& out = report.entries;

    out.push_back(make_entry("plc_fiber_ratio", "ratio", reference.plc_fiber_ratio, candidate.plc_fiber_ratio,
                             tol.ratio));
    out.push_back(make_entry("psl_skewness", "skewness", reference.psl.skewness, candidate.psl.skewness,
                             tol.skewness));

    std::set<NodeType> rows;
    std::set<EdgeType> cols;
    for (const auto* m : {&reference.degree_types, &candidate.degree_types}) {
        for (const auto& [nt, row] : m->cells) {
            rows.insert(nt);
            for (const auto& [et, v] : row) cols.insert(et);
        }
    }
    for (auto nt : rows) {
        for (auto et : cols) {
            const bool present = (reference.degree_types.cells.contains(nt) &&
                                     reference.degree_types.cells.at(nt).contains(et)) ||
                                 (candidate.degree_types.cells.contains(nt) &&
                                     candidate.degree_types.cells.at(nt).contains(et));
            if (!present) continue;
            out.push_back(make_entry("degree_type_matrix." + std::string(to_string(nt)) + "." +
                                         std::string(to_string(et)),
                                     "matrix_cell", reference.degree_types.at(nt, et),
                                     candidate.degree_types.at(nt, et), tol.matrix_cell));
        }
    }

    for (auto nt : union_keys(reference.adl, candidate.adl))
        out.push_back(make_entry("adl." + std::string(to_string(nt)), "adl", value_or_zero(reference.adl, nt),
                                 value_or_zero(candidate.adl, nt), tol.adl));

    for (auto et : union_keys(reference.aebc, candidate.aebc)) {
        const double ref = value_or_zero(reference.aebc, et);
        out.push_back(make_entry("aebc." + std::string(to_string(et)), "aebc_relative", ref,
                                 value_or_zero(candidate.aebc, et), tol.aebc_relative * std::abs(ref)));
    }

    report.pass = std::all_of(out.begin(), out.end(), [](const auto& e) { return e.pass; });
    return report;
}

nlohmann::json report_to_json(const ComparisonReport& report, const ToleranceSpec& tol) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        entries.push_back({
            {"name", e.name},
            {"metric", e.metric},
            {"reference", e.reference},
            {"candidate", e.candidate},
            {"delta", e.delta},
            {"limit", e.limit},
            {"pass", e.pass},
        });
    }
    return {
        {"entries", std::move(entries)},
        {"pass", report.pass},
        {"tolerances",
         {
             {"matrix_cell", tol.matrix_cell},
             {"ratio", tol.ratio},
             {"adl", tol.adl},
             {"skewness", tol.skewness},
             {"aebc_relative", tol.aebc_relative},
         }},
    };
}

std::string report_to_text(const ComparisonReport& report) {
    const std::vector<std::string> header = {"metric", "reference", "candidate", "delta", "limit", "status"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : report.entries)
        rows.push_back({e.name, fixed(e.reference), fixed(e.candidate), fixed(e.delta), fixed(e.limit),
                        e.pass ? "pass" : "FAIL"});

    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }

    auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::string gap(width[c] - cells[c].size(), ' ');
            // Name column left-aligned, numbers right-aligned.
            if (c == 0 || c + 1 == cells.size())
                text += cells[c] + gap;
            else
                text += gap + cells[c];
            if (c + 1 < cells.size()) text += "  ";
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        return text + "\n";
    };

    std::string out = line(header);
    for (const auto& row : rows) out += line(row);
    const auto failed = std::count_if(report.entries.begin(), report.entries.end(),
                                      [](const auto& e) { return !e.pass; });
    out += "overall: " + std::string(report.pass ? "PASS" : "FAIL") + " (" +
           std::to_string(report.entries.size() - failed) + "/" + std::to_string(report.entries.size()) +
           " within tolerance)\n";
    return out;
}

}  // namespace gridcomm
