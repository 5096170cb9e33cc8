#include "gridcomm/profile_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gridcomm/error.hpp"

namespace gridcomm {

using nlohmann::json;

namespace {

std::string format_real(double value) {
    if (!std::isfinite(value)) return "null";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    std::string text = buffer;
    if (text == "-0.000000") text = "0.000000";
    return text;
}

void emit(const json& value, int depth, std::string& out) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close_pad(2 * depth, ' ');
    switch (value.type()) {
        case json::value_t::object: {
            if (value.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, item] : value.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad + json(key).dump() + ": ";
                emit(item, depth + 1, out);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case json::value_t::array: {
            if (value.empty()) {
                out += "[]";
                return;
            }
            // Short arrays of scalars stay on one line (histogram bins).
            const bool flat = std::all_of(value.begin(), value.end(),
                                          [](const json& v) { return v.is_primitive(); });
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < value.size(); ++i) {
                    if (i) out += ", ";
                    emit(value[i], depth + 1, out);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                emit(value[i], depth + 1, out);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case json::value_t::number_float:
            out += format_real(value.get<double>());
            return;
        default:
            out += value.dump();
            return;
    }
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError("profile", 0, what); }

const json& member(const json& object, const char* key) {
    if (!object.is_object()) schema_error(std::string("expected an object around '") + key + "'");
    auto it = object.find(key);
    if (it == object.end()) schema_error(std::string("missing field '") + key + "'");
    return *it;
}

double real_member(const json& object, const char* key) {
    const auto& v = member(object, key);
    if (!v.is_number()) schema_error(std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

std::size_t count_member(const json& object, const char* key) {
    const auto& v = member(object, key);
    if (!v.is_number_unsigned()) schema_error(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

NodeType node_type_key(const std::string& key) {
    auto t = parse_node_type(key);
    if (!t) schema_error("unknown node type '" + key + "'");
    return *t;
}

EdgeType edge_type_key(const std::string& key) {
    auto t = parse_edge_type(key);
    if (!t) schema_error("unknown edge type '" + key + "'");
    return *t;
}

double real_value(const json& v, const std::string& where) {
    if (!v.is_number()) schema_error("'" + where + "' must be a number");
    return v.get<double>();
}

}  // namespace

std::string dump_stable(const json& value) {
    std::string out;
    emit(value, 0, out);
    out += "\n";
    return out;
}

json profile_to_json(const StatisticsProfile& profile) {
    json doc = json::object();
    doc["schema"] = kProfileSchema;
    doc["node_count"] = profile.node_count;
    doc["edge_count"] = profile.edge_count;
    doc["plc_fiber_ratio"] = profile.plc_fiber_ratio;

    json matrix = json::object();
    for (const auto& [node_type, row] : profile.degree_types.cells) {
        json cells = json::object();
        for (const auto& [edge_type, value] : row) cells[std::string(to_string(edge_type))] = value;
        matrix[std::string(to_string(node_type))] = std::move(cells);
    }
    doc["degree_type_matrix"] = std::move(matrix);

    json adl = json::object();
    for (const auto& [type, value] : profile.adl) adl[std::string(to_string(type))] = value;
    doc["adl"] = std::move(adl);

    json aebc = json::object();
    for (const auto& [type, value] : profile.aebc) aebc[std::string(to_string(type))] = value;
    doc["aebc"] = std::move(aebc);

    json counts = json::array();
    for (const auto& [length, count] : profile.psl.counts) counts.push_back({length, count});
    doc["psl_histogram"] = {
        {"counts", std::move(counts)},
        {"mean", profile.psl.mean},
        {"mode", profile.psl.mode},
        {"std", profile.psl.std_dev},
        {"skewness", profile.psl.skewness},
    };
    return doc;
}

std::string profile_to_string(const StatisticsProfile& profile) { return dump_stable(profile_to_json(profile)); }

StatisticsProfile profile_from_json(const json& doc) {
    if (!doc.is_object()) schema_error("document must be a JSON object");
    const auto& schema = member(doc, "schema");
    if (!schema.is_string() || schema.get<std::string>() != kProfileSchema)
        schema_error("unsupported schema, expected '" + std::string(kProfileSchema) + "'");

    StatisticsProfile p;
    p.node_count = count_member(doc, "node_count");
    p.edge_count = count_member(doc, "edge_count");
    p.plc_fiber_ratio = real_member(doc, "plc_fiber_ratio");

    const auto& matrix = member(doc, "degree_type_matrix");
    if (!matrix.is_object()) schema_error("'degree_type_matrix' must be an object");
    for (const auto& [row_key, row] : matrix.items()) {
        if (!row.is_object()) schema_error("degree_type_matrix row '" + row_key + "' must be an object");
        auto& cells = p.degree_types.cells[node_type_key(row_key)];
        for (const auto& [col_key, value] : row.items())
            cells[edge_type_key(col_key)] = real_value(value, "degree_type_matrix." + row_key + "." + col_key);
    }

    const auto& adl = member(doc, "adl");
    if (!adl.is_object()) schema_error("'adl' must be an object");
    for (const auto& [key, value] : adl.items()) p.adl[node_type_key(key)] = real_value(value, "adl." + key);

    const auto& aebc = member(doc, "aebc");
    if (!aebc.is_object()) schema_error("'aebc' must be an object");
    for (const auto& [key, value] : aebc.items()) p.aebc[edge_type_key(key)] = real_value(value, "aebc." + key);

    const auto& psl = member(doc, "psl_histogram");
    const auto& counts = member(psl, "counts");
    if (!counts.is_array()) schema_error("'psl_histogram.counts' must be an array");
    for (const auto& bin : counts) {
        if (!bin.is_array() || bin.size() != 2 || !bin[0].is_number_unsigned() || !bin[1].is_number_unsigned())
            schema_error("histogram bins must be [length, count] pairs of non-negative integers");
        p.psl.counts[bin[0].get<int>()] = bin[1].get<std::size_t>();
    }
    p.psl.mean = real_member(psl, "mean");
    const auto& mode = member(psl, "mode");
    if (!mode.is_number_integer()) schema_error("'psl_histogram.mode' must be an integer");
    p.psl.mode = mode.get<int>();
    p.psl.std_dev = real_member(psl, "std");
    p.psl.skewness = real_member(psl, "skewness");
    return p;
}

StatisticsProfile parse_profile(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("profile", 0, std::string("invalid JSON: ") + e.what());
    }
    return profile_from_json(doc);
}

std::string histogram_csv(const PathLengthHistogram& histogram) {
    std::string out = "length,count\n";
    for (const auto& [length, count] : histogram.counts)
        out += std::to_string(length) + "," + std::to_string(count) + "\n";
    return out;
}

}  // namespace gridcomm
