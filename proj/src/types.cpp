#include "gridcomm/types.hpp"

#include <algorithm>

namespace gridcomm {

namespace {

constexpr std::array<std::string_view, kNodeTypeCount> kNodeTypeNames = {
    "microwave", "transmission", "generating", "office",
    "control_center", "repeater", "connector", "other",
};

constexpr std::array<std::string_view, kEdgeTypeCount> kEdgeTypeNames = {
    "microwave", "plc", "fiber", "leased", "radio", "untyped",
};

}  // namespace

std::string_view to_string(NodeType t) { return kNodeTypeNames[index_of(t)]; }
std::string_view to_string(EdgeType t) { return kEdgeTypeNames[index_of(t)]; }

std::optional<NodeType> parse_node_type(std::string_view token) {
    for (std::size_t i = 0; i < kNodeTypeCount; ++i)
        if (kNodeTypeNames[i] == token) return kAllNodeTypes[i];
    return std::nullopt;
}

std::optional<EdgeType> parse_edge_type(std::string_view token) {
    for (std::size_t i = 0; i < kEdgeTypeCount; ++i)
        if (kEdgeTypeNames[i] == token) return kAllEdgeTypes[i];
    return std::nullopt;
}

bool is_valid_id(std::string_view id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '.' || c == '-';
    });
}

}  // namespace gridcomm
