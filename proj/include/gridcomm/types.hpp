#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace gridcomm {

enum class NodeType {
    microwave,
    transmission,
    generating,
    office,
    control_center,
    repeater,
    connector,
    other,
};

enum class EdgeType {
    microwave,
    plc,
    fiber,
    leased,
    radio,
    untyped,
};

inline constexpr std::size_t kNodeTypeCount = 8;
inline constexpr std::size_t kEdgeTypeCount = 6;

inline constexpr std::array<NodeType, kNodeTypeCount> kAllNodeTypes = {
    NodeType::microwave, NodeType::transmission, NodeType::generating, NodeType::office,
    NodeType::control_center, NodeType::repeater, NodeType::connector, NodeType::other,
};

inline constexpr std::array<EdgeType, kEdgeTypeCount> kAllEdgeTypes = {
    EdgeType::microwave, EdgeType::plc, EdgeType::fiber,
    EdgeType::leased, EdgeType::radio, EdgeType::untyped,
};

constexpr std::size_t index_of(NodeType t) { return static_cast<std::size_t>(t); }
constexpr std::size_t index_of(EdgeType t) { return static_cast<std::size_t>(t); }

std::string_view to_string(NodeType t);
std::string_view to_string(EdgeType t);

// Exact, case-sensitive token match; nullopt for anything outside the set.
std::optional<NodeType> parse_node_type(std::string_view token);
std::optional<EdgeType> parse_edge_type(std::string_view token);

/// True when `id` is non-empty and matches [A-Za-z0-9_.-]+.
bool is_valid_id(std::string_view id);

}  // namespace gridcomm
