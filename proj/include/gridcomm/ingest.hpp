#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridcomm/network.hpp"

namespace gridcomm {

inline constexpr std::string_view kNodesHeader = "node_id,label,node_type";
inline constexpr std::string_view kEdgesHeader = "edge_id,source_id,target_id,edge_type";

struct NetworkText {
    std::string nodes;
    std::string edges;
};

struct PruneReport {
    std::vector<std::string> removed_node_ids;
    std::vector<std::string> removed_edge_ids;
    std::size_t kept_component_size = 0;
};

/// Parses the canonical two-file CSV format. Unknown type tokens, wrong
/// column counts, dangling endpoints and duplicate ids all raise ParseError
/// naming the offending line.
Network parse_network(std::string_view nodes_text, std::string_view edges_text);

/// Canonical text with rows sorted by id. Labels are quoted only when they
/// contain a comma, a quote, or leading/trailing whitespace.
NetworkText export_network(const Network& network);

/// Keeps the largest connected component (ties go to the component holding
/// the smallest id) and reports everything else as removed.
std::pair<Network, PruneReport> prune_islands(const Network& network);

Network read_network(const std::filesystem::path& nodes_path, const std::filesystem::path& edges_path);
void write_network(const Network& network, const std::filesystem::path& nodes_path,
                   const std::filesystem::path& edges_path);

/// Whole-file read; throws ParseError (line 0) when the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Splits one CSV record. Fields may be double-quoted; a doubled quote inside
/// a quoted field is a literal quote.
std::vector<std::string> split_csv_record(std::string_view line, const std::string& source,
                                          std::size_t line_number);

}  // namespace gridcomm
