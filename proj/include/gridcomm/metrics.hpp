#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridcomm/network.hpp"

namespace gridcomm {

/// Fraction of edge endpoints per (node type, edge type). Rows exist for
/// every node type present in the network and columns for every edge type
/// present, zeros included; absent combinations read as 0.
struct DegreeTypeMatrix {
    std::map<NodeType, std::map<EdgeType, double>> cells;

    double at(NodeType node_type, EdgeType edge_type) const;
    double column_total(EdgeType edge_type) const;
    double total() const;

    friend bool operator==(const DegreeTypeMatrix&, const DegreeTypeMatrix&) = default;
};

struct PathLengthHistogram {
    std::map<int, std::size_t> counts;  // hop count -> occurrences
    double mean = 0.0;
    int mode = 0;                       // most frequent length, smallest on ties
    double std_dev = 0.0;               // sample (n - 1) standard deviation
    double skewness = 0.0;              // (mean - mode) / std_dev, 0 when std_dev == 0

    std::size_t sample_count() const;

    friend bool operator==(const PathLengthHistogram&, const PathLengthHistogram&) = default;
};

struct StatisticsProfile {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    DegreeTypeMatrix degree_types;
    double plc_fiber_ratio = 0.0;
    std::map<NodeType, double> adl;
    PathLengthHistogram psl;
    std::map<EdgeType, double> aebc;

    friend bool operator==(const StatisticsProfile&, const StatisticsProfile&) = default;
};

// Each edge of type t gives 1/2 to the row of each endpoint's node type in
// column t, normalized by edge count. Throws PreconditionError on zero edges.
DegreeTypeMatrix degree_type_matrix(const Network& network);

/// (plc + fiber edges) / all edges. Throws PreconditionError on zero edges.
double plc_fiber_ratio(const Network& network);

/// Mean degree per node type present in the network.
std::map<NodeType, double> average_degree_load(const Network& network);

/// Ids of all control_center nodes, ascending.
std::vector<std::string> default_control_ids(const Network& network);

/// Hop count from every node to its nearest control centre. Requires a
/// connected network and a non-empty list of existing ids.
std::map<std::string, int> primary_shortest_lengths(const Network& network,
                                                    const std::vector<std::string>& control_ids);

PathLengthHistogram psl_histogram(const std::map<std::string, int>& lengths);
PathLengthHistogram psl_histogram(std::span<const int> samples);

/// Unnormalized edge betweenness on the collapsed simple graph; parallel
/// edges share their representative's value.
std::map<std::string, double> edge_betweenness(const Network& network);

/// Mean edge betweenness per edge type present. Throws on zero edges.
std::map<EdgeType, double> average_ebc_by_type(const Network& network);

/// Every metric above for one network. Without `control_ids` the network's
/// control_center nodes are used.
StatisticsProfile statistics_profile(const Network& network,
                                     const std::optional<std::vector<std::string>>& control_ids = std::nullopt);

}  // namespace gridcomm
