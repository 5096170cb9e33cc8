#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gridcomm/network.hpp"

namespace gridcomm {

/// Source of ids for edges created during simplification: `simpl_<n>` with a
/// running counter, skipping ids already present in the target network.
class CreatedEdgeIds {
public:
    std::string next(const Network& network);

private:
    std::size_t counter_ = 0;
};

/// Links `node_ids` (sorted by id first) into a path for two ids or a cycle
/// for three or more. A pair that is already adjacent gets no new edge.
/// Created edges are untyped. Returns the ids of the created edges.
std::vector<std::string> circular_link(Network& network, std::vector<std::string> node_ids,
                                       CreatedEdgeIds& ids);

/// Convenience overload with a fresh id counter.
std::vector<std::string> circular_link(Network& network, std::vector<std::string> node_ids);

/// Microwave-collapse simplification. Microwave stations are removed one at
/// a time in ascending id order; a station with two or more distinct
/// neighbours first has those neighbours circularly linked. Every edge of
/// the result is untyped.
Network simplify(const Network& network);

}  // namespace gridcomm
