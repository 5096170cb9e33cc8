#pragma once

#include <span>
#include <vector>

#include "gridcomm/simple_graph.hpp"

// Shortest-path kernels over a SimpleGraph with uniform edge weights.
// `serial` is the reference; `parallel` distributes sources over OpenMP
// threads and merges in a fixed order, so its results do not depend on the
// thread count.
namespace gridcomm::kernels {

inline constexpr int kUnreachable = -1;

/// Hop counts from `source`; kUnreachable for nodes in other components.
std::vector<int> bfs_hops(const SimpleGraph& graph, int source);

namespace serial {

/// Per node, the minimum hop count over all `sources`.
std::vector<int> min_hops(const SimpleGraph& graph, std::span<const int> sources);

/// Unnormalized pair-based edge betweenness, one value per collapsed edge.
std::vector<double> edge_betweenness(const SimpleGraph& graph);

}  // namespace serial

namespace parallel {

std::vector<int> min_hops(const SimpleGraph& graph, std::span<const int> sources);
std::vector<double> edge_betweenness(const SimpleGraph& graph);

}  // namespace parallel

}  // namespace gridcomm::kernels
