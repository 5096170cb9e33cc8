#include <algorithm>
#include <deque>

#include "brandes.hpp"
#include "gridcomm/kernels.hpp"

namespace gridcomm::kernels {

std::vector<int> bfs_hops(const SimpleGraph& graph, int source) {
    std::vector<int> dist(graph.node_count(), kUnreachable);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (const auto& arc : graph.arcs(u)) {
            if (dist[arc.to] == kUnreachable) {
                dist[arc.to] = dist[u] + 1;
                queue.push_back(arc.to);
            }
        }
    }
    return dist;
}

namespace detail {

int merge_min(int current, int candidate) {
    if (candidate == kUnreachable) return current;
    if (current == kUnreachable) return candidate;
    return std::min(current, candidate);
}

}  // namespace detail

namespace serial {

std::vector<int> min_hops(const SimpleGraph& graph, std::span<const int> sources) {
    std::vector<int> best(graph.node_count(), kUnreachable);
    for (const int source : sources) {
        const auto dist = bfs_hops(graph, source);
        for (std::size_t i = 0; i < best.size(); ++i) best[i] = detail::merge_min(best[i], dist[i]);
    }
    return best;
}

std::vector<double> edge_betweenness(const SimpleGraph& graph) {
    std::vector<double> result(graph.edge_count(), 0.0);
    detail::BrandesWorkspace ws(graph.node_count());
    for (int s = 0; s < static_cast<int>(graph.node_count()); ++s)
        detail::accumulate_source(graph, s, ws, result);
    // Every unordered pair was visited from both ends.
    for (auto& value : result) value /= 2.0;
    return result;
}

}  // namespace serial

}  // namespace gridcomm::kernels
