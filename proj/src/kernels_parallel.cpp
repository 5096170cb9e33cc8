#include <algorithm>

#include "brandes.hpp"
#include "gridcomm/kernels.hpp"

namespace gridcomm::kernels::parallel {

namespace {

// Sources per partial-sum block. Fixed so that the merge order, and hence
// the floating-point result, is independent of the thread count.
constexpr int kSourceBlock = 32;

}  // namespace

std::vector<int> min_hops(const SimpleGraph& graph, std::span<const int> sources) {
    const int count = static_cast<int>(sources.size());
    std::vector<std::vector<int>> per_source(sources.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) per_source[i] = bfs_hops(graph, sources[i]);

    std::vector<int> best(graph.node_count(), kUnreachable);
    for (const auto& dist : per_source)
        for (std::size_t i = 0; i < best.size(); ++i) best[i] = detail::merge_min(best[i], dist[i]);
    return best;
}

std::vector<double> edge_betweenness(const SimpleGraph& graph) {
    const int n = static_cast<int>(graph.node_count());
    const int blocks = (n + kSourceBlock - 1) / kSourceBlock;
    std::vector<std::vector<double>> partial(blocks);

#pragma omp parallel
    {
        detail::BrandesWorkspace ws(graph.node_count());
#pragma omp for schedule(dynamic, 1)
        for (int b = 0; b < blocks; ++b) {
            std::vector<double> scores(graph.edge_count(), 0.0);
            const int last = std::min(n, (b + 1) * kSourceBlock);
            for (int s = b * kSourceBlock; s < last; ++s) detail::accumulate_source(graph, s, ws, scores);
            partial[b] = std::move(scores);
        }
    }

    std::vector<double> result(graph.edge_count(), 0.0);
    for (const auto& block : partial)
        for (std::size_t e = 0; e < result.size(); ++e) result[e] += block[e];
    for (auto& value : result) value /= 2.0;
    return result;
}

}  // namespace gridcomm::kernels::parallel
