#pragma once

#include <vector>

#include "gridcomm/simple_graph.hpp"

namespace gridcomm::kernels::detail {

int merge_min(int current, int candidate);

struct BrandesWorkspace {
    explicit BrandesWorkspace(std::size_t n) : dist(n), sigma(n), delta(n) { order.reserve(n); }

    std::vector<int> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<int> order;
};

/// Single-source dependency accumulation (Brandes): adds, for every edge,
/// the fraction of shortest paths from `source` that traverse it.
inline void accumulate_source(const SimpleGraph& graph, int source, BrandesWorkspace& ws,
                              std::vector<double>& edge_scores) {
    std::fill(ws.dist.begin(), ws.dist.end(), -1);
    std::fill(ws.sigma.begin(), ws.sigma.end(), 0.0);
    std::fill(ws.delta.begin(), ws.delta.end(), 0.0);
    ws.order.clear();

    ws.dist[source] = 0;
    ws.sigma[source] = 1.0;
    ws.order.push_back(source);
    // `order` doubles as the BFS queue.
    for (std::size_t head = 0; head < ws.order.size(); ++head) {
        const int u = ws.order[head];
        for (const auto& arc : graph.arcs(u)) {
            if (ws.dist[arc.to] < 0) {
                ws.dist[arc.to] = ws.dist[u] + 1;
                ws.order.push_back(arc.to);
            }
            if (ws.dist[arc.to] == ws.dist[u] + 1) ws.sigma[arc.to] += ws.sigma[u];
        }
    }

    for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
        const int w = *it;
        for (const auto& arc : graph.arcs(w)) {
            const int v = arc.to;
            if (ws.dist[v] == ws.dist[w] - 1) {
                const double c = ws.sigma[v] / ws.sigma[w] * (1.0 + ws.delta[w]);
                edge_scores[arc.edge] += c;
                ws.delta[v] += c;
            }
        }
    }
}

}  // namespace gridcomm::kernels::detail
