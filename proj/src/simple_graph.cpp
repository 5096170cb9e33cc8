#include "gridcomm/simple_graph.hpp"

#include <algorithm>

namespace gridcomm {

SimpleGraph::SimpleGraph(const Network& network) {
    node_ids_.reserve(network.node_count());
    for (const auto& [id, node] : network.nodes()) node_ids_.push_back(id);

    std::vector<std::size_t> degree(node_ids_.size(), 0);
    edges_.reserve(network.adjacency().size());
    for (const auto& [pair, ids] : network.adjacency()) {
        const int u = *index_of(pair.first);
        const int v = *index_of(pair.second);
        edges_.push_back({u, v, ids});
        std::sort(edges_.back().originals.begin(), edges_.back().originals.end());
        ++degree[u];
        ++degree[v];
    }

    offsets_.assign(node_ids_.size() + 1, 0);
    for (std::size_t i = 0; i < degree.size(); ++i) offsets_[i + 1] = offsets_[i] + degree[i];
    arcs_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& ce = edges_[e];
        arcs_[cursor[ce.u]++] = {ce.v, static_cast<int>(e)};
        arcs_[cursor[ce.v]++] = {ce.u, static_cast<int>(e)};
    }
}

std::optional<int> SimpleGraph::index_of(const std::string& id) const {
    auto it = std::lower_bound(node_ids_.begin(), node_ids_.end(), id);
    if (it == node_ids_.end() || *it != id) return std::nullopt;
    return static_cast<int>(it - node_ids_.begin());
}

}  // namespace gridcomm
