#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridcomm/network.hpp"

namespace gridcomm {

/// Index-based simple-graph view of a Network: one representative edge per
/// endpoint pair, plus the original edge ids it stands for. Node indices
/// follow ascending id order, so pair order by id equals pair order by index.
class SimpleGraph {
public:
    struct Arc {
        int to;
        int edge;  // index into edges()
    };

    struct CollapsedEdge {
        int u;  // u < v
        int v;
        std::vector<std::string> originals;
    };

    explicit SimpleGraph(const Network& network);

    std::size_t node_count() const { return node_ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& node_ids() const { return node_ids_; }
    const std::vector<CollapsedEdge>& edges() const { return edges_; }

    std::span<const Arc> arcs(int u) const {
        return {arcs_.data() + offsets_[u], arcs_.data() + offsets_[u + 1]};
    }

    std::optional<int> index_of(const std::string& id) const;

private:
    std::vector<std::string> node_ids_;
    std::vector<CollapsedEdge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Arc> arcs_;
};

/// Collapses parallel edges; the network itself is left untouched.
inline SimpleGraph collapse_parallel(const Network& network) { return SimpleGraph(network); }

}  // namespace gridcomm
