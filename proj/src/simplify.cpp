#include "gridcomm/simplify.hpp"

#include <algorithm>

#include "gridcomm/error.hpp"

namespace gridcomm {

std::string CreatedEdgeIds::next(const Network& network) {
    std::string id;
    do {
        id = "simpl_" + std::to_string(counter_++);
    } while (network.has_edge(id));
    return id;
}

std::vector<std::string> circular_link(Network& network, std::vector<std::string> node_ids,
                                       CreatedEdgeIds& ids) {
    for (const auto& id : node_ids)
        if (!network.has_node(id)) throw GraphError("unknown node id '" + id + "'");
    std::sort(node_ids.begin(), node_ids.end());
    if (std::adjacent_find(node_ids.begin(), node_ids.end()) != node_ids.end())
        throw GraphError("circular_link: node list contains duplicates");

    const std::size_t k = node_ids.size();
    std::vector<std::pair<std::size_t, std::size_t>> links;
    if (k == 2) {
        links.emplace_back(0, 1);
    } else if (k >= 3) {
        for (std::size_t i = 0; i < k; ++i) links.emplace_back(i, (i + 1) % k);
    }

    std::vector<std::string> created;
    for (const auto& [a, b] : links) {
        if (network.has_adjacency(node_ids[a], node_ids[b])) continue;
        auto id = ids.next(network);
        network.add_edge({id, node_ids[a], node_ids[b], EdgeType::untyped});
        created.push_back(std::move(id));
    }
    return created;
}

std::vector<std::string> circular_link(Network& network, std::vector<std::string> node_ids) {
    CreatedEdgeIds ids;
    return circular_link(network, std::move(node_ids), ids);
}

Network simplify(const Network& network) {
    Network out = network;
    CreatedEdgeIds ids;

    // Removing one station never changes another node's type, so a single
    // ascending pass visits the same sequence as re-scanning after each
    // removal; neighbour sets are read at removal time.
    std::vector<std::string> stations;
    for (const auto& [id, node] : network.nodes())
        if (node.type == NodeType::microwave) stations.push_back(id);

    for (const auto& station : stations) {
        const auto around = out.neighbors(station);
        if (around.size() >= 2) circular_link(out, {around.begin(), around.end()}, ids);
        out.remove_node(station);
    }

    Network typed_out;
    for (const auto& [id, node] : out.nodes()) typed_out.add_node(node);
    for (auto [id, edge] : out.edges()) {
        edge.type = EdgeType::untyped;
        typed_out.add_edge(std::move(edge));
    }
    return typed_out;
}

}  // namespace gridcomm
