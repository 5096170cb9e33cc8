#pragma once

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gridcomm/network.hpp"

namespace gridcomm::testing {

struct NodeSpec {
    std::string id;
    NodeType type;
};

struct EdgeSpec {
    std::string id;
    std::string a;
    std::string b;
    EdgeType type;
};

inline Network make_network(const std::vector<NodeSpec>& nodes, const std::vector<EdgeSpec>& edges) {
    Network net;
    for (const auto& n : nodes) net.add_node({n.id, n.id, n.type});
    for (const auto& e : edges) net.add_edge({e.id, e.a, e.b, e.type});
    return net;
}

/// Untyped path over the given ids: e1 = ids[0]-ids[1], ...
inline Network make_path(const std::vector<std::string>& ids, EdgeType type = EdgeType::fiber) {
    Network net;
    for (const auto& id : ids) net.add_node({id, id, NodeType::transmission});
    for (std::size_t i = 0; i + 1 < ids.size(); ++i)
        net.add_edge({"e" + std::to_string(i + 1), ids[i], ids[i + 1], type});
    return net;
}

inline Network make_cycle(const std::vector<std::string>& ids) {
    Network net = make_path(ids);
    net.add_edge({"e" + std::to_string(ids.size()), ids.back(), ids.front(), EdgeType::fiber});
    return net;
}

struct RandomNetworkOptions {
    int min_nodes = 2;
    int max_nodes = 12;
    double extra_edge_factor = 0.6;  // extra edges ~ factor * nodes
    double parallel_probability = 0.15;
    double microwave_fraction = -1.0;  // < 0: node types uniformly random
    bool connected = true;
    bool fancy_labels = false;
};

inline std::string random_label(std::mt19937& rng, int index) {
    static const std::vector<std::string> pieces = {
        "Substation", "Hill, North", "\"Quoted\" Site", "Relay", " padded ", "Ridge", "O'Brien", "",
    };
    std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
    return pieces[pick(rng)] + " " + std::to_string(index);
}

inline Network random_network(std::mt19937& rng, const RandomNetworkOptions& opt = {}) {
    std::uniform_int_distribution<int> node_count(opt.min_nodes, opt.max_nodes);
    const int n = node_count(rng);

    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "n%03d", i);
        ids.push_back(buf);
    }
    std::shuffle(ids.begin(), ids.end(), rng);

    std::uniform_int_distribution<std::size_t> node_type(0, kNodeTypeCount - 1);
    std::uniform_int_distribution<std::size_t> edge_type(0, kEdgeTypeCount - 2);  // typed media only
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Network net;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const int microwave_count =
        opt.microwave_fraction < 0 ? -1 : static_cast<int>(opt.microwave_fraction * n + 0.5);
    for (int i = 0; i < n; ++i) {
        NodeType type;
        if (microwave_count >= 0) {
            if (order[i] < microwave_count) {
                type = NodeType::microwave;
            } else {
                // any non-microwave type
                type = kAllNodeTypes[1 + node_type(rng) % (kNodeTypeCount - 1)];
            }
        } else {
            type = kAllNodeTypes[node_type(rng)];
        }
        net.add_node({ids[i], opt.fancy_labels ? random_label(rng, i) : ids[i], type});
    }

    int edge_counter = 0;
    auto add = [&](int a, int b) {
        net.add_edge({"x" + std::to_string(edge_counter++), ids[a], ids[b], kAllEdgeTypes[edge_type(rng)]});
    };

    if (opt.connected) {
        for (int i = 1; i < n; ++i) {
            std::uniform_int_distribution<int> parent(0, i - 1);
            add(parent(rng), i);
        }
    }
    if (n >= 2) {
        const int extra = static_cast<int>(opt.extra_edge_factor * n * unit(rng));
        std::uniform_int_distribution<int> any(0, n - 1);
        for (int k = 0; k < extra; ++k) {
            int a = any(rng), b = any(rng);
            if (a == b) continue;
            add(a, b);
        }
        // Parallels on existing pairs.
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& [pair, ids_between] : net.adjacency()) pairs.push_back(pair);
        for (const auto& [a, b] : pairs) {
            if (unit(rng) < opt.parallel_probability)
                net.add_edge({"x" + std::to_string(edge_counter++), a, b, kAllEdgeTypes[edge_type(rng)]});
        }
    }
    return net;
}

}  // namespace gridcomm::testing
