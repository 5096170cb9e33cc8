#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gridcomm/types.hpp"

namespace gridcomm {

struct Node {
    std::string id;
    std::string label;
    NodeType type = NodeType::other;

    friend bool operator==(const Node&, const Node&) = default;
};

/// Undirected link. `source`/`target` keep the caller's orientation so that
/// export reproduces input rows exactly; nothing else depends on it.
struct Edge {
    std::string id;
    std::string source;
    std::string target;
    EdgeType type = EdgeType::untyped;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Endpoint pair with first <= second.
using EndpointPair = std::pair<std::string, std::string>;

EndpointPair make_endpoint_pair(const std::string& a, const std::string& b);

/// Typed undirected multigraph keyed by string ids. Parallel edges are
/// allowed, self-loops are not. All iteration is in ascending id order.
class Network {
public:
    void add_node(Node node);
    void add_edge(Edge edge);

    /// Removes the node and every incident edge.
    void remove_node(const std::string& id);
    void remove_edge(const std::string& id);

    bool has_node(const std::string& id) const { return nodes_.contains(id); }
    bool has_edge(const std::string& id) const { return edges_.contains(id); }
    bool has_adjacency(const std::string& a, const std::string& b) const;

    const Node& node(const std::string& id) const;
    const Edge& edge(const std::string& id) const;

    const std::map<std::string, Node>& nodes() const { return nodes_; }
    const std::map<std::string, Edge>& edges() const { return edges_; }
    const std::map<EndpointPair, std::vector<std::string>>& adjacency() const { return pairs_; }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Distinct adjacent node ids; never contains `id` itself.
    std::set<std::string> neighbors(const std::string& id) const;

    /// Incident edge count, parallel edges counted individually.
    std::size_t degree(const std::string& id) const;

    const std::set<std::string>& incident_edges(const std::string& id) const;

    /// Ids of the edges joining a and b (empty when not adjacent).
    std::vector<std::string> edges_between(const std::string& a, const std::string& b) const;

    /// Verifies that the pair and incidence indexes agree with the edge map.
    bool check_consistency() const;

    friend bool operator==(const Network& a, const Network& b) {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    std::map<std::string, Node> nodes_;
    std::map<std::string, Edge> edges_;
    std::map<EndpointPair, std::vector<std::string>> pairs_;
    std::map<std::string, std::set<std::string>> incident_;
};

/// Maximal connected node sets, ordered by their smallest member id.
std::vector<std::set<std::string>> connected_components(const Network& network);

/// True for networks with exactly one component. The empty network is not
/// connected.
bool is_connected(const Network& network);

}  // namespace gridcomm
