#include "gridcomm/network.hpp"

#include <algorithm>
#include <deque>

#include "gridcomm/error.hpp"

namespace gridcomm {

EndpointPair make_endpoint_pair(const std::string& a, const std::string& b) {
    return a <= b ? EndpointPair{a, b} : EndpointPair{b, a};
}

void Network::add_node(Node node) {
    if (!is_valid_id(node.id)) throw GraphError("invalid node id '" + node.id + "'");
    if (node.label.find_first_of("\r\n") != std::string::npos)
        throw GraphError("node '" + node.id + "': label contains a line break");
    if (nodes_.contains(node.id)) throw GraphError("duplicate node id '" + node.id + "'");
    incident_[node.id];
    std::string id = node.id;
    nodes_.emplace(std::move(id), std::move(node));
}

void Network::add_edge(Edge edge) {
    if (!is_valid_id(edge.id)) throw GraphError("invalid edge id '" + edge.id + "'");
    if (edges_.contains(edge.id)) throw GraphError("duplicate edge id '" + edge.id + "'");
    for (const auto* endpoint : {&edge.source, &edge.target})
        if (!nodes_.contains(*endpoint))
            throw GraphError("edge '" + edge.id + "': missing endpoint '" + *endpoint + "'");
    if (edge.source == edge.target)
        throw GraphError("edge '" + edge.id + "': self-loop on '" + edge.source + "'");

    pairs_[make_endpoint_pair(edge.source, edge.target)].push_back(edge.id);
    incident_[edge.source].insert(edge.id);
    incident_[edge.target].insert(edge.id);
    std::string id = edge.id;
    edges_.emplace(std::move(id), std::move(edge));
}

void Network::remove_edge(const std::string& id) {
    auto it = edges_.find(id);
    if (it == edges_.end()) throw GraphError("unknown edge id '" + id + "'");
    const Edge& e = it->second;

    auto pit = pairs_.find(make_endpoint_pair(e.source, e.target));
    auto& ids = pit->second;
    ids.erase(std::find(ids.begin(), ids.end(), id));
    if (ids.empty()) pairs_.erase(pit);

    incident_[e.source].erase(id);
    incident_[e.target].erase(id);
    edges_.erase(it);
}

void Network::remove_node(const std::string& id) {
    if (!nodes_.contains(id)) throw GraphError("unknown node id '" + id + "'");
    // Copy: remove_edge mutates the incidence set.
    const std::set<std::string> incident = incident_.at(id);
    for (const auto& edge_id : incident) remove_edge(edge_id);
    incident_.erase(id);
    nodes_.erase(id);
}

bool Network::has_adjacency(const std::string& a, const std::string& b) const {
    return pairs_.contains(make_endpoint_pair(a, b));
}

const Node& Network::node(const std::string& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw GraphError("unknown node id '" + id + "'");
    return it->second;
}

const Edge& Network::edge(const std::string& id) const {
    auto it = edges_.find(id);
    if (it == edges_.end()) throw GraphError("unknown edge id '" + id + "'");
    return it->second;
}

const std::set<std::string>& Network::incident_edges(const std::string& id) const {
    auto it = incident_.find(id);
    if (it == incident_.end()) throw GraphError("unknown node id '" + id + "'");
    return it->second;
}

std::set<std::string> Network::neighbors(const std::string& id) const {
    std::set<std::string> out;
    for (const auto& edge_id : incident_edges(id)) {
        const Edge& e = edges_.at(edge_id);
        out.insert(e.source == id ? e.target : e.source);
    }
    return out;
}

std::size_t Network::degree(const std::string& id) const { return incident_edges(id).size(); }

std::vector<std::string> Network::edges_between(const std::string& a, const std::string& b) const {
    auto it = pairs_.find(make_endpoint_pair(a, b));
    return it == pairs_.end() ? std::vector<std::string>{} : it->second;
}

bool Network::check_consistency() const {
    std::size_t indexed = 0;
    for (const auto& [pair, ids] : pairs_) {
        if (ids.empty()) return false;
        for (const auto& id : ids) {
            auto it = edges_.find(id);
            if (it == edges_.end()) return false;
            if (make_endpoint_pair(it->second.source, it->second.target) != pair) return false;
        }
        indexed += ids.size();
    }
    if (indexed != edges_.size()) return false;

    if (incident_.size() != nodes_.size()) return false;
    std::size_t incidences = 0;
    for (const auto& [node_id, ids] : incident_) {
        if (!nodes_.contains(node_id)) return false;
        for (const auto& id : ids) {
            auto it = edges_.find(id);
            if (it == edges_.end()) return false;
            if (it->second.source != node_id && it->second.target != node_id) return false;
        }
        incidences += ids.size();
    }
    return incidences == 2 * edges_.size();
}

std::vector<std::set<std::string>> connected_components(const Network& network) {
    std::vector<std::set<std::string>> components;
    std::set<std::string> seen;
    // Ascending iteration means each component is discovered from its
    // smallest member, which yields the required ordering.
    for (const auto& [start, node] : network.nodes()) {
        if (seen.contains(start)) continue;
        std::set<std::string> component{start};
        std::deque<std::string> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            const std::string current = std::move(queue.front());
            queue.pop_front();
            for (const auto& next : network.neighbors(current)) {
                if (seen.insert(next).second) {
                    component.insert(next);
                    queue.push_back(next);
                }
            }
        }
        components.push_back(std::move(component));
    }
    return components;
}

bool is_connected(const Network& network) { return connected_components(network).size() == 1; }

}  // namespace gridcomm
