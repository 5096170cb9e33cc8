#include "gridcomm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gridcomm/error.hpp"
#include "gridcomm/kernels.hpp"
#include "gridcomm/simple_graph.hpp"

namespace gridcomm {

namespace {

void require_edges(const Network& network, const char* what) {
    if (network.edge_count() == 0) throw PreconditionError(std::string(what) + ": network has no edges");
}

}  // namespace

double DegreeTypeMatrix::at(NodeType node_type, EdgeType edge_type) const {
    auto row = cells.find(node_type);
    if (row == cells.end()) return 0.0;
    auto cell = row->second.find(edge_type);
    return cell == row->second.end() ? 0.0 : cell->second;
}

double DegreeTypeMatrix::column_total(EdgeType edge_type) const {
    double sum = 0.0;
    for (const auto& [node_type, row] : cells) sum += at(node_type, edge_type);
    return sum;
}

double DegreeTypeMatrix::total() const {
    double sum = 0.0;
    for (const auto& [node_type, row] : cells)
        for (const auto& [edge_type, value] : row) sum += value;
    return sum;
}

std::size_t PathLengthHistogram::sample_count() const {
    std::size_t n = 0;
    for (const auto& [length, count] : counts) n += count;
    return n;
}

DegreeTypeMatrix degree_type_matrix(const Network& network) {
    require_edges(network, "degree_type_matrix");

    std::set<NodeType> node_types;
    std::set<EdgeType> edge_types;
    for (const auto& [id, node] : network.nodes()) node_types.insert(node.type);
    for (const auto& [id, edge] : network.edges()) edge_types.insert(edge.type);

    DegreeTypeMatrix matrix;
    for (auto nt : node_types)
        for (auto et : edge_types) matrix.cells[nt][et] = 0.0;

    const double weight = 0.5 / static_cast<double>(network.edge_count());
    for (const auto& [id, edge] : network.edges()) {
        matrix.cells[network.node(edge.source).type][edge.type] += weight;
        matrix.cells[network.node(edge.target).type][edge.type] += weight;
    }
    return matrix;
}

double plc_fiber_ratio(const Network& network) {
    require_edges(network, "plc_fiber_ratio");
    const auto hits = std::count_if(network.edges().begin(), network.edges().end(), [](const auto& kv) {
        return kv.second.type == EdgeType::plc || kv.second.type == EdgeType::fiber;
    });
    return static_cast<double>(hits) / static_cast<double>(network.edge_count());
}

std::map<NodeType, double> average_degree_load(const Network& network) {
    std::map<NodeType, std::pair<std::size_t, std::size_t>> sums;  // degree total, node count
    for (const auto& [id, node] : network.nodes()) {
        auto& [degree_total, count] = sums[node.type];
        degree_total += network.degree(id);
        ++count;
    }
    std::map<NodeType, double> adl;
    for (const auto& [type, sum] : sums)
        adl[type] = static_cast<double>(sum.first) / static_cast<double>(sum.second);
    return adl;
}

std::vector<std::string> default_control_ids(const Network& network) {
    std::vector<std::string> ids;
    for (const auto& [id, node] : network.nodes())
        if (node.type == NodeType::control_center) ids.push_back(id);
    return ids;
}

std::map<std::string, int> primary_shortest_lengths(const Network& network,
                                                    const std::vector<std::string>& control_ids) {
    if (control_ids.empty()) throw PreconditionError("primary_shortest_lengths: no control centres given");
    if (!is_connected(network)) throw PreconditionError("primary_shortest_lengths: network is not connected");

    const SimpleGraph graph(network);
    std::vector<int> sources;
    for (const auto& id : control_ids) {
        const auto index = graph.index_of(id);
        if (!index) throw PreconditionError("primary_shortest_lengths: unknown control centre '" + id + "'");
        sources.push_back(*index);
    }
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

    const auto hops = kernels::parallel::min_hops(graph, sources);
    std::map<std::string, int> lengths;
    for (std::size_t i = 0; i < hops.size(); ++i) lengths.emplace(graph.node_ids()[i], hops[i]);
    return lengths;
}

PathLengthHistogram psl_histogram(std::span<const int> samples) {
    if (samples.empty()) throw PreconditionError("psl_histogram: no samples");

    PathLengthHistogram h;
    for (int length : samples) {
        if (length < 0) throw PreconditionError("psl_histogram: negative path length");
        ++h.counts[length];
    }

    const double n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (int length : samples) sum += length;
    h.mean = sum / n;

    std::size_t best = 0;
    for (const auto& [length, count] : h.counts) {
        if (count > best) {
            best = count;
            h.mode = length;
        }
    }

    if (samples.size() > 1) {
        double squares = 0.0;
        for (int length : samples) squares += (length - h.mean) * (length - h.mean);
        h.std_dev = std::sqrt(squares / (n - 1.0));
    }
    h.skewness = h.std_dev > 0.0 ? (h.mean - h.mode) / h.std_dev : 0.0;
    return h;
}

PathLengthHistogram psl_histogram(const std::map<std::string, int>& lengths) {
    std::vector<int> samples;
    samples.reserve(lengths.size());
    for (const auto& [id, length] : lengths) samples.push_back(length);
    return psl_histogram(samples);
}

std::map<std::string, double> edge_betweenness(const Network& network) {
    const SimpleGraph graph(network);
    const auto scores = kernels::parallel::edge_betweenness(graph);
    std::map<std::string, double> out;
    for (std::size_t e = 0; e < graph.edge_count(); ++e)
        for (const auto& id : graph.edges()[e].originals) out.emplace(id, scores[e]);
    return out;
}

std::map<EdgeType, double> average_ebc_by_type(const Network& network) {
    require_edges(network, "average_ebc_by_type");
    const auto ebc = edge_betweenness(network);
    std::map<EdgeType, std::pair<double, std::size_t>> sums;
    for (const auto& [id, value] : ebc) {
        auto& [total, count] = sums[network.edge(id).type];
        total += value;
        ++count;
    }
    std::map<EdgeType, double> out;
    for (const auto& [type, sum] : sums) out[type] = sum.first / static_cast<double>(sum.second);
    return out;
}

StatisticsProfile statistics_profile(const Network& network,
                                     const std::optional<std::vector<std::string>>& control_ids) {
    require_edges(network, "statistics_profile");
    const auto controls = control_ids ? *control_ids : default_control_ids(network);

    StatisticsProfile profile;
    profile.node_count = network.node_count();
    profile.edge_count = network.edge_count();
    profile.psl = psl_histogram(primary_shortest_lengths(network, controls));
    profile.degree_types = degree_type_matrix(network);
    profile.plc_fiber_ratio = plc_fiber_ratio(network);
    profile.adl = average_degree_load(network);
    profile.aebc = average_ebc_by_type(network);
    return profile;
}

}  // namespace gridcomm
