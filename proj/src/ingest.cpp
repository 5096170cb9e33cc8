#include "gridcomm/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "gridcomm/error.hpp"

namespace gridcomm {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({number, line});
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
    return lines;
}

// Checks the header and returns the data rows (blank lines dropped).
std::vector<Line> data_rows(std::string_view text, std::string_view header, const std::string& source) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(source, 1, "missing header '" + std::string(header) + "'");
    if (lines.front().text != header)
        throw ParseError(source, 1, "expected header '" + std::string(header) + "'");
    std::vector<Line> rows;
    for (std::size_t i = 1; i < lines.size(); ++i)
        if (!lines[i].text.empty()) rows.push_back(lines[i]);
    return rows;
}

std::string quote_label(const std::string& label) {
    const bool needs_quotes = label.find_first_of(",\"") != std::string::npos ||
                              (!label.empty() && (label.front() == ' ' || label.back() == ' ' ||
                                                  label.front() == '\t' || label.back() == '\t'));
    if (!needs_quotes) return label;
    std::string out = "\"";
    for (char c : label) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::vector<std::string> split_csv_record(std::string_view line, const std::string& source,
                                          std::size_t line_number) {
    std::vector<std::string> fields;
    std::string field;
    std::size_t i = 0;
    while (true) {
        field.clear();
        if (i < line.size() && line[i] == '"') {
            ++i;
            while (true) {
                if (i >= line.size()) throw ParseError(source, line_number, "unterminated quoted field");
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                field += line[i++];
            }
            if (i < line.size() && line[i] != ',')
                throw ParseError(source, line_number, "unexpected character after quoted field");
        } else {
            while (i < line.size() && line[i] != ',') {
                if (line[i] == '"') throw ParseError(source, line_number, "stray quote in unquoted field");
                field += line[i++];
            }
        }
        fields.push_back(field);
        if (i >= line.size()) break;
        ++i;  // comma
    }
    return fields;
}

Network parse_network(std::string_view nodes_text, std::string_view edges_text) {
    Network network;

    const std::string nodes_source = "nodes file";
    for (const auto& row : data_rows(nodes_text, kNodesHeader, nodes_source)) {
        auto fields = split_csv_record(row.text, nodes_source, row.number);
        if (fields.size() != 3)
            throw ParseError(nodes_source, row.number,
                             "expected 3 columns, found " + std::to_string(fields.size()));
        if (!is_valid_id(fields[0]))
            throw ParseError(nodes_source, row.number, "invalid node id '" + fields[0] + "'");
        const auto type = parse_node_type(fields[2]);
        if (!type) throw ParseError(nodes_source, row.number, "unknown node type '" + fields[2] + "'");
        if (network.has_node(fields[0]))
            throw ParseError(nodes_source, row.number, "duplicate node id '" + fields[0] + "'");
        network.add_node({std::move(fields[0]), std::move(fields[1]), *type});
    }

    const std::string edges_source = "edges file";
    for (const auto& row : data_rows(edges_text, kEdgesHeader, edges_source)) {
        auto fields = split_csv_record(row.text, edges_source, row.number);
        if (fields.size() != 4)
            throw ParseError(edges_source, row.number,
                             "expected 4 columns, found " + std::to_string(fields.size()));
        if (!is_valid_id(fields[0]))
            throw ParseError(edges_source, row.number, "invalid edge id '" + fields[0] + "'");
        const auto type = parse_edge_type(fields[3]);
        if (!type) throw ParseError(edges_source, row.number, "unknown edge type '" + fields[3] + "'");
        if (network.has_edge(fields[0]))
            throw ParseError(edges_source, row.number, "duplicate edge id '" + fields[0] + "'");
        for (const auto* endpoint : {&fields[1], &fields[2]})
            if (!network.has_node(*endpoint))
                throw ParseError(edges_source, row.number, "missing endpoint '" + *endpoint + "'");
        if (fields[1] == fields[2])
            throw ParseError(edges_source, row.number, "self-loop on '" + fields[1] + "'");
        network.add_edge({std::move(fields[0]), std::move(fields[1]), std::move(fields[2]), *type});
    }
    return network;
}

NetworkText export_network(const Network& network) {
    NetworkText out;
    out.nodes.append(kNodesHeader).append("\n");
    for (const auto& [id, node] : network.nodes()) {
        out.nodes.append(id).append(",").append(quote_label(node.label)).append(",");
        out.nodes.append(to_string(node.type)).append("\n");
    }
    out.edges.append(kEdgesHeader).append("\n");
    for (const auto& [id, edge] : network.edges()) {
        out.edges.append(id).append(",").append(edge.source).append(",").append(edge.target).append(",");
        out.edges.append(to_string(edge.type)).append("\n");
    }
    return out;
}

std::pair<Network, PruneReport> prune_islands(const Network& network) {
    if (network.node_count() == 0) throw PreconditionError("cannot prune an empty network");

    const auto components = connected_components(network);
    std::size_t keep = 0;
    for (std::size_t i = 1; i < components.size(); ++i)
        if (components[i].size() > components[keep].size()) keep = i;

    PruneReport report;
    report.kept_component_size = components[keep].size();
    Network kept = network;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i == keep) continue;
        for (const auto& id : components[i]) {
            const auto& incident = network.incident_edges(id);
            report.removed_edge_ids.insert(report.removed_edge_ids.end(), incident.begin(), incident.end());
            report.removed_node_ids.push_back(id);
            kept.remove_node(id);
        }
    }
    std::sort(report.removed_node_ids.begin(), report.removed_node_ids.end());
    std::sort(report.removed_edge_ids.begin(), report.removed_edge_ids.end());
    report.removed_edge_ids.erase(std::unique(report.removed_edge_ids.begin(), report.removed_edge_ids.end()),
                                  report.removed_edge_ids.end());
    return {std::move(kept), std::move(report)};
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path.string(), 0, "cannot open file for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw ParseError(path.string(), 0, "write failed");
}

Network read_network(const std::filesystem::path& nodes_path, const std::filesystem::path& edges_path) {
    const auto nodes = read_text_file(nodes_path);
    const auto edges = read_text_file(edges_path);
    return parse_network(nodes, edges);
}

void write_network(const Network& network, const std::filesystem::path& nodes_path,
                   const std::filesystem::path& edges_path) {
    const auto text = export_network(network);
    write_text_file(nodes_path, text.nodes);
    write_text_file(edges_path, text.edges);
}

}  // namespace gridcomm
