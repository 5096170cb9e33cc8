#include "gridcomm/cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "gridcomm/compare.hpp"
#include "gridcomm/error.hpp"
#include "gridcomm/ingest.hpp"
#include "gridcomm/metrics.hpp"
#include "gridcomm/profile_io.hpp"
#include "gridcomm/simplify.hpp"

namespace gridcomm::cli {

namespace {

namespace fs = std::filesystem;

struct NetworkArgs {
    std::string nodes;
    std::string edges;
    bool prune_islands = false;
};

void add_network_options(CLI::App& cmd, NetworkArgs& args) {
    cmd.add_option("--nodes", args.nodes, "Nodes CSV (node_id,label,node_type)")->required();
    cmd.add_option("--edges", args.edges, "Edges CSV (edge_id,source_id,target_id,edge_type)")->required();
    cmd.add_flag("--prune-islands", args.prune_islands, "Keep only the largest connected component");
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) out += (out.empty() ? "" : ",") + item;
    return out;
}

Network load(const NetworkArgs& args, std::ostream& err) {
    Network network = read_network(args.nodes, args.edges);
    if (args.prune_islands && network.node_count() > 0) {
        auto [kept, report] = prune_islands(network);
        err << "pruned " << report.removed_node_ids.size() << " island node(s), "
            << report.removed_edge_ids.size() << " edge(s); kept " << report.kept_component_size << " nodes\n";
        network = std::move(kept);
    }
    return network;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        write_text_file(out_path, text);
}

int cmd_stats(const NetworkArgs& net_args, const std::vector<std::string>& controls_arg, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    const Network network = load(net_args, err);
    if (!is_connected(network)) {
        err << "error: network is not connected (" << connected_components(network).size()
            << " components); rerun with --prune-islands\n";
        return kPreconditionViolation;
    }
    std::vector<std::string> controls = controls_arg;
    if (controls.empty()) {
        controls = default_control_ids(network);
        if (controls.empty()) {
            err << "error: no control_center nodes found; pass --controls\n";
            return kPreconditionViolation;
        }
        err << "controls (auto-detected): " << join(controls) << "\n";
    }
    const auto profile = statistics_profile(network, controls);
    emit(profile_to_string(profile), out_path, out);
    return kSuccess;
}

int cmd_simplify(const NetworkArgs& net_args, const std::string& out_dir, std::ostream& out, std::ostream& err) {
    const Network simplified = simplify(load(net_args, err));
    fs::create_directories(out_dir);
    write_network(simplified, fs::path(out_dir) / "nodes.csv", fs::path(out_dir) / "edges.csv");
    out << simplified.node_count() << " nodes, " << simplified.edge_count() << " edges\n";
    return kSuccess;
}

int cmd_compare(const std::string& reference_path, const std::string& candidate_path, const ToleranceSpec& tol,
                bool as_json, const std::string& out_path, std::ostream& out) {
    const auto reference = parse_profile(read_text_file(reference_path));
    const auto candidate = parse_profile(read_text_file(candidate_path));
    const auto report = compare_profiles(reference, candidate, tol);
    emit(as_json ? dump_stable(report_to_json(report, tol)) : report_to_text(report), out_path, out);
    return report.pass ? kSuccess : kComparisonFailed;
}

int cmd_plot_data(const std::string& profile_path, const std::string& out_path, std::ostream& out) {
    const auto profile = parse_profile(read_text_file(profile_path));
    emit(histogram_csv(profile.psl), out_path, out);
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Statistics for utility communication network models"};
    app.name(args.empty() ? "gridcomm" : fs::path(args.front()).filename().string());
    app.require_subcommand(1);

    NetworkArgs net_args;
    std::string out_path;
    std::vector<std::string> controls;
    bool as_json = false;

    auto* stats = app.add_subcommand("stats", "Compute the statistics profile of a network as JSON");
    add_network_options(*stats, net_args);
    stats->add_option("--controls", controls, "Control centre ids (default: all control_center nodes)")
        ->delimiter(',');
    stats->add_option("--out", out_path, "Write the profile here instead of stdout");
    stats->add_flag("--json", as_json, "Accepted for symmetry; profiles are always JSON");

    auto* simpl = app.add_subcommand("simplify", "Collapse microwave stations into the connectivity model");
    add_network_options(*simpl, net_args);
    simpl->add_option("--out", out_path, "Output directory for nodes.csv and edges.csv")->required();

    std::string reference_path;
    std::string candidate_path;
    ToleranceSpec tol;
    auto* cmp = app.add_subcommand("compare", "Check a candidate profile against a reference profile");
    cmp->add_option("reference", reference_path, "Reference profile JSON")->required();
    cmp->add_option("candidate", candidate_path, "Candidate profile JSON")->required();
    cmp->add_option("--tol.matrix_cell", tol.matrix_cell, "Absolute tolerance per degree-type cell")
        ->capture_default_str();
    cmp->add_option("--tol.ratio", tol.ratio, "Absolute tolerance on the PLC-fiber ratio")->capture_default_str();
    cmp->add_option("--tol.adl", tol.adl, "Absolute tolerance per average degree load")->capture_default_str();
    cmp->add_option("--tol.skewness", tol.skewness, "Absolute tolerance on PSL skewness")->capture_default_str();
    cmp->add_option("--tol.aebc_relative", tol.aebc_relative, "Relative tolerance per edge-type AEBC")
        ->capture_default_str();
    cmp->add_flag("--json", as_json, "Emit the report as JSON");
    cmp->add_option("--out", out_path, "Write the report here instead of stdout");

    std::string profile_path;
    auto* plot = app.add_subcommand("plot-data", "Emit the PSL histogram as length,count CSV");
    plot->add_option("profile", profile_path, "Profile JSON")->required();
    plot->add_option("--out", out_path, "Write the CSV here instead of stdout");

    std::vector<const char*> argv;
    argv.push_back(args.empty() ? "gridcomm" : args.front().c_str());
    for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kInputError;
    }

    try {
        if (*stats) return cmd_stats(net_args, controls, out_path, out, err);
        if (*simpl) return cmd_simplify(net_args, out_path, out, err);
        if (*cmp) {
            try {
                tol.validate();
            } catch (const PreconditionError& e) {
                err << "error: " << e.what() << "\n";
                return kInputError;
            }
            return cmd_compare(reference_path, candidate_path, tol, as_json, out_path, out);
        }
        if (*plot) return cmd_plot_data(profile_path, out_path, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kPreconditionViolation;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace gridcomm::cli
