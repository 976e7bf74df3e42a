// mutvis: command-line front end for the mutual-visibility library.
//
// Exit codes: 0 success, 1 computation or verification failure (including exceeded
// caps), 2 usage or parse error.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mutvis/graph_io.hpp"
#include "mutvis/graph_spec.hpp"
#include "mutvis/report.hpp"
#include "mutvis/verify.hpp"
#include "mutvis/visibility.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::string format = "json";
    bool stable = false;
    mutvis::SolverLimits limits;
};

void add_common(CLI::App *cmd, CommonFlags &f) {
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_flag("--stable", f.stable, "Omit timestamps, timings and search statistics");
    cmd->add_option("--cap-bp", f.limits.bp_cap, "Largest bp(G) the total mutual-visibility solvers accept");
    cmd->add_option("--cap-n", f.limits.mu_cap, "Largest order for mu and alpha searches");
    cmd->add_option("--cap-oracle", f.limits.oracle_cap, "Largest order for 2^n enumeration oracles");
    cmd->add_option("--threads", f.limits.threads, "Search threads")->check(CLI::Range(1u, 256u));
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_compute(const std::string &source, const std::string &invariant, bool witness, const CommonFlags &f) {
    auto start = std::chrono::steady_clock::now();
    auto p = mutvis::load_graph_source(source);
    auto kind = mutvis::parse_invariant(invariant);
    auto limits = f.limits;
    // --cap-n also bounds the independence number search.
    limits.alpha_cap = std::min<std::size_t>(std::max(limits.mu_cap, mutvis::kDefaultAlphaCap), 64);
    auto report = mutvis::compute_invariant(p.graph(), kind, limits);
    mutvis::RenderOptions opts{mutvis::parse_format(f.format), witness, f.stable, ms_since(start)};
    std::cout << mutvis::render_invariant(p, report, opts);
    return 0;
}

int cmd_verify(const std::vector<std::string> &ids, const mutvis::VerifyOptions &vo, const CommonFlags &f) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> selected = ids;
    if (selected.size() == 1 && selected.front() == "all") {
        selected.clear();
        for (const auto &suite : mutvis::verification_suites())
            selected.push_back(suite.id);
    }
    std::vector<mutvis::VerificationRecord> records;
    for (const auto &id : selected) {
        auto part = mutvis::run_suite(id, vo);
        records.insert(records.end(), part.begin(), part.end());
    }
    mutvis::RenderOptions opts{mutvis::parse_format(f.format), false, f.stable, ms_since(start)};
    std::cout << mutvis::render_records(records, opts);
    return mutvis::all_passed(records) ? 0 : kExitFailure;
}

int cmd_export(const std::string &source, const std::string &output) {
    auto p = mutvis::load_graph_source(source);
    std::string header = "mutvis graph " + p.graph().name();
    if (output == "-")
        mutvis::write_graph(std::cout, p.graph(), header);
    else
        mutvis::export_graph_file(output, p.graph(), header);
    return 0;
}

int cmd_info(const std::string &source, bool suites) {
    if (suites || source.empty()) {
        for (const auto &suite : mutvis::verification_suites())
            std::cout << suite.id << "\t" << suite.summary << "\n";
        return 0;
    }
    auto p = mutvis::load_graph_source(source);
    const auto &g = p.graph();
    std::cout << "graph:      " << g.name() << "\n"
              << "order:      " << g.order() << "\n"
              << "edges:      " << g.edge_count() << "\n"
              << "connected:  " << (mutvis::is_connected(g) ? "yes" : "no") << "\n"
              << "min degree: " << mutvis::min_degree(g) << "\n";
    if (mutvis::is_connected(g)) {
        auto gi = mutvis::girth(g);
        std::cout << "diameter:   " << mutvis::all_pairs_distances(g).diameter() << "\n"
                  << "girth:      " << (gi ? std::to_string(*gi) : std::string("inf")) << "\n"
                  << "leaves:     " << mutvis::format_set(mutvis::leaf_set(g)) << "\n"
                  << "bypass:     " << mutvis::format_set(mutvis::bypass_set(g)) << "\n";
    }
    if (p.factor_count() > 1) {
        std::cout << "factors:   ";
        for (const auto &factor : p.factors())
            std::cout << " " << factor.name();
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact mutual-visibility invariants of graphs and Cartesian products"};
    app.require_subcommand(1);

    CommonFlags compute_flags;
    std::string compute_graph;
    std::string invariant = "mut";
    bool witness = false;
    auto *compute = app.add_subcommand("compute", "Compute one invariant of a graph");
    compute->add_option("--graph", compute_graph, "Graph spec or @file")->required();
    compute->add_option("--invariant", invariant, "mu, mut, muit, bp, alpha or girth");
    compute->add_flag("--witness", witness, "Print a witness set");
    add_common(compute, compute_flags);

    CommonFlags verify_flags;
    std::vector<std::string> theorem_ids;
    mutvis::VerifyOptions verify_opts;
    auto *verify = app.add_subcommand("verify", "Run verification suites ('all' runs every suite)");
    verify->add_option("theorem", theorem_ids, "Suite ids, e.g. thm:cp-tree-by-graphs")->required();
    verify->add_option("--graph", verify_opts.graphs, "Override the suite's graphs (repeatable)");
    verify->add_option("--seed", verify_opts.seed, "Seed for random instances");
    verify->add_option("--max-n", verify_opts.max_n, "Largest order or family parameter");
    verify->add_option("--count", verify_opts.count, "Number of random instances");
    add_common(verify, verify_flags);

    std::string export_graph;
    std::string export_path = "-";
    auto *exporter = app.add_subcommand("export", "Write a graph in edge-list format");
    exporter->add_option("--graph", export_graph, "Graph spec or @file")->required();
    exporter->add_option("-o,--output", export_path, "Output path, '-' for stdout");

    std::string info_graph;
    bool list_suites = false;
    auto *info = app.add_subcommand("info", "Describe a graph or list verification suites");
    info->add_option("--graph", info_graph, "Graph spec or @file");
    info->add_flag("--suites", list_suites, "List verification suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(compute_graph, invariant, witness, compute_flags);
        if (verify->parsed()) {
            verify_opts.limits = verify_flags.limits;
            return cmd_verify(theorem_ids, verify_opts, verify_flags);
        }
        if (exporter->parsed())
            return cmd_export(export_graph, export_path);
        return cmd_info(info_graph, list_suites);
    } catch (const mutvis::CapExceeded &e) {
        std::cerr << "mutvis: cap exceeded (" << e.flag() << "): " << e.what() << "\n";
        return kExitFailure;
    } catch (const mutvis::InvalidInput &e) {
        std::cerr << "mutvis: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "mutvis: " << e.what() << "\n";
        return kExitFailure;
    }
}
