#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "p2pfl/centrality.hpp"
#include "p2pfl/config.hpp"
#include "p2pfl/csv.hpp"
#include "p2pfl/runner.hpp"
#include "p2pfl/version.hpp"

namespace {

using namespace p2pfl;

struct Overrides {
    std::string output_dir;
    std::string data_dir;
    int threads = 2;
    int rounds = 0;   // 0 = keep config value
    long long seed = -1;  // >= 0 = single-seed override
};

ExperimentConfig load_config(const std::string& path, const Overrides& o) {
    ExperimentConfig cfg = parse_config(path);
    if (!o.output_dir.empty()) cfg.output_dir = o.output_dir;
    if (!o.data_dir.empty()) cfg.dataset.path = o.data_dir;
    if (cfg.dataset.path.empty() && cfg.dataset.name != "synthetic") {
        if (const char* env = std::getenv("P2PFL_DATA_DIR")) cfg.dataset.path = env;
    }
    if (o.rounds > 0) cfg.training.rounds = o.rounds;
    if (o.seed >= 0) cfg.seeds = {static_cast<uint64_t>(o.seed)};
    validate(cfg);
    return cfg;
}

int cmd_run(const std::string& config_path, const Overrides& o) {
    ExperimentConfig cfg = load_config(config_path, o);
    std::cout << "resolved config:\n" << to_json(cfg).dump(2) << "\n";
    RunPaths paths = run_to_dir(cfg, o.threads);
    std::cout << "wrote " << paths.raw.size() << " raw CSV file(s), " << paths.aggregate << ", "
              << paths.manifest << "\n";
    report(paths.dir, std::cout);
    return 0;
}

int cmd_report(const std::string& run_dir) {
    report(run_dir, std::cout);
    return 0;
}

int cmd_graph_stats(const std::string& config_path, const Overrides& o) {
    ExperimentConfig cfg = load_config(config_path, o);
    const Topology topo = build_topology(cfg);
    const GraphStats s = stats(topo);
    std::cout << std::fixed << std::setprecision(2);
    std::cout << "family           " << to_string(topo.family()) << "\n"
              << "# nodes          " << s.num_nodes << "\n"
              << "# edges          " << s.num_edges << "\n"
              << "mean degree      " << s.mean_degree << "\n"
              << "density          " << s.density << "\n"
              << "diameter         " << s.diameter << "\n"
              << "radius           " << s.radius << "\n"
              << "mean distance    " << s.mean_distance << "\n"
              << "transitivity     " << s.transitivity << "\n"
              << "clustering coef. " << s.clustering_coef << "\n";
    if (!o.output_dir.empty()) {
        std::filesystem::create_directories(o.output_dir);
        const std::string path = (std::filesystem::path(o.output_dir) / "topology.edgelist").string();
        write_edge_list_file(topo, path);
        std::cout << "edge list written to " << path << "\n";
    }
    return 0;
}

int cmd_plan(const std::string& config_path, const Overrides& o) {
    ExperimentConfig cfg = load_config(config_path, o);
    const Topology topo = build_topology(cfg);
    const int k = cfg.attack.k;
    const uint64_t seed = cfg.seeds.front();
    std::cout << "adversary selection plan (k=" << k << "):\n";
    const SelectionStrategy strategies[] = {SelectionStrategy::random, SelectionStrategy::max_degree,
                                            SelectionStrategy::max_ens, SelectionStrategy::max_pagerank,
                                            SelectionStrategy::max_clustering};
    for (SelectionStrategy s : strategies) {
        std::cout << "  " << std::setw(15) << to_string(s) << " :";
        for (int id : select_nodes(topo, s, k, seed)) std::cout << ' ' << id;
        std::cout << "\n";
    }
    if (!o.output_dir.empty()) {
        std::filesystem::create_directories(o.output_dir);
        const std::string path = (std::filesystem::path(o.output_dir) / "scores.csv").string();
        std::ofstream f(path, std::ios::binary);
        f << "node_id,degree,ens,pagerank,clustering\n";
        const auto pr = pagerank(topo);
        for (int v = 0; v < topo.n(); ++v)
            f << v << ',' << topo.degree(v) << ',' << fmt_g6(ens_score(topo, v)) << ','
              << fmt_g6(pr[v]) << ',' << fmt_g6(clustering_coefficient(topo, v)) << "\n";
        std::cout << "scores written to " << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p2pfl: deterministic peer-to-peer federated learning simulator"};
    app.set_version_flag("--version", std::string("p2pfl ") + p2pfl::kVersion);
    app.require_subcommand(1);

    Overrides o;
    std::string config_path, run_dir;

    auto add_common = [&](CLI::App* sub, bool with_data = true) {
        sub->add_option("--output-dir", o.output_dir, "override config output_dir");
        sub->add_option("--threads", o.threads, "worker threads for node-parallel phases");
        if (with_data) sub->add_option("--data-dir", o.data_dir, "dataset directory (IDX files)");
    };

    CLI::App* run = app.add_subcommand("run", "run all configured seeds and write CSV artifacts");
    run->add_option("config", config_path, "experiment config (JSON)")->required();
    add_common(run);
    run->add_option("--rounds", o.rounds, "override training.rounds");
    run->add_option("--seed", o.seed, "run a single seed instead of the configured list");

    CLI::App* rep = app.add_subcommand("report", "summarize a finished run directory");
    rep->add_option("dir", run_dir, "run directory")->required();

    CLI::App* gstats = app.add_subcommand("graph-stats", "print topology statistics for a config");
    gstats->add_option("config", config_path, "experiment config (JSON)")->required();
    add_common(gstats, false);

    CLI::App* plan = app.add_subcommand("plan", "print adversary selections per strategy");
    plan->add_option("config", config_path, "experiment config (JSON)")->required();
    add_common(plan, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, o);
        if (rep->parsed()) return cmd_report(run_dir);
        if (gstats->parsed()) return cmd_graph_stats(config_path, o);
        if (plan->parsed()) return cmd_plan(config_path, o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
