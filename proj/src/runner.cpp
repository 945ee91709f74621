#include "p2pfl/runner.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "p2pfl/config.hpp"
#include "p2pfl/csv.hpp"
#include "p2pfl/version.hpp"

namespace p2pfl {

namespace fs = std::filesystem;

namespace {

std::string utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc;
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace

RunPaths run_to_dir(const ExperimentConfig& cfg, int threads) {
    validate(cfg);
    RunPaths paths;
    paths.dir = cfg.output_dir;
    fs::create_directories(paths.dir);

    const Topology topo = build_topology(cfg);
    paths.topology = (fs::path(paths.dir) / "topology.edgelist").string();
    write_edge_list_file(topo, paths.topology);

    std::vector<TrialSeries> trials;
    nlohmann::json adversaries_by_seed = nlohmann::json::object();
    for (uint64_t seed : cfg.seeds) {
        TrialArtifacts artifacts;
        TrialSeries series = run_experiment(cfg, seed, threads, &artifacts);
        const std::string raw_path =
            (fs::path(paths.dir) / ("raw_seed" + std::to_string(seed) + ".csv")).string();
        write_raw_csv(raw_path, series, artifacts.roles);
        paths.raw.push_back(raw_path);
        adversaries_by_seed[std::to_string(seed)] = artifacts.adversaries;
        trials.push_back(std::move(series));
    }

    paths.aggregate = (fs::path(paths.dir) / "aggregate.csv").string();
    write_aggregate_csv(paths.aggregate, aggregate_trials(trials), cfg.graph.n);

    const GraphStats topo_stats = stats(topo);
    const DataBundle data = load_data(cfg.dataset);
    nlohmann::json manifest = {
        {"software", std::string("p2pfl ") + kVersion},
        {"created_utc", utc_now()},  // the only non-deterministic field
        {"config", to_json(cfg)},
        {"topology",
         {{"family", to_string(topo.family())},
          {"n", topo.n()},
          {"edges", topo.num_edges()},
          {"seed", topo.seed()},
          {"edge_list_file", "topology.edgelist"},
          {"stats",
           {{"mean_degree", topo_stats.mean_degree},
            {"density", topo_stats.density},
            {"diameter", topo_stats.diameter},
            {"radius", topo_stats.radius},
            {"mean_distance", topo_stats.mean_distance},
            {"transitivity", topo_stats.transitivity},
            {"clustering_coef", topo_stats.clustering_coef}}}}},
        {"dataset",
         {{"name", data.train.name},
          {"train_size", data.train.size()},
          {"test_size", data.test.size()},
          {"num_classes", data.train.num_classes},
          {"rows", data.train.rows},
          {"cols", data.train.cols}}},
        {"adversaries", adversaries_by_seed},
    };
    paths.manifest = (fs::path(paths.dir) / "manifest.json").string();
    std::ofstream mf(paths.manifest);
    if (!mf) throw std::runtime_error("run: cannot open " + paths.manifest);
    mf << manifest.dump(2) << "\n";
    return paths;
}

}  // namespace p2pfl
