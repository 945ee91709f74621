#ifndef P2PFL_EXPERIMENT_HPP_
#define P2PFL_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "p2pfl/aggregate.hpp"
#include "p2pfl/backdoor.hpp"
#include "p2pfl/centrality.hpp"
#include "p2pfl/dataset.hpp"
#include "p2pfl/metrics.hpp"
#include "p2pfl/model.hpp"
#include "p2pfl/protocol.hpp"
#include "p2pfl/topology.hpp"

namespace p2pfl {

struct DatasetConfig {
    std::string name = "synthetic";  // synthetic | emnist | fashion_mnist
    std::string path;                // directory with IDX files (file datasets)
    uint64_t seed = 0;               // synthetic generation / test subsample stream
    int synthetic_train = 12000;
    int synthetic_test = 2000;
    double synthetic_noise = 0.3;
    int samples_per_node = 0;  // truncate each shard to this size; 0 = no cap
    int max_test_samples = 0;  // subsample the test set before splitting; 0 = all
};

struct GraphConfig {
    GraphFamily family = GraphFamily::watts_strogatz;
    int n = 60;
    GenParams params;  // zero-initialized fields mean "use scaled defaults"
    bool explicit_params = false;
    uint64_t seed = 1;
};

struct AttackConfig {
    int k = 0;
    SelectionStrategy strategy = SelectionStrategy::random;
    double pdr = 0.5;
    double boost = 10.0;
    int adv_epochs = 5;
    int target_class = 2;
    TriggerSpec trigger;
};

struct TrainingConfig {
    int rounds = 70;
    double learning_rate = 0.05;
    int batch_size = 32;
    int local_epochs = 1;
    int eval_interval = 5;
};

struct ExperimentConfig {
    DatasetConfig dataset;
    GraphConfig graph;
    AttackConfig attack;
    AggregatorSpec defense;
    int fault_r = 0;
    bool fault_symmetric = false;
    TrainingConfig training;
    int hidden_dim = 64;
    std::vector<uint64_t> seeds = {0, 1, 2};
    std::string output_dir = "runs/out";
};

void validate(const ExperimentConfig& cfg);

// Effective generation parameters: explicit ones, else the density-preserving
// defaults for the configured family and node count.
GenParams effective_gen_params(const GraphConfig& g);

// Static artifacts of one trial, for manifests and audits.
struct TrialArtifacts {
    std::vector<int> adversaries;
    std::vector<int> hops;
    std::vector<Role> roles;
};

// Runs one trial: builds the topology, partitions data, compromises the
// selected nodes, applies crash faults, runs the full round loop, and scores
// each evaluation round. Fully deterministic given (cfg, trial_seed).
TrialSeries run_experiment(const ExperimentConfig& cfg, uint64_t trial_seed, int threads = 1,
                           TrialArtifacts* artifacts = nullptr);

// The topology a config resolves to (shared by every trial of the config).
Topology build_topology(const ExperimentConfig& cfg);

// Train/test pair resolution (synthetic generation or IDX loading, plus the
// configured test subsampling).
struct DataBundle {
    Dataset train;
    Dataset test;
};
DataBundle load_data(const DatasetConfig& cfg);

}  // namespace p2pfl

#endif  // P2PFL_EXPERIMENT_HPP_
