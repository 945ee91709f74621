#include "p2pfl/experiment.hpp"

#include <algorithm>
#include <stdexcept>

#include "p2pfl/rng.hpp"

namespace p2pfl {

namespace {

// Stream tags for per-trial seed derivation.
constexpr uint64_t kStreamPartition = 1;
constexpr uint64_t kStreamSelect = 2;
constexpr uint64_t kStreamPoison = 3;
constexpr uint64_t kStreamInit = 4;
constexpr uint64_t kStreamFaults = 5;
constexpr uint64_t kStreamNode = 6;

}  // namespace

void validate(const ExperimentConfig& cfg) {
    if (cfg.graph.n < 3) throw std::invalid_argument("config: graph.n must be >= 3");
    if (cfg.attack.k < 0 || cfg.attack.k > cfg.graph.n)
        throw std::invalid_argument("config: attack.k must be in [0, n]");
    if (cfg.attack.pdr < 0.0 || cfg.attack.pdr > 1.0)
        throw std::invalid_argument("config: attack.pdr must be in [0,1]");
    if (cfg.attack.adv_epochs < 1) throw std::invalid_argument("config: attack.adv_epochs must be >= 1");
    if (cfg.attack.target_class < 0) throw std::invalid_argument("config: attack.target_class must be >= 0");
    if (cfg.training.rounds < 1) throw std::invalid_argument("config: training.rounds must be >= 1");
    if (cfg.training.eval_interval < 1)
        throw std::invalid_argument("config: training.eval_interval must be >= 1");
    if (cfg.training.learning_rate <= 0.0)
        throw std::invalid_argument("config: training.learning_rate must be positive");
    if (cfg.training.batch_size < 1) throw std::invalid_argument("config: training.batch_size must be >= 1");
    if (cfg.training.local_epochs < 1)
        throw std::invalid_argument("config: training.local_epochs must be >= 1");
    if (cfg.hidden_dim < 1) throw std::invalid_argument("config: model.hidden_dim must be >= 1");
    if (cfg.seeds.empty()) throw std::invalid_argument("config: seeds must be non-empty");
    if (cfg.fault_r < 0) throw std::invalid_argument("config: faults.r must be non-negative");
    if (cfg.attack.boost <= 0.0) throw std::invalid_argument("config: attack.boost must be positive");
    validate(cfg.defense);
    if (cfg.dataset.name == "synthetic") {
        if (cfg.dataset.synthetic_train < cfg.graph.n)
            throw std::invalid_argument("config: dataset.synthetic_train must cover all nodes");
        if (cfg.dataset.synthetic_test < 2)
            throw std::invalid_argument("config: dataset.synthetic_test must be >= 2");
    } else if (cfg.dataset.name != "emnist" && cfg.dataset.name != "fashion_mnist") {
        throw std::invalid_argument("config: unknown dataset.name " + cfg.dataset.name);
    }
    if (cfg.dataset.samples_per_node < 0)
        throw std::invalid_argument("config: dataset.samples_per_node must be non-negative");
    if (cfg.dataset.max_test_samples < 0)
        throw std::invalid_argument("config: dataset.max_test_samples must be non-negative");
}

GenParams effective_gen_params(const GraphConfig& g) {
    return g.explicit_params ? g.params : scaled_params(g.family, g.n);
}

Topology build_topology(const ExperimentConfig& cfg) {
    return generate(cfg.graph.family, cfg.graph.n, effective_gen_params(cfg.graph), cfg.graph.seed);
}

DataBundle load_data(const DatasetConfig& cfg) {
    DataBundle data;
    if (cfg.name == "synthetic") {
        SyntheticSpec spec;
        spec.seed = cfg.seed;
        spec.samples = cfg.synthetic_train + cfg.synthetic_test;
        spec.noise = cfg.synthetic_noise;
        Dataset all = make_synthetic(spec);
        data.train = slice(all, 0, cfg.synthetic_train);
        data.test = slice(all, cfg.synthetic_train, all.size());
        data.train.num_classes = data.test.num_classes = all.num_classes;
    } else {
        data.train = load_named(cfg.name, cfg.path, /*train=*/true);
        data.test = load_named(cfg.name, cfg.path, /*train=*/false);
        const int classes = std::max(data.train.num_classes, data.test.num_classes);
        data.train.num_classes = data.test.num_classes = classes;
    }
    if (cfg.max_test_samples > 0 && cfg.max_test_samples < data.test.size()) {
        Dataset mixed = shuffled(data.test, derive_seed(cfg.seed, 0x7e57ULL));
        data.test = slice(mixed, 0, cfg.max_test_samples);
    }
    return data;
}

TrialSeries run_experiment(const ExperimentConfig& cfg, uint64_t trial_seed, int threads,
                           TrialArtifacts* artifacts) {
    validate(cfg);
    Topology topo = build_topology(cfg);
    DataBundle data = load_data(cfg.dataset);
    const int n = cfg.graph.n;

    ModelSpec spec;
    spec.input_dim = data.train.input_dim();
    spec.hidden_dim = cfg.hidden_dim;
    spec.num_classes = data.train.num_classes;
    validate(spec);
    if (cfg.attack.target_class >= spec.num_classes)
        throw std::invalid_argument("config: attack.target_class out of range for dataset");

    std::vector<Shard> shards = partition_iid(data.train, n, derive_seed(trial_seed, kStreamPartition));
    if (cfg.dataset.samples_per_node > 0)
        for (auto& s : shards)
            if (s.train.size() > cfg.dataset.samples_per_node)
                s.train = slice(s.train, 0, cfg.dataset.samples_per_node);

    std::vector<int> adversaries;
    if (cfg.attack.k > 0)
        adversaries = select_nodes(topo, cfg.attack.strategy, cfg.attack.k,
                                   derive_seed(trial_seed, kStreamSelect));
    std::vector<char> is_adv(n, 0);
    for (int a : adversaries) is_adv[a] = 1;

    BackdoorSpec backdoor{cfg.attack.pdr, cfg.attack.target_class, cfg.attack.trigger};
    for (int a : adversaries)
        shards[a] = poison_shard(shards[a], backdoor, derive_seed(trial_seed, kStreamPoison, a));

    const ParamVector f0 = init_model(spec, derive_seed(trial_seed, kStreamInit));
    std::vector<NodeState> states(n);
    for (int i = 0; i < n; ++i) {
        NodeState& s = states[i];
        s.id = i;
        s.role = is_adv[i] ? Role::malicious : Role::benign;
        s.model = f0;
        s.shard = std::move(shards[i]);
        s.live_peers = topo.neighbors(i);
        s.train_cfg.learning_rate = cfg.training.learning_rate;
        s.train_cfg.batch_size = cfg.training.batch_size;
        s.train_cfg.local_epochs = is_adv[i] ? cfg.attack.adv_epochs : cfg.training.local_epochs;
        s.train_cfg.seed = derive_seed(trial_seed, kStreamNode, i);
        s.boost = is_adv[i] ? cfg.attack.boost : 1.0;
    }
    apply_faults(topo, states,
                 FaultPlan{cfg.fault_r, derive_seed(trial_seed, kStreamFaults), cfg.fault_symmetric});

    EvalSplit split = make_eval_split(data.test, backdoor);
    std::vector<int> hops(n, -1);
    if (!adversaries.empty()) hops = hop_profile(topo, adversaries);

    if (artifacts) {
        artifacts->adversaries = adversaries;
        artifacts->hops = hops;
        artifacts->roles.resize(n);
        for (int i = 0; i < n; ++i) artifacts->roles[i] = states[i].role;
    }

    TrialSeries series;
    series.seed = trial_seed;
    std::vector<ParamVector> models(n);
    for (int round = 1; round <= cfg.training.rounds; ++round) {
        run_round(spec, states, cfg.defense, round, threads);
        if (round % cfg.training.eval_interval == 0 || round == cfg.training.rounds) {
            for (int i = 0; i < n; ++i) models[i] = states[i].model;
            RoundReport report = score_round(spec, models, split, cfg.attack.target_class, hops, threads);
            report.round = round;
            series.rounds.push_back(std::move(report));
        }
    }
    return series;
}

}  // namespace p2pfl
