#include "p2pfl/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace p2pfl {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw std::runtime_error("config: " + path + ": " + message);
}

void check_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [key, _] : j.items())
        if (!allowed.count(key)) fail(path + "." + key, "unknown key");
}

template <typename T>
T get_number(const json& j, const std::string& path, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    return v.get<T>();
}

int get_int(const json& j, const std::string& path, const std::string& key, int fallback,
            int min_value, int max_value) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
    const long long raw = v.get<long long>();
    if (raw < min_value || raw > max_value)
        fail(path + "." + key, "value " + std::to_string(raw) + " outside [" +
                                   std::to_string(min_value) + ", " + std::to_string(max_value) + "]");
    return static_cast<int>(raw);
}

double get_real(const json& j, const std::string& path, const std::string& key, double fallback,
                double min_value, double max_value) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    const double raw = v.get<double>();
    if (raw < min_value || raw > max_value) {
        std::ostringstream os;
        os << "value " << raw << " outside [" << min_value << ", " << max_value << "]";
        fail(path + "." + key, os.str());
    }
    return raw;
}

std::string get_string(const json& j, const std::string& path, const std::string& key,
                       const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_string()) fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

uint64_t get_seed(const json& j, const std::string& path, const std::string& key, uint64_t fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer seed");
    return v.get<uint64_t>();
}

DatasetConfig parse_dataset(const json& j) {
    DatasetConfig d;
    check_keys(j, "dataset",
               {"name", "path", "seed", "train_samples", "test_samples", "noise", "samples_per_node",
                "max_test_samples"});
    d.name = get_string(j, "dataset", "name", d.name);
    if (d.name != "synthetic" && d.name != "emnist" && d.name != "fashion_mnist")
        fail("dataset.name", "must be one of synthetic|emnist|fashion_mnist, got " + d.name);
    d.path = get_string(j, "dataset", "path", d.path);
    d.seed = get_seed(j, "dataset", "seed", d.seed);
    d.synthetic_train = get_int(j, "dataset", "train_samples", d.synthetic_train, 1, 1 << 28);
    d.synthetic_test = get_int(j, "dataset", "test_samples", d.synthetic_test, 2, 1 << 28);
    d.synthetic_noise = get_real(j, "dataset", "noise", d.synthetic_noise, 0.0, 1.0);
    d.samples_per_node = get_int(j, "dataset", "samples_per_node", d.samples_per_node, 0, 1 << 28);
    d.max_test_samples = get_int(j, "dataset", "max_test_samples", d.max_test_samples, 0, 1 << 28);
    return d;
}

GraphConfig parse_graph(const json& j) {
    GraphConfig g;
    check_keys(j, "graph",
               {"family", "n", "seed", "edge_count", "edge_prob", "ring_degree", "rewire_prob",
                "attach_count"});
    g.family = graph_family_from_string(get_string(j, "graph", "family", to_string(g.family)));
    g.n = get_int(j, "graph", "n", g.n, 3, 1 << 20);
    g.seed = get_seed(j, "graph", "seed", g.seed);

    auto forbid = [&](const char* key, const char* family) {
        if (j.contains(key))
            fail(std::string("graph.") + key, std::string("not a ") + family + " parameter");
    };
    switch (g.family) {
        case GraphFamily::erdos_renyi: {
            forbid("ring_degree", "erdos_renyi");
            forbid("rewire_prob", "erdos_renyi");
            forbid("attach_count", "erdos_renyi");
            const bool has_m = j.contains("edge_count");
            const bool has_p = j.contains("edge_prob");
            if (has_m && has_p) fail("graph", "edge_count and edge_prob are mutually exclusive");
            if (has_m || has_p) {
                g.explicit_params = true;
                g.params.edge_count = get_int(j, "graph", "edge_count", 0, 1, 1 << 30);
                g.params.edge_prob = get_real(j, "graph", "edge_prob", 0.0, 0.0, 1.0);
            }
            break;
        }
        case GraphFamily::watts_strogatz: {
            forbid("edge_count", "watts_strogatz");
            forbid("edge_prob", "watts_strogatz");
            forbid("attach_count", "watts_strogatz");
            if (j.contains("ring_degree") || j.contains("rewire_prob")) {
                g.explicit_params = true;
                GenParams defaults = scaled_params(g.family, g.n);
                g.params.ring_degree = get_int(j, "graph", "ring_degree", defaults.ring_degree, 2, 1 << 20);
                g.params.rewire_prob = get_real(j, "graph", "rewire_prob", defaults.rewire_prob, 0.0, 1.0);
            }
            break;
        }
        case GraphFamily::barabasi_albert: {
            forbid("edge_count", "barabasi_albert");
            forbid("edge_prob", "barabasi_albert");
            forbid("ring_degree", "barabasi_albert");
            forbid("rewire_prob", "barabasi_albert");
            if (j.contains("attach_count")) {
                g.explicit_params = true;
                g.params.attach_count = get_int(j, "graph", "attach_count", 0, 1, 1 << 20);
            }
            break;
        }
        case GraphFamily::complete:
            forbid("edge_count", "complete");
            forbid("edge_prob", "complete");
            forbid("ring_degree", "complete");
            forbid("rewire_prob", "complete");
            forbid("attach_count", "complete");
            break;
    }
    return g;
}

TriggerSpec parse_trigger(const json& j) {
    TriggerSpec t;
    check_keys(j, "attack.trigger", {"size", "position", "value"});
    t.size = get_int(j, "attack.trigger", "size", t.size, 1, 1 << 12);
    t.position = trigger_position_from_string(
        get_string(j, "attack.trigger", "position", to_string(t.position)));
    t.value = get_real(j, "attack.trigger", "value", t.value, 0.0, 1.0);
    return t;
}

AttackConfig parse_attack(const json& j) {
    AttackConfig a;
    check_keys(j, "attack",
               {"k", "strategy", "pdr", "boost", "adv_epochs", "target_class", "trigger"});
    a.k = get_int(j, "attack", "k", a.k, 0, 1 << 20);
    a.strategy =
        selection_strategy_from_string(get_string(j, "attack", "strategy", to_string(a.strategy)));
    a.pdr = get_real(j, "attack", "pdr", a.pdr, 0.0, 1.0);
    a.boost = get_real(j, "attack", "boost", a.boost, 1e-12, 1e12);
    a.adv_epochs = get_int(j, "attack", "adv_epochs", a.adv_epochs, 1, 1 << 16);
    a.target_class = get_int(j, "attack", "target_class", a.target_class, 0, 1 << 16);
    if (j.contains("trigger")) a.trigger = parse_trigger(j.at("trigger"));
    return a;
}

AggregatorSpec parse_defense(const json& j) {
    AggregatorSpec d;
    check_keys(j, "defense", {"kind", "clip_norm", "trim_p", "peer_norm", "local_norm"});
    d.kind = aggregator_kind_from_string(get_string(j, "defense", "kind", to_string(d.kind)));
    auto forbid = [&](const char* key, const char* kind) {
        if (j.contains(key))
            fail(std::string("defense.") + key, std::string("not a parameter of kind ") + kind);
    };
    switch (d.kind) {
        case AggregatorKind::mean:
            forbid("clip_norm", "mean");
            forbid("trim_p", "mean");
            forbid("peer_norm", "mean");
            forbid("local_norm", "mean");
            break;
        case AggregatorKind::clip:
            forbid("trim_p", "clip");
            forbid("peer_norm", "clip");
            forbid("local_norm", "clip");
            if (!j.contains("clip_norm")) fail("defense.clip_norm", "required for kind clip");
            d.clip_norm = get_real(j, "defense", "clip_norm", 0.0, 1e-12, 1e12);
            break;
        case AggregatorKind::trimmed_mean:
            forbid("clip_norm", "trimmed_mean");
            forbid("peer_norm", "trimmed_mean");
            forbid("local_norm", "trimmed_mean");
            if (!j.contains("trim_p")) fail("defense.trim_p", "required for kind trimmed_mean");
            d.trim_p = get_int(j, "defense", "trim_p", 0, 1, 1 << 16);
            break;
        case AggregatorKind::two_norm_clip:
            forbid("clip_norm", "two_norm_clip");
            forbid("trim_p", "two_norm_clip");
            if (!j.contains("peer_norm")) fail("defense.peer_norm", "required for kind two_norm_clip");
            if (!j.contains("local_norm")) fail("defense.local_norm", "required for kind two_norm_clip");
            d.peer_norm = get_real(j, "defense", "peer_norm", 0.0, 1e-12, 1e12);
            d.local_norm = get_real(j, "defense", "local_norm", 0.0, 1e-12, 1e12);
            break;
    }
    return d;
}

TrainingConfig parse_training(const json& j) {
    TrainingConfig t;
    check_keys(j, "training",
               {"rounds", "learning_rate", "batch_size", "local_epochs", "eval_interval"});
    t.rounds = get_int(j, "training", "rounds", t.rounds, 1, 1 << 24);
    t.learning_rate = get_real(j, "training", "learning_rate", t.learning_rate, 1e-12, 1e6);
    t.batch_size = get_int(j, "training", "batch_size", t.batch_size, 1, 1 << 24);
    t.local_epochs = get_int(j, "training", "local_epochs", t.local_epochs, 1, 1 << 16);
    t.eval_interval = get_int(j, "training", "eval_interval", t.eval_interval, 1, 1 << 24);
    return t;
}

}  // namespace

ExperimentConfig parse_config_json(const json& j) {
    ExperimentConfig cfg;
    check_keys(j, "(root)",
               {"dataset", "graph", "attack", "defense", "faults", "training", "model", "seeds",
                "output_dir"});
    if (j.contains("dataset")) cfg.dataset = parse_dataset(j.at("dataset"));
    if (j.contains("graph")) cfg.graph = parse_graph(j.at("graph"));
    if (j.contains("attack")) cfg.attack = parse_attack(j.at("attack"));
    if (j.contains("defense")) cfg.defense = parse_defense(j.at("defense"));
    if (j.contains("faults")) {
        const json& f = j.at("faults");
        check_keys(f, "faults", {"r", "symmetric"});
        cfg.fault_r = get_int(f, "faults", "r", cfg.fault_r, 0, 1 << 20);
        if (f.contains("symmetric")) {
            if (!f.at("symmetric").is_boolean()) fail("faults.symmetric", "expected a boolean");
            cfg.fault_symmetric = f.at("symmetric").get<bool>();
        }
    }
    if (j.contains("training")) cfg.training = parse_training(j.at("training"));
    if (j.contains("model")) {
        const json& m = j.at("model");
        check_keys(m, "model", {"hidden_dim"});
        cfg.hidden_dim = get_int(m, "model", "hidden_dim", cfg.hidden_dim, 1, 1 << 20);
    }
    if (j.contains("seeds")) {
        const json& s = j.at("seeds");
        if (!s.is_array() || s.empty()) fail("seeds", "expected a non-empty array of integers");
        cfg.seeds.clear();
        for (size_t i = 0; i < s.size(); ++i) {
            if (!s[i].is_number_integer()) fail("seeds[" + std::to_string(i) + "]", "expected an integer");
            cfg.seeds.push_back(s[i].get<uint64_t>());
        }
    }
    cfg.output_dir = get_string(j, "(root)", "output_dir", cfg.output_dir);
    if (cfg.attack.k > cfg.graph.n)
        fail("attack.k", "value " + std::to_string(cfg.attack.k) + " exceeds graph.n = " +
                             std::to_string(cfg.graph.n));
    validate(cfg);
    return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("config: cannot open " + path);
    json j;
    try {
        f >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("config: " + path + ": " + e.what());
    }
    return parse_config_json(j);
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
    json j;
    j["dataset"] = {{"name", cfg.dataset.name},
                    {"path", cfg.dataset.path},
                    {"seed", cfg.dataset.seed},
                    {"train_samples", cfg.dataset.synthetic_train},
                    {"test_samples", cfg.dataset.synthetic_test},
                    {"noise", cfg.dataset.synthetic_noise},
                    {"samples_per_node", cfg.dataset.samples_per_node},
                    {"max_test_samples", cfg.dataset.max_test_samples}};
    json graph = {{"family", to_string(cfg.graph.family)}, {"n", cfg.graph.n}, {"seed", cfg.graph.seed}};
    const GenParams p = effective_gen_params(cfg.graph);
    switch (cfg.graph.family) {
        case GraphFamily::erdos_renyi:
            if (p.edge_count > 0)
                graph["edge_count"] = p.edge_count;
            else
                graph["edge_prob"] = p.edge_prob;
            break;
        case GraphFamily::watts_strogatz:
            graph["ring_degree"] = p.ring_degree;
            graph["rewire_prob"] = p.rewire_prob;
            break;
        case GraphFamily::barabasi_albert:
            graph["attach_count"] = p.attach_count;
            break;
        case GraphFamily::complete:
            break;
    }
    j["graph"] = graph;
    j["attack"] = {{"k", cfg.attack.k},
                   {"strategy", to_string(cfg.attack.strategy)},
                   {"pdr", cfg.attack.pdr},
                   {"boost", cfg.attack.boost},
                   {"adv_epochs", cfg.attack.adv_epochs},
                   {"target_class", cfg.attack.target_class},
                   {"trigger",
                    {{"size", cfg.attack.trigger.size},
                     {"position", to_string(cfg.attack.trigger.position)},
                     {"value", cfg.attack.trigger.value}}}};
    json defense = {{"kind", to_string(cfg.defense.kind)}};
    switch (cfg.defense.kind) {
        case AggregatorKind::mean: break;
        case AggregatorKind::clip: defense["clip_norm"] = cfg.defense.clip_norm; break;
        case AggregatorKind::trimmed_mean: defense["trim_p"] = cfg.defense.trim_p; break;
        case AggregatorKind::two_norm_clip:
            defense["peer_norm"] = cfg.defense.peer_norm;
            defense["local_norm"] = cfg.defense.local_norm;
            break;
    }
    j["defense"] = defense;
    j["faults"] = {{"r", cfg.fault_r}, {"symmetric", cfg.fault_symmetric}};
    j["training"] = {{"rounds", cfg.training.rounds},
                     {"learning_rate", cfg.training.learning_rate},
                     {"batch_size", cfg.training.batch_size},
                     {"local_epochs", cfg.training.local_epochs},
                     {"eval_interval", cfg.training.eval_interval}};
    j["model"] = {{"hidden_dim", cfg.hidden_dim}};
    j["seeds"] = cfg.seeds;
    j["output_dir"] = cfg.output_dir;
    return j;
}

}  // namespace p2pfl
