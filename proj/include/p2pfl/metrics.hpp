#ifndef P2PFL_METRICS_HPP_
#define P2PFL_METRICS_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "p2pfl/backdoor.hpp"
#include "p2pfl/model.hpp"
#include "p2pfl/param_vector.hpp"

namespace p2pfl {

struct NodeScore {
    double clean_acc = 0.0;
    double attack_success = 0.0;
    int hop = -1;  // hop distance to nearest adversary; -1 when there is none
};

struct HopGroup {
    double mean_clean_acc = 0.0;
    double mean_attack_success = 0.0;
    int node_count = 0;
};

// Per-round scores: per-node clean accuracy and attack success, their global
// means over all clients (benign and malicious), and per-hop-distance group
// means (hop 0 = the adversaries themselves, reported as their own row).
struct RoundReport {
    int round = 0;
    std::vector<NodeScore> per_node;  // indexed by node id
    double mean_clean_acc = 0.0;
    double mean_attack_success = 0.0;
    std::map<int, HopGroup> per_hop;
};

// Evaluates every model on the clean and backdoored halves. hops[i] gives the
// hop distance of node i (-1 allowed when no adversaries exist). Node
// evaluations may run in parallel; reductions are in node-id order.
RoundReport score_round(const ModelSpec& spec, const std::vector<ParamVector>& models,
                        const EvalSplit& split, int target_class, const std::vector<int>& hops,
                        int threads = 1);

// One experiment trial: the per-round report series for a single seed.
struct TrialSeries {
    uint64_t seed = 0;
    std::vector<RoundReport> rounds;
};

struct HopAggregate {
    double mean_clean_acc = 0.0;
    double std_clean_acc = 0.0;
    double mean_attack_success = 0.0;
    double std_attack_success = 0.0;
    double mean_node_count = 0.0;
    int trials = 0;  // number of seeds in which the hop occurs
};

// Cross-seed aggregation at one evaluation round: pointwise mean and sample
// standard deviation of the per-seed global means, plus per-hop breakdown.
struct AggregatePoint {
    int round = 0;
    double mean_clean_acc = 0.0;
    double std_clean_acc = 0.0;
    double mean_attack_success = 0.0;
    double std_attack_success = 0.0;
    std::map<int, HopAggregate> per_hop;
};

// Requires every trial to share the same evaluation round grid.
std::vector<AggregatePoint> aggregate_trials(const std::vector<TrialSeries>& trials);

double sample_std(const std::vector<double>& xs);

}  // namespace p2pfl

#endif  // P2PFL_METRICS_HPP_
