#ifndef P2PFL_PROTOCOL_HPP_
#define P2PFL_PROTOCOL_HPP_

#include <cstdint>
#include <vector>

#include "p2pfl/aggregate.hpp"
#include "p2pfl/dataset.hpp"
#include "p2pfl/model.hpp"
#include "p2pfl/param_vector.hpp"
#include "p2pfl/topology.hpp"

namespace p2pfl {

enum class Role { benign, malicious };

std::string to_string(Role r);

struct NodeState {
    int id = -1;
    Role role = Role::benign;
    ParamVector model;
    Shard shard;                  // poisoned when malicious
    std::vector<int> live_peers;  // sorted ids this node still receives from
    TrainConfig train_cfg;        // cfg.seed is this node's base seed stream
    double boost = 1.0;           // update boosting factor; 1 for benign
};

// Crash-fault plan: each benign node loses r of its benign neighbors from its
// live peer set (clamped to availability). Malicious neighbors are never
// removed and malicious nodes keep their full peer sets. Removal is
// per-endpoint unless symmetric is set.
struct FaultPlan {
    int r = 0;
    uint64_t seed = 0;
    bool symmetric = false;
};

void apply_faults(const Topology& t, std::vector<NodeState>& states, const FaultPlan& plan);

// One synchronous protocol round:
//  1. every node computes its local update from its round-start model
//     (malicious nodes train on the poisoned shard and boost the delta);
//  2. deltas travel along live-peer edges;
//  3. every node aggregates (own delta first, then peers ascending by id)
//     and adds the aggregate to its model.
// Returns the per-node sent updates (post-boost). A node with no live peers
// aggregates only its own delta. If the configured aggregator needs more
// updates than a node received (trimmed mean with a small pool), that node
// degrades to plain mean for the round.
std::vector<ParamVector> run_round(const ModelSpec& spec, std::vector<NodeState>& states,
                                   const AggregatorSpec& aggregator, int round_idx, int threads = 1);

}  // namespace p2pfl

#endif  // P2PFL_PROTOCOL_HPP_
