#include "p2pfl/protocol.hpp"

#include <algorithm>
#include <stdexcept>

#include "p2pfl/parallel.hpp"
#include "p2pfl/rng.hpp"

namespace p2pfl {

std::string to_string(Role r) {
    return r == Role::benign ? "benign" : "malicious";
}

void apply_faults(const Topology& t, std::vector<NodeState>& states, const FaultPlan& plan) {
    if (plan.r < 0) throw std::invalid_argument("apply_faults: r must be non-negative");
    if (plan.r == 0) return;
    std::vector<Role> roles(states.size());
    for (const auto& s : states) roles[s.id] = s.role;
    std::vector<std::vector<int>> dropped(states.size());
    for (auto& s : states) {
        if (s.role != Role::benign) continue;
        std::vector<int> benign_nbrs;
        for (int v : s.live_peers)
            if (roles[v] == Role::benign) benign_nbrs.push_back(v);
        const int r_eff = std::min<int>(plan.r, static_cast<int>(benign_nbrs.size()));
        if (r_eff == 0) continue;
        Rng rng(derive_seed(plan.seed, 0xfa01ULL, static_cast<uint64_t>(s.id)));
        for (int pick : rng.sample_without_replacement(static_cast<int>(benign_nbrs.size()), r_eff))
            dropped[s.id].push_back(benign_nbrs[pick]);
    }
    for (auto& s : states) {
        auto remove_peer = [&](int peer) {
            s.live_peers.erase(std::remove(s.live_peers.begin(), s.live_peers.end(), peer),
                               s.live_peers.end());
        };
        for (int v : dropped[s.id]) remove_peer(v);
        if (plan.symmetric)
            for (size_t u = 0; u < dropped.size(); ++u)
                for (int v : dropped[u])
                    if (v == s.id) remove_peer(static_cast<int>(u));
    }
}

std::vector<ParamVector> run_round(const ModelSpec& spec, std::vector<NodeState>& states,
                                   const AggregatorSpec& aggregator, int round_idx, int threads) {
    validate(aggregator);
    const int n = static_cast<int>(states.size());
    if (n == 0) throw std::invalid_argument("run_round: no nodes");
    const int dim = param_count(spec);
    for (int i = 0; i < n; ++i) {
        if (states[i].id != i) throw std::invalid_argument("run_round: states must be indexed by node id");
        if (states[i].model.dim() != dim) throw std::invalid_argument("run_round: model dimension mismatch");
    }

    // Phase 1: local updates against round-start models.
    std::vector<ParamVector> deltas(n);
    parallel_for(n, threads, [&](int i) {
        NodeState& s = states[i];
        TrainConfig cfg = s.train_cfg;
        cfg.seed = derive_seed(s.train_cfg.seed, 0x70fdULL, static_cast<uint64_t>(round_idx));
        deltas[i] = local_update(spec, s.model, s.shard.train, cfg);
        if (s.boost != 1.0) scale_in_place(deltas[i], s.boost);
    });

    // Phase 2: exchange and aggregate. All reads are of round-start deltas.
    parallel_for(n, threads, [&](int i) {
        NodeState& s = states[i];
        std::vector<const ParamVector*> peers;
        peers.reserve(s.live_peers.size());
        for (int v : s.live_peers) peers.push_back(&deltas[v]);
        ParamVector agg;
        if (aggregator.kind == AggregatorKind::trimmed_mean &&
            static_cast<int>(peers.size()) + 1 <= 2 * aggregator.trim_p) {
            agg = aggregate_mean(deltas[i], peers);  // pool too small to trim
        } else {
            agg = aggregate(aggregator, deltas[i], peers);
        }
        add_in_place(s.model, agg);
    });
    return deltas;
}

}  // namespace p2pfl
