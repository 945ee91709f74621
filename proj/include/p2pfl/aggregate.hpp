#ifndef P2PFL_AGGREGATE_HPP_
#define P2PFL_AGGREGATE_HPP_

#include <string>
#include <vector>

#include "p2pfl/param_vector.hpp"

namespace p2pfl {

enum class AggregatorKind { mean, clip, trimmed_mean, two_norm_clip };

std::string to_string(AggregatorKind k);
AggregatorKind aggregator_kind_from_string(const std::string& s);

struct AggregatorSpec {
    AggregatorKind kind = AggregatorKind::mean;
    double clip_norm = 0.0;   // clip
    int trim_p = 0;           // trimmed_mean
    double peer_norm = 0.0;   // two_norm_clip
    double local_norm = 0.0;  // two_norm_clip
};

void validate(const AggregatorSpec& spec);

// u / max(1, ||u|| / C): output norm <= C, direction preserved.
ParamVector clip_update(const ParamVector& u, double clip_norm);

// Arithmetic mean over {own} + peers, summed own-first then peer list order.
// Callers pass peers sorted by node id so results are order-stable.
ParamVector aggregate_mean(const ParamVector& own, const std::vector<const ParamVector*>& peers);

// Mean over the clipped inputs; the node's own update is clipped with the
// same bound.
ParamVector aggregate_clip(const ParamVector& own, const std::vector<const ParamVector*>& peers,
                           double clip_norm);

// Coordinate-wise trimmed mean over {own} + peers: the p largest and p
// smallest values are dropped, the rest averaged. Requires more than 2p
// updates.
ParamVector aggregate_trimmed_mean(const ParamVector& own,
                                   const std::vector<const ParamVector*>& peers, int trim_p);

// Mean over {clip(own, local_norm)} + {clip(peer, peer_norm)}: separate
// bounds for the locally trained update and the peers' updates.
ParamVector aggregate_two_norm(const ParamVector& own, const std::vector<const ParamVector*>& peers,
                               double peer_norm, double local_norm);

// Dispatch on spec.kind.
ParamVector aggregate(const AggregatorSpec& spec, const ParamVector& own,
                      const std::vector<const ParamVector*>& peers);

}  // namespace p2pfl

#endif  // P2PFL_AGGREGATE_HPP_
