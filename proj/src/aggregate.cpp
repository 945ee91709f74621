#include "p2pfl/aggregate.hpp"

#include <algorithm>
#include <stdexcept>

namespace p2pfl {

std::string to_string(AggregatorKind k) {
    switch (k) {
        case AggregatorKind::mean: return "mean";
        case AggregatorKind::clip: return "clip";
        case AggregatorKind::trimmed_mean: return "trimmed_mean";
        case AggregatorKind::two_norm_clip: return "two_norm_clip";
    }
    throw std::logic_error("unknown AggregatorKind");
}

AggregatorKind aggregator_kind_from_string(const std::string& s) {
    if (s == "mean") return AggregatorKind::mean;
    if (s == "clip") return AggregatorKind::clip;
    if (s == "trimmed_mean") return AggregatorKind::trimmed_mean;
    if (s == "two_norm_clip") return AggregatorKind::two_norm_clip;
    throw std::invalid_argument("unknown aggregator kind: " + s);
}

void validate(const AggregatorSpec& spec) {
    switch (spec.kind) {
        case AggregatorKind::mean:
            break;
        case AggregatorKind::clip:
            if (spec.clip_norm <= 0.0) throw std::invalid_argument("clip aggregator: clip_norm must be positive");
            break;
        case AggregatorKind::trimmed_mean:
            if (spec.trim_p < 1) throw std::invalid_argument("trimmed_mean aggregator: trim_p must be positive");
            break;
        case AggregatorKind::two_norm_clip:
            if (spec.peer_norm <= 0.0 || spec.local_norm <= 0.0)
                throw std::invalid_argument("two_norm_clip aggregator: both norms must be positive");
            break;
    }
}

namespace {

void check_dims(const ParamVector& own, const std::vector<const ParamVector*>& peers) {
    for (const ParamVector* p : peers)
        if (p->dim() != own.dim())
            throw std::invalid_argument("aggregate: peer update dimension mismatch");
}

}  // namespace

ParamVector clip_update(const ParamVector& u, double clip_norm) {
    if (clip_norm <= 0.0) throw std::invalid_argument("clip_update: clip norm must be positive");
    const double norm = l2_norm(u);
    if (norm <= clip_norm) return u;
    return scale(u, clip_norm / norm);
}

ParamVector aggregate_mean(const ParamVector& own, const std::vector<const ParamVector*>& peers) {
    check_dims(own, peers);
    ParamVector acc = own;
    for (const ParamVector* p : peers) add_in_place(acc, *p);
    scale_in_place(acc, 1.0 / (1.0 + static_cast<double>(peers.size())));
    return acc;
}

ParamVector aggregate_clip(const ParamVector& own, const std::vector<const ParamVector*>& peers,
                           double clip_norm) {
    check_dims(own, peers);
    ParamVector acc = clip_update(own, clip_norm);
    for (const ParamVector* p : peers) add_in_place(acc, clip_update(*p, clip_norm));
    scale_in_place(acc, 1.0 / (1.0 + static_cast<double>(peers.size())));
    return acc;
}

ParamVector aggregate_trimmed_mean(const ParamVector& own,
                                   const std::vector<const ParamVector*>& peers, int trim_p) {
    check_dims(own, peers);
    if (trim_p < 1) throw std::invalid_argument("aggregate_trimmed_mean: trim_p must be positive");
    const int total = 1 + static_cast<int>(peers.size());
    if (total <= 2 * trim_p)
        throw std::invalid_argument("aggregate_trimmed_mean: need more than 2p updates, got " +
                                    std::to_string(total));
    const int dim = own.dim();
    ParamVector out(dim, 0.0);
    std::vector<double> column(total);
    const double inv = 1.0 / static_cast<double>(total - 2 * trim_p);
    for (int i = 0; i < dim; ++i) {
        column[0] = own.values[i];
        for (int j = 0; j < static_cast<int>(peers.size()); ++j) column[j + 1] = peers[j]->values[i];
        std::sort(column.begin(), column.end());
        double acc = 0.0;
        for (int j = trim_p; j < total - trim_p; ++j) acc += column[j];
        out.values[i] = acc * inv;
    }
    return out;
}

ParamVector aggregate_two_norm(const ParamVector& own, const std::vector<const ParamVector*>& peers,
                               double peer_norm, double local_norm) {
    check_dims(own, peers);
    ParamVector acc = clip_update(own, local_norm);
    for (const ParamVector* p : peers) add_in_place(acc, clip_update(*p, peer_norm));
    scale_in_place(acc, 1.0 / (1.0 + static_cast<double>(peers.size())));
    return acc;
}

ParamVector aggregate(const AggregatorSpec& spec, const ParamVector& own,
                      const std::vector<const ParamVector*>& peers) {
    validate(spec);
    switch (spec.kind) {
        case AggregatorKind::mean: return aggregate_mean(own, peers);
        case AggregatorKind::clip: return aggregate_clip(own, peers, spec.clip_norm);
        case AggregatorKind::trimmed_mean: return aggregate_trimmed_mean(own, peers, spec.trim_p);
        case AggregatorKind::two_norm_clip:
            return aggregate_two_norm(own, peers, spec.peer_norm, spec.local_norm);
    }
    throw std::logic_error("unknown AggregatorKind");
}

}  // namespace p2pfl
