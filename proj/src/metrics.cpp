#include "p2pfl/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "p2pfl/parallel.hpp"

namespace p2pfl {

RoundReport score_round(const ModelSpec& spec, const std::vector<ParamVector>& models,
                        const EvalSplit& split, int target_class, const std::vector<int>& hops,
                        int threads) {
    if (models.empty()) throw std::invalid_argument("score_round: no models");
    if (split.clean.size() == 0 || split.backdoored.size() == 0)
        throw std::invalid_argument("score_round: empty evaluation split");
    if (hops.size() != models.size())
        throw std::invalid_argument("score_round: hop profile size mismatch");

    const int q = static_cast<int>(models.size());
    RoundReport report;
    report.per_node.resize(q);
    parallel_for(q, threads, [&](int i) {
        EvalResult clean = evaluate(spec, models[i], split.clean, target_class);
        EvalResult back = evaluate(spec, models[i], split.backdoored, target_class);
        report.per_node[i] = NodeScore{clean.accuracy, back.target_rate, hops[i]};
    });

    double acc_sum = 0.0, att_sum = 0.0;
    for (int i = 0; i < q; ++i) {
        acc_sum += report.per_node[i].clean_acc;
        att_sum += report.per_node[i].attack_success;
    }
    report.mean_clean_acc = acc_sum / q;
    report.mean_attack_success = att_sum / q;

    std::map<int, std::pair<double, double>> sums;
    std::map<int, int> counts;
    for (int i = 0; i < q; ++i) {
        const int h = report.per_node[i].hop;
        sums[h].first += report.per_node[i].clean_acc;
        sums[h].second += report.per_node[i].attack_success;
        counts[h] += 1;
    }
    for (const auto& [h, s] : sums) {
        const int c = counts[h];
        report.per_hop[h] = HopGroup{s.first / c, s.second / c, c};
    }
    return report;
}

double sample_std(const std::vector<double>& xs) {
    const int n = static_cast<int>(xs.size());
    if (n < 2) return 0.0;
    double m = 0.0;
    for (double x : xs) m += x;
    m /= n;
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / (n - 1));
}

std::vector<AggregatePoint> aggregate_trials(const std::vector<TrialSeries>& trials) {
    if (trials.empty()) throw std::invalid_argument("aggregate_trials: no trials");
    const auto& grid = trials.front().rounds;
    for (const auto& t : trials) {
        if (t.rounds.size() != grid.size())
            throw std::invalid_argument("aggregate_trials: mismatched round grids");
        for (size_t r = 0; r < grid.size(); ++r)
            if (t.rounds[r].round != grid[r].round)
                throw std::invalid_argument("aggregate_trials: mismatched round grids");
    }

    std::vector<AggregatePoint> out;
    out.reserve(grid.size());
    for (size_t r = 0; r < grid.size(); ++r) {
        AggregatePoint pt;
        pt.round = grid[r].round;
        std::vector<double> accs, atts;
        for (const auto& t : trials) {
            accs.push_back(t.rounds[r].mean_clean_acc);
            atts.push_back(t.rounds[r].mean_attack_success);
        }
        double asum = 0.0, tsum = 0.0;
        for (double a : accs) asum += a;
        for (double a : atts) tsum += a;
        pt.mean_clean_acc = asum / accs.size();
        pt.mean_attack_success = tsum / atts.size();
        pt.std_clean_acc = sample_std(accs);
        pt.std_attack_success = sample_std(atts);

        // Hops may differ per seed (random adversary placement); aggregate
        // over seeds in which each hop occurs.
        std::map<int, std::vector<double>> hop_acc, hop_att, hop_cnt;
        for (const auto& t : trials) {
            for (const auto& [h, g] : t.rounds[r].per_hop) {
                hop_acc[h].push_back(g.mean_clean_acc);
                hop_att[h].push_back(g.mean_attack_success);
                hop_cnt[h].push_back(static_cast<double>(g.node_count));
            }
        }
        for (const auto& [h, accs_h] : hop_acc) {
            HopAggregate agg;
            double s = 0.0;
            for (double a : accs_h) s += a;
            agg.mean_clean_acc = s / accs_h.size();
            agg.std_clean_acc = sample_std(accs_h);
            s = 0.0;
            for (double a : hop_att[h]) s += a;
            agg.mean_attack_success = s / hop_att[h].size();
            agg.std_attack_success = sample_std(hop_att[h]);
            s = 0.0;
            for (double c : hop_cnt[h]) s += c;
            agg.mean_node_count = s / hop_cnt[h].size();
            agg.trials = static_cast<int>(accs_h.size());
            pt.per_hop[h] = agg;
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace p2pfl
