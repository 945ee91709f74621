#ifndef P2PFL_CSV_HPP_
#define P2PFL_CSV_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "p2pfl/metrics.hpp"
#include "p2pfl/protocol.hpp"

namespace p2pfl {

// Numeric CSV formatting: 6 significant digits, decimal point, bit-stable.
std::string fmt_g6(double v);

// Raw per-round per-node rows:
//   run_seed,round,node_id,role,hop,clean_acc,attack_success
void write_raw_csv(const std::string& path, const TrialSeries& series,
                   const std::vector<Role>& roles);

struct RawRow {
    uint64_t run_seed = 0;
    int round = 0;
    int node_id = 0;
    std::string role;
    int hop = -1;
    double clean_acc = 0.0;
    double attack_success = 0.0;
};
std::vector<RawRow> read_raw_csv(const std::string& path);

// Rebuilds a trial series (means and per-hop groups) from raw rows alone;
// every aggregate value is reproducible this way.
TrialSeries series_from_rows(const std::vector<RawRow>& rows);

// Aggregate rows:
//   round,group,node_count,mean_clean_acc,std_clean_acc,mean_attack_success,std_attack_success
// with group = "global" or "hop_<h>".
std::string render_aggregate_csv(const std::vector<AggregatePoint>& points, int num_nodes);
void write_aggregate_csv(const std::string& path, const std::vector<AggregatePoint>& points,
                         int num_nodes);

// Final-round summary table from a run directory (manifest + aggregate + raw
// files). Throws "aggregate missing; re-run aggregation" when aggregate.csv
// is absent.
void report(const std::string& run_dir, std::ostream& os);

}  // namespace p2pfl

#endif  // P2PFL_CSV_HPP_
