#include "p2pfl/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace p2pfl {

namespace fs = std::filesystem;

std::string fmt_g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void write_raw_csv(const std::string& path, const TrialSeries& series,
                   const std::vector<Role>& roles) {
    std::ofstream f(path, std::ios::binary);  // binary: byte-stable newlines
    if (!f) throw std::runtime_error("write_raw_csv: cannot open " + path);
    f << "run_seed,round,node_id,role,hop,clean_acc,attack_success\n";
    for (const auto& report : series.rounds) {
        for (size_t i = 0; i < report.per_node.size(); ++i) {
            const NodeScore& s = report.per_node[i];
            f << series.seed << ',' << report.round << ',' << i << ',' << to_string(roles[i]) << ','
              << s.hop << ',' << fmt_g6(s.clean_acc) << ',' << fmt_g6(s.attack_success) << "\n";
        }
    }
    if (!f) throw std::runtime_error("write_raw_csv: write failed for " + path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) out.push_back(field);
    return out;
}

}  // namespace

std::vector<RawRow> read_raw_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("read_raw_csv: cannot open " + path);
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("read_raw_csv: empty file " + path);
    if (line != "run_seed,round,node_id,role,hop,clean_acc,attack_success")
        throw std::runtime_error("read_raw_csv: unexpected header in " + path);
    std::vector<RawRow> rows;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 7) throw std::runtime_error("read_raw_csv: malformed row in " + path);
        RawRow r;
        r.run_seed = std::stoull(fields[0]);
        r.round = std::stoi(fields[1]);
        r.node_id = std::stoi(fields[2]);
        r.role = fields[3];
        r.hop = std::stoi(fields[4]);
        r.clean_acc = std::stod(fields[5]);
        r.attack_success = std::stod(fields[6]);
        rows.push_back(std::move(r));
    }
    return rows;
}

TrialSeries series_from_rows(const std::vector<RawRow>& rows) {
    if (rows.empty()) throw std::runtime_error("series_from_rows: no rows");
    TrialSeries series;
    series.seed = rows.front().run_seed;
    std::map<int, std::vector<const RawRow*>> by_round;
    for (const auto& r : rows) by_round[r.round].push_back(&r);
    for (const auto& [round, round_rows] : by_round) {
        RoundReport report;
        report.round = round;
        int max_node = 0;
        for (const RawRow* r : round_rows) max_node = std::max(max_node, r->node_id);
        report.per_node.resize(max_node + 1);
        double acc = 0.0, att = 0.0;
        std::map<int, HopGroup> hops;
        for (const RawRow* r : round_rows) {
            report.per_node[r->node_id] = NodeScore{r->clean_acc, r->attack_success, r->hop};
            acc += r->clean_acc;
            att += r->attack_success;
            HopGroup& g = hops[r->hop];
            g.mean_clean_acc += r->clean_acc;
            g.mean_attack_success += r->attack_success;
            g.node_count += 1;
        }
        report.mean_clean_acc = acc / round_rows.size();
        report.mean_attack_success = att / round_rows.size();
        for (auto& [h, g] : hops) {
            g.mean_clean_acc /= g.node_count;
            g.mean_attack_success /= g.node_count;
        }
        report.per_hop = std::move(hops);
        series.rounds.push_back(std::move(report));
    }
    return series;
}

std::string render_aggregate_csv(const std::vector<AggregatePoint>& points, int num_nodes) {
    std::ostringstream os;
    os << "round,group,node_count,mean_clean_acc,std_clean_acc,mean_attack_success,std_attack_success\n";
    for (const auto& pt : points) {
        os << pt.round << ",global," << num_nodes << ',' << fmt_g6(pt.mean_clean_acc) << ','
           << fmt_g6(pt.std_clean_acc) << ',' << fmt_g6(pt.mean_attack_success) << ','
           << fmt_g6(pt.std_attack_success) << "\n";
        for (const auto& [h, g] : pt.per_hop) {
            os << pt.round << ",hop_" << h << ',' << fmt_g6(g.mean_node_count) << ','
               << fmt_g6(g.mean_clean_acc) << ',' << fmt_g6(g.std_clean_acc) << ','
               << fmt_g6(g.mean_attack_success) << ',' << fmt_g6(g.std_attack_success) << "\n";
        }
    }
    return os.str();
}

void write_aggregate_csv(const std::string& path, const std::vector<AggregatePoint>& points,
                         int num_nodes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_aggregate_csv: cannot open " + path);
    f << render_aggregate_csv(points, num_nodes);
    if (!f) throw std::runtime_error("write_aggregate_csv: write failed for " + path);
}

void report(const std::string& run_dir, std::ostream& os) {
    const fs::path dir(run_dir);
    if (!fs::exists(dir)) throw std::runtime_error("report: no such run directory " + run_dir);
    const fs::path agg_path = dir / "aggregate.csv";
    if (!fs::exists(agg_path)) throw std::runtime_error("aggregate missing; re-run aggregation");

    // Aggregate rows, keyed by round then group label.
    std::ifstream f(agg_path);
    std::string line;
    std::getline(f, line);  // header
    struct AggRow {
        int round;
        std::string group;
        std::string node_count, mean_acc, std_acc, mean_att, std_att;
    };
    std::vector<AggRow> rows;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 7) throw std::runtime_error("report: malformed aggregate.csv");
        rows.push_back({std::stoi(fields[0]), fields[1], fields[2], fields[3], fields[4], fields[5],
                        fields[6]});
    }
    if (rows.empty()) throw std::runtime_error("report: aggregate.csv has no rows");
    const int final_round = rows.back().round;

    if (fs::exists(dir / "manifest.json")) {
        std::ifstream mf(dir / "manifest.json");
        nlohmann::json manifest;
        mf >> manifest;
        os << "run       : " << run_dir << "\n";
        if (manifest.contains("config")) {
            const auto& c = manifest["config"];
            os << "dataset   : " << c["dataset"]["name"].get<std::string>() << "\n"
               << "graph     : " << c["graph"]["family"].get<std::string>() << " n="
               << c["graph"]["n"].get<int>() << "\n"
               << "attack    : k=" << c["attack"]["k"].get<int>() << " strategy="
               << c["attack"]["strategy"].get<std::string>() << "\n"
               << "defense   : " << c["defense"]["kind"].get<std::string>() << "\n";
        }
    }

    os << "\nper-round global means:\n";
    os << "  round  clean_acc (std)      attack_success (std)\n";
    for (const auto& r : rows)
        if (r.group == "global")
            os << "  " << std::setw(5) << r.round << "  " << std::setw(9) << r.mean_acc << " ("
               << r.std_acc << ")  " << std::setw(14) << r.mean_att << " (" << r.std_att << ")\n";

    os << "\nfinal round " << final_round << " per-hop breakdown:\n";
    os << "  group    nodes   clean_acc  attack_success\n";
    for (const auto& r : rows)
        if (r.round == final_round)
            os << "  " << std::setw(7) << r.group << "  " << std::setw(6) << r.node_count << "  "
               << std::setw(9) << r.mean_acc << "  " << std::setw(14) << r.mean_att << "\n";

    // Per-seed spread from the raw files.
    std::vector<fs::path> raw_files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("raw_seed", 0) == 0 && name.size() > 4 &&
            name.substr(name.size() - 4) == ".csv")
            raw_files.push_back(entry.path());
    }
    std::sort(raw_files.begin(), raw_files.end());
    if (!raw_files.empty()) {
        os << "\nper-seed final round:\n";
        os << "  seed   clean_acc  attack_success\n";
        for (const auto& p : raw_files) {
            TrialSeries s = series_from_rows(read_raw_csv(p.string()));
            const RoundReport& last = s.rounds.back();
            os << "  " << std::setw(4) << s.seed << "  " << std::setw(9)
               << fmt_g6(last.mean_clean_acc) << "  " << std::setw(14)
               << fmt_g6(last.mean_attack_success) << "\n";
        }
    }
}

}  // namespace p2pfl
