// Independent brute-force oracles used by the test suites. These deliberately
// use different algorithms and enumeration orders than the library so they
// stay meaningful as cross-checks.
#ifndef P2PFL_TESTS_ORACLES_HPP_
#define P2PFL_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "p2pfl/param_vector.hpp"
#include "p2pfl/topology.hpp"

namespace oracles {

// Dense adjacency matrix from a topology.
inline std::vector<std::vector<int>> dense_adj(const p2pfl::Topology& t) {
    std::vector<std::vector<int>> a(t.n(), std::vector<int>(t.n(), 0));
    for (const auto& [u, v] : t.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

// All-pairs shortest paths via Floyd-Warshall (the library uses BFS).
inline std::vector<std::vector<int>> floyd_warshall(const p2pfl::Topology& t) {
    const int n = t.n();
    const int inf = 1 << 20;
    auto adj = dense_adj(t);
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (adj[i][j]) d[i][j] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// Triangle count through v by scanning the full adjacency matrix.
inline long long triangles_through(const p2pfl::Topology& t, int v) {
    auto adj = dense_adj(t);
    long long count = 0;
    for (int i = 0; i < t.n(); ++i)
        for (int j = i + 1; j < t.n(); ++j)
            if (adj[v][i] && adj[v][j] && adj[i][j]) ++count;
    return count;
}

inline double clustering_oracle(const p2pfl::Topology& t, int v) {
    const int d = t.degree(v);
    if (d < 2) return 0.0;
    return 2.0 * static_cast<double>(triangles_through(t, v)) /
           (static_cast<double>(d) * (d - 1));
}

// ENS via the edge list: ties are edges with both endpoints adjacent to v.
inline double ens_oracle(const p2pfl::Topology& t, int v) {
    auto adj = dense_adj(t);
    const int n_ego = t.degree(v);
    if (n_ego == 0) return 0.0;
    long long ties = 0;
    for (const auto& [a, b] : t.edges())
        if (adj[v][a] && adj[v][b]) ++ties;
    return static_cast<double>(n_ego) - 2.0 * static_cast<double>(ties) / n_ego;
}

// Dense power-iteration PageRank with a fixed iteration count.
inline std::vector<double> pagerank_oracle(const p2pfl::Topology& t, double damping, int iters) {
    const int n = t.n();
    auto adj = dense_adj(t);
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) deg[i] += adj[i][j];
    std::vector<double> pr(n, 1.0 / n), next(n);
    for (int it = 0; it < iters; ++it) {
        for (int v = 0; v < n; ++v) {
            double acc = 0.0;
            for (int u = 0; u < n; ++u)
                if (adj[u][v]) acc += pr[u] / deg[u];
            next[v] = (1.0 - damping) / n + damping * acc;
        }
        pr = next;
    }
    return pr;
}

// Min over single-source BFS runs, one per adversary.
inline std::vector<int> hop_oracle(const p2pfl::Topology& t, const std::vector<int>& adversaries) {
    auto d = floyd_warshall(t);
    std::vector<int> out(t.n(), 1 << 20);
    for (int v = 0; v < t.n(); ++v)
        for (int a : adversaries) out[v] = std::min(out[v], d[a][v]);
    return out;
}

// Random connected graph for property tests: a random spanning tree plus
// random extra edges, built with std::mt19937 (independent of the library
// generators).
inline p2pfl::Topology random_connected_graph(int n, double extra_edge_prob, unsigned seed) {
    std::mt19937 gen(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), gen);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        int parent = order[pick(gen)];
        edges.emplace_back(std::min(order[i], parent), std::max(order[i], parent));
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool present = false;
            for (auto& e : edges)
                if (e.first == u && e.second == v) present = true;
            if (!present && coin(gen) < extra_edge_prob) edges.emplace_back(u, v);
        }
    return p2pfl::Topology(n, edges, p2pfl::GraphFamily::erdos_renyi, {}, seed);
}

// Per-coordinate sort-and-slice trimmed mean (ascending sum order, matching
// the contract exactly).
inline p2pfl::ParamVector trimmed_mean_oracle(const std::vector<p2pfl::ParamVector>& updates,
                                              int p) {
    const int dim = updates.front().dim();
    p2pfl::ParamVector out(dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        std::vector<double> vals;
        for (const auto& u : updates) vals.push_back(u.values[i]);
        std::sort(vals.begin(), vals.end());
        double acc = 0.0;
        int kept = 0;
        for (size_t j = p; j + p < vals.size(); ++j) {
            acc += vals[j];
            ++kept;
        }
        out.values[i] = acc / kept;
    }
    return out;
}

}  // namespace oracles

#endif  // P2PFL_TESTS_ORACLES_HPP_
