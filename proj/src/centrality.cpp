#include "p2pfl/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "p2pfl/rng.hpp"

namespace p2pfl {

std::string to_string(SelectionStrategy s) {
    switch (s) {
        case SelectionStrategy::random: return "random";
        case SelectionStrategy::max_degree: return "max_degree";
        case SelectionStrategy::max_ens: return "max_ens";
        case SelectionStrategy::max_pagerank: return "max_pagerank";
        case SelectionStrategy::max_clustering: return "max_clustering";
    }
    throw std::logic_error("unknown SelectionStrategy");
}

SelectionStrategy selection_strategy_from_string(const std::string& s) {
    if (s == "random") return SelectionStrategy::random;
    if (s == "max_degree") return SelectionStrategy::max_degree;
    if (s == "max_ens") return SelectionStrategy::max_ens;
    if (s == "max_pagerank") return SelectionStrategy::max_pagerank;
    if (s == "max_clustering") return SelectionStrategy::max_clustering;
    throw std::invalid_argument("unknown selection strategy: " + s);
}

double ens_score(const Topology& t, int v) {
    const auto& adj = t.neighbors(v);  // validates v
    const int n_ego = static_cast<int>(adj.size());
    if (n_ego == 0) return 0.0;
    long long ties = 0;
    for (int i = 0; i < n_ego; ++i)
        for (int j = i + 1; j < n_ego; ++j)
            if (t.has_edge(adj[i], adj[j])) ++ties;
    return static_cast<double>(n_ego) - 2.0 * static_cast<double>(ties) / static_cast<double>(n_ego);
}

std::vector<double> pagerank(const Topology& t, double damping, double tol, int max_iter) {
    if (!(damping > 0.0 && damping < 1.0)) throw std::invalid_argument("pagerank: damping must be in (0,1)");
    if (!t.connected()) throw std::invalid_argument("pagerank: graph must be connected");
    const int n = t.n();
    std::vector<double> pr(n, 1.0 / n), next(n, 0.0);
    const double teleport = (1.0 - damping) / n;
    for (int iter = 0; iter < max_iter; ++iter) {
        for (int v = 0; v < n; ++v) {
            double acc = 0.0;
            for (int u : t.neighbors(v)) acc += pr[u] / t.degree(u);
            next[v] = teleport + damping * acc;
        }
        double l1 = 0.0;
        for (int v = 0; v < n; ++v) l1 += std::abs(next[v] - pr[v]);
        pr.swap(next);
        if (l1 < tol) return pr;
    }
    throw std::runtime_error("pagerank: no convergence within " + std::to_string(max_iter) + " iterations");
}

double clustering_coefficient(const Topology& t, int v) {
    const auto& adj = t.neighbors(v);  // validates v
    const int d = static_cast<int>(adj.size());
    if (d < 2) return 0.0;
    long long tri = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (t.has_edge(adj[i], adj[j])) ++tri;
    return 2.0 * static_cast<double>(tri) / (static_cast<double>(d) * (d - 1));
}

std::vector<double> strategy_scores(const Topology& t, SelectionStrategy s) {
    const int n = t.n();
    std::vector<double> scores(n);
    switch (s) {
        case SelectionStrategy::max_degree:
            for (int v = 0; v < n; ++v) scores[v] = static_cast<double>(t.degree(v));
            break;
        case SelectionStrategy::max_ens:
            for (int v = 0; v < n; ++v) scores[v] = ens_score(t, v);
            break;
        case SelectionStrategy::max_pagerank:
            scores = pagerank(t);
            break;
        case SelectionStrategy::max_clustering:
            for (int v = 0; v < n; ++v) scores[v] = clustering_coefficient(t, v);
            break;
        case SelectionStrategy::random:
            throw std::invalid_argument("strategy_scores: random strategy has no score function");
    }
    return scores;
}

std::vector<int> top_k_by_score(const std::vector<double>& scores, int k) {
    const int n = static_cast<int>(scores.size());
    if (k > n) throw std::invalid_argument("top_k_by_score: k exceeds node count");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;  // lowest id wins ties
    });
    order.resize(k);
    return order;
}

std::vector<int> select_nodes(const Topology& t, SelectionStrategy s, int k, uint64_t seed) {
    if (k > t.n()) throw std::invalid_argument("select_nodes: k exceeds node count");
    if (k < 0) throw std::invalid_argument("select_nodes: k must be non-negative");
    if (s == SelectionStrategy::random) {
        Rng rng(derive_seed(seed, 0x5e1ec7ULL));
        return rng.sample_without_replacement(t.n(), k);
    }
    return top_k_by_score(strategy_scores(t, s), k);
}

std::vector<int> hop_profile(const Topology& t, const std::vector<int>& adversaries) {
    if (adversaries.empty()) throw std::invalid_argument("hop_profile: adversary set is empty");
    const int n = t.n();
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    for (int a : adversaries) {
        if (a < 0 || a >= n) throw std::out_of_range("hop_profile: adversary id out of range");
        if (dist[a] == 0) continue;
        dist[a] = 0;
        q.push(a);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : t.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

}  // namespace p2pfl
