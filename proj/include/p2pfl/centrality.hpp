#ifndef P2PFL_CENTRALITY_HPP_
#define P2PFL_CENTRALITY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "p2pfl/topology.hpp"

namespace p2pfl {

enum class SelectionStrategy { random, max_degree, max_ens, max_pagerank, max_clustering };

std::string to_string(SelectionStrategy s);
SelectionStrategy selection_strategy_from_string(const std::string& s);

// Effective network size of v's ego network (ego excluded):
// e = n_ego - 2*t/n_ego with t the number of ties among the neighbors.
// Returns 0 for isolated nodes.
double ens_score(const Topology& t, int v);

// Power iteration on the undirected graph, each edge treated as two directed
// links. Scores sum to 1 within tol. Throws if the L1 change has not dropped
// below tol within max_iter iterations.
std::vector<double> pagerank(const Topology& t, double damping = 0.85, double tol = 1e-10,
                             int max_iter = 10000);

// Fraction of possible triangles through v that exist; 0 when deg(v) < 2.
double clustering_coefficient(const Topology& t, int v);

// Per-node scores for a deterministic strategy (not valid for random).
std::vector<double> strategy_scores(const Topology& t, SelectionStrategy s);

// Top-k node ids by score, ties broken by lowest id; random strategy draws a
// seeded uniform sample without replacement.
std::vector<int> top_k_by_score(const std::vector<double>& scores, int k);
std::vector<int> select_nodes(const Topology& t, SelectionStrategy s, int k, uint64_t seed);

// Multi-source BFS distance from the adversary set; adversaries map to 0.
std::vector<int> hop_profile(const Topology& t, const std::vector<int>& adversaries);

}  // namespace p2pfl

#endif  // P2PFL_CENTRALITY_HPP_
