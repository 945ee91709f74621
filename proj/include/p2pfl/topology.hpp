#ifndef P2PFL_TOPOLOGY_HPP_
#define P2PFL_TOPOLOGY_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace p2pfl {

enum class GraphFamily { erdos_renyi, watts_strogatz, barabasi_albert, complete };

std::string to_string(GraphFamily f);
GraphFamily graph_family_from_string(const std::string& s);

// Family-specific generation parameters; only the fields for the chosen
// family are read.
struct GenParams {
    // erdos_renyi: exact edge count when edge_count > 0, else G(n,p) with edge_prob.
    int edge_count = 0;
    double edge_prob = 0.0;
    // watts_strogatz: even ring degree and rewiring probability.
    int ring_degree = 0;
    double rewire_prob = 0.0;
    // barabasi_albert: edges attached per new node.
    int attach_count = 0;
};

// Undirected learning graph. Node ids are exactly 0..n-1, no self loops, no
// duplicate edges, and the graph is connected by construction.
class Topology {
public:
    Topology(int n, std::vector<std::pair<int, int>> edges, GraphFamily family,
             GenParams params, uint64_t seed);

    int n() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    // Sorted (u, v) pairs with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    // Sorted adjacency set of v.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    bool connected() const;

    GraphFamily family() const { return family_; }
    const GenParams& gen_params() const { return params_; }
    uint64_t seed() const { return seed_; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    GraphFamily family_;
    GenParams params_;
    uint64_t seed_;
};

struct GraphStats {
    int num_nodes = 0;
    int num_edges = 0;
    double mean_degree = 0.0;
    double density = 0.0;
    double mean_distance = 0.0;
    double transitivity = 0.0;
    double clustering_coef = 0.0;
    int diameter = 0;
    int radius = 0;
};

// Generates a connected graph, retrying with a derived sub-seed up to 100
// attempts before reporting failure. Deterministic for fixed inputs.
Topology generate(GraphFamily family, int n, const GenParams& params, uint64_t seed);

// Exact descriptive statistics; distances via all-pairs BFS.
GraphStats stats(const Topology& t);

// Density-preserving parameter scaling anchored at the reference n=60 values
// (ER M=166, WS k=12, BA m=12). Used when configs ask for other node counts
// without explicit parameters.
GenParams scaled_params(GraphFamily family, int n);

// Plain edge-list serialization: header line "n=<count>", then one "u v" pair
// per line.
void write_edge_list(const Topology& t, std::ostream& os);
void write_edge_list_file(const Topology& t, const std::string& path);

}  // namespace p2pfl

#endif  // P2PFL_TOPOLOGY_HPP_
