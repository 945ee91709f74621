#include "p2pfl/topology.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "p2pfl/rng.hpp"

namespace p2pfl {

std::string to_string(GraphFamily f) {
    switch (f) {
        case GraphFamily::erdos_renyi: return "erdos_renyi";
        case GraphFamily::watts_strogatz: return "watts_strogatz";
        case GraphFamily::barabasi_albert: return "barabasi_albert";
        case GraphFamily::complete: return "complete";
    }
    throw std::logic_error("unknown GraphFamily");
}

GraphFamily graph_family_from_string(const std::string& s) {
    if (s == "erdos_renyi") return GraphFamily::erdos_renyi;
    if (s == "watts_strogatz") return GraphFamily::watts_strogatz;
    if (s == "barabasi_albert") return GraphFamily::barabasi_albert;
    if (s == "complete") return GraphFamily::complete;
    throw std::invalid_argument("unknown graph family: " + s);
}

Topology::Topology(int n, std::vector<std::pair<int, int>> edges, GraphFamily family,
                   GenParams params, uint64_t seed)
    : n_(n), edges_(std::move(edges)), family_(family), params_(params), seed_(seed) {
    if (n_ < 1) throw std::invalid_argument("Topology: node count must be positive");
    adjacency_.assign(n_, {});
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("Topology: self loop at node " + std::to_string(u));
        if (u < 0 || v >= n_) throw std::invalid_argument("Topology: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Topology: duplicate edge");
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

const std::vector<int>& Topology::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Topology::neighbors: node id " + std::to_string(v));
    return adjacency_[v];
}

bool Topology::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("Topology::has_edge: node id out of range");
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

bool Topology::connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int visited = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adjacency_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++visited;
                q.push(v);
            }
        }
    }
    return visited == n_;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList gen_erdos_renyi_exact(int n, int m, Rng& rng) {
    // Partial Fisher-Yates over the C(n,2) pair indices.
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<long long> pool(total);
    for (long long i = 0; i < total; ++i) pool[i] = i;
    EdgeList edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        long long j = i + static_cast<long long>(rng.below(static_cast<uint64_t>(total - i)));
        std::swap(pool[i], pool[j]);
        // Pair index -> (u, v) with u < v: index = v(v-1)/2 + u.
        long long idx = pool[i];
        int v = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
        while (static_cast<long long>(v) * (v - 1) / 2 > idx) --v;
        while (static_cast<long long>(v + 1) * v / 2 <= idx) ++v;
        int u = static_cast<int>(idx - static_cast<long long>(v) * (v - 1) / 2);
        edges.emplace_back(u, v);
    }
    return edges;
}

EdgeList gen_erdos_renyi_prob(int n, double p, Rng& rng) {
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return edges;
}

EdgeList gen_watts_strogatz(int n, int k, double beta, Rng& rng) {
    // Ring lattice of degree k, then each ring edge's far endpoint is rewired
    // with probability beta. Edge count stays n*k/2.
    std::vector<std::set<int>> adj(n);
    auto add = [&](int u, int v) {
        adj[u].insert(v);
        adj[v].insert(u);
    };
    auto remove = [&](int u, int v) {
        adj[u].erase(v);
        adj[v].erase(u);
    };
    for (int u = 0; u < n; ++u)
        for (int j = 1; j <= k / 2; ++j) add(u, (u + j) % n);
    for (int j = 1; j <= k / 2; ++j) {
        for (int u = 0; u < n; ++u) {
            int v = (u + j) % n;
            if (!adj[u].count(v)) continue;  // already rewired away
            if (rng.next_double() >= beta) continue;
            if (static_cast<int>(adj[u].size()) >= n - 1) continue;  // u saturated, nothing to rewire to
            int w;
            do {
                w = rng.below_int(n);
            } while (w == u || adj[u].count(w));
            remove(u, v);
            add(u, w);
        }
    }
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

EdgeList gen_barabasi_albert(int n, int m, Rng& rng) {
    // Preferential attachment via a repeated-endpoint pool; node i >= m picks
    // m distinct targets weighted by degree. Yields exactly m*(n-m) edges.
    EdgeList edges;
    edges.reserve(static_cast<size_t>(m) * (n - m));
    std::vector<int> repeated;
    std::vector<int> targets(m);
    for (int i = 0; i < m; ++i) targets[i] = i;
    for (int src = m; src < n; ++src) {
        for (int t : targets) {
            edges.emplace_back(std::min(src, t), std::max(src, t));
            repeated.push_back(t);
            repeated.push_back(src);
        }
        std::set<int> chosen;
        while (static_cast<int>(chosen.size()) < m)
            chosen.insert(repeated[rng.below(repeated.size())]);
        targets.assign(chosen.begin(), chosen.end());
    }
    return edges;
}

EdgeList gen_complete(int n) {
    EdgeList edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return edges;
}

void validate_params(GraphFamily family, int n, const GenParams& p) {
    if (n < 3) throw std::invalid_argument("generate: n must be >= 3");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    switch (family) {
        case GraphFamily::erdos_renyi:
            if (p.edge_count > 0) {
                if (p.edge_count < n - 1)
                    throw std::invalid_argument("erdos_renyi: edge count " + std::to_string(p.edge_count) +
                                                " below spanning minimum " + std::to_string(n - 1));
                if (p.edge_count > max_edges)
                    throw std::invalid_argument("erdos_renyi: edge count exceeds n(n-1)/2");
            } else {
                if (!(p.edge_prob > 0.0 && p.edge_prob < 1.0))
                    throw std::invalid_argument("erdos_renyi: edge probability must be in (0,1)");
            }
            break;
        case GraphFamily::watts_strogatz:
            if (p.ring_degree < 2 || p.ring_degree >= n || p.ring_degree % 2 != 0)
                throw std::invalid_argument("watts_strogatz: ring degree must be even and in [2, n)");
            if (p.rewire_prob < 0.0 || p.rewire_prob > 1.0)
                throw std::invalid_argument("watts_strogatz: rewire probability must be in [0,1]");
            break;
        case GraphFamily::barabasi_albert:
            if (p.attach_count < 1 || p.attach_count >= n)
                throw std::invalid_argument("barabasi_albert: attach count must be in [1, n)");
            break;
        case GraphFamily::complete:
            break;
    }
}

}  // namespace

Topology generate(GraphFamily family, int n, const GenParams& params, uint64_t seed) {
    validate_params(family, n, params);
    constexpr int kMaxAttempts = 100;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(derive_seed(seed, 0x746f706fULL, static_cast<uint64_t>(attempt)));
        EdgeList edges;
        switch (family) {
            case GraphFamily::erdos_renyi:
                edges = params.edge_count > 0 ? gen_erdos_renyi_exact(n, params.edge_count, rng)
                                              : gen_erdos_renyi_prob(n, params.edge_prob, rng);
                break;
            case GraphFamily::watts_strogatz:
                edges = gen_watts_strogatz(n, params.ring_degree, params.rewire_prob, rng);
                break;
            case GraphFamily::barabasi_albert:
                edges = gen_barabasi_albert(n, params.attach_count, rng);
                break;
            case GraphFamily::complete:
                edges = gen_complete(n);
                break;
        }
        Topology t(n, std::move(edges), family, params, seed);
        if (t.connected()) return t;
    }
    throw std::runtime_error("generate: no connected " + to_string(family) + " graph within " +
                             std::to_string(kMaxAttempts) + " attempts (n=" + std::to_string(n) + ")");
}

GraphStats stats(const Topology& t) {
    if (!t.connected()) throw std::invalid_argument("stats: graph must be connected");
    const int n = t.n();
    GraphStats s;
    s.num_nodes = n;
    s.num_edges = t.num_edges();
    s.mean_degree = 2.0 * s.num_edges / n;
    s.density = n > 1 ? 2.0 * s.num_edges / (static_cast<double>(n) * (n - 1)) : 0.0;

    // All-pairs BFS for eccentricities and mean pairwise distance.
    long long dist_sum = 0;
    int diameter = 0;
    int radius = n;
    std::vector<int> dist(n);
    for (int src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        q.push(src);
        dist[src] = 0;
        int ecc = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : t.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    ecc = std::max(ecc, dist[v]);
                    q.push(v);
                }
            }
        }
        for (int v = src + 1; v < n; ++v) dist_sum += dist[v];
        diameter = std::max(diameter, ecc);
        radius = std::min(radius, ecc);
    }
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    s.mean_distance = pairs > 0 ? static_cast<double>(dist_sum) / pairs : 0.0;
    s.diameter = diameter;
    s.radius = radius;

    // Triangles through each node and connected triples.
    long long triangle_ends = 0;  // sum over v of triangles through v = 3 * #triangles
    long long triples = 0;
    double clustering_sum = 0.0;
    for (int v = 0; v < n; ++v) {
        const auto& adj = t.neighbors(v);
        const int d = static_cast<int>(adj.size());
        long long tri = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (t.has_edge(adj[i], adj[j])) ++tri;
        triangle_ends += tri;
        triples += static_cast<long long>(d) * (d - 1) / 2;
        if (d >= 2) clustering_sum += 2.0 * static_cast<double>(tri) / (static_cast<double>(d) * (d - 1));
    }
    s.transitivity = triples > 0 ? static_cast<double>(triangle_ends) / static_cast<double>(triples) : 0.0;
    s.clustering_coef = clustering_sum / n;
    return s;
}

GenParams scaled_params(GraphFamily family, int n) {
    GenParams p;
    switch (family) {
        case GraphFamily::erdos_renyi:
            if (n == 60) {
                p.edge_count = 166;
            } else {
                p.edge_prob = 0.09;  // density target of the n=60 reference graph
            }
            break;
        case GraphFamily::watts_strogatz: {
            int k = static_cast<int>(std::lround(0.2 * n / 2.0)) * 2;  // nearest even to n/5
            p.ring_degree = std::max(2, k);
            p.rewire_prob = 0.1;
            break;
        }
        case GraphFamily::barabasi_albert:
            p.attach_count = std::max(1, static_cast<int>(std::lround(0.2 * n)));
            break;
        case GraphFamily::complete:
            break;
    }
    return p;
}

void write_edge_list(const Topology& t, std::ostream& os) {
    os << "n=" << t.n() << "\n";
    for (const auto& [u, v] : t.edges()) os << u << " " << v << "\n";
}

void write_edge_list_file(const Topology& t, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_edge_list_file: cannot open " + path);
    write_edge_list(t, f);
}

}  // namespace p2pfl
