#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "p2pfl/topology.hpp"

using namespace p2pfl;

namespace {

Topology path3() {
    return Topology(3, {{0, 1}, {1, 2}}, GraphFamily::erdos_renyi, {}, 0);
}

Topology triangle() {
    return Topology(3, {{0, 1}, {1, 2}, {0, 2}}, GraphFamily::complete, {}, 0);
}

GenParams ws_params(int k, double beta) {
    GenParams p;
    p.ring_degree = k;
    p.rewire_prob = beta;
    return p;
}

GenParams er_m(int m) {
    GenParams p;
    p.edge_count = m;
    return p;
}

GenParams er_p(double prob) {
    GenParams p;
    p.edge_prob = prob;
    return p;
}

GenParams ba_m(int m) {
    GenParams p;
    p.attach_count = m;
    return p;
}

}  // namespace

TEST_CASE("reference edge counts at n=60") {
    // WS keeps n*k/2 edges for any seed and beta.
    for (uint64_t seed : {0ULL, 1ULL, 2ULL, 17ULL}) {
        Topology ws = generate(GraphFamily::watts_strogatz, 60, ws_params(12, 0.1), seed);
        CHECK(ws.num_edges() == 360);
        CHECK(ws.connected());
    }
    Topology er = generate(GraphFamily::erdos_renyi, 60, er_m(166), 3);
    CHECK(er.num_edges() == 166);
    Topology ba = generate(GraphFamily::barabasi_albert, 60, ba_m(12), 4);
    CHECK(ba.num_edges() == 576);  // m*(n-m) = 12*48
    Topology k60 = generate(GraphFamily::complete, 60, {}, 0);
    CHECK(k60.num_edges() == 1770);
}

TEST_CASE("determinism: identical inputs give identical edge sets") {
    for (GraphFamily fam : {GraphFamily::erdos_renyi, GraphFamily::watts_strogatz,
                            GraphFamily::barabasi_albert}) {
        GenParams p = scaled_params(fam, 60);
        Topology a = generate(fam, 60, p, 42);
        Topology b = generate(fam, 60, p, 42);
        CHECK(a.edges() == b.edges());
        Topology c = generate(fam, 60, p, 43);
        CHECK(a.edges() != c.edges());
    }
}

TEST_CASE("complete graph stats match the closed forms") {
    Topology k60 = generate(GraphFamily::complete, 60, {}, 0);
    GraphStats s = stats(k60);
    CHECK(s.diameter == 1);
    CHECK(s.radius == 1);
    CHECK(s.mean_distance == doctest::Approx(1.0));
    CHECK(s.clustering_coef == doctest::Approx(1.0));
    CHECK(s.transitivity == doctest::Approx(1.0));
    CHECK(s.density == doctest::Approx(1.0));
    CHECK(s.mean_degree == doctest::Approx(59.0));
}

TEST_CASE("tiny graph stats") {
    GraphStats tri = stats(triangle());
    CHECK(tri.transitivity == doctest::Approx(1.0));
    CHECK(tri.density == doctest::Approx(1.0));

    GraphStats p3 = stats(path3());
    CHECK(p3.diameter == 2);
    CHECK(p3.radius == 1);
    CHECK(p3.clustering_coef == doctest::Approx(0.0));
}

TEST_CASE("neighbors") {
    Topology k4 = generate(GraphFamily::complete, 4, {}, 0);
    CHECK(k4.neighbors(0) == std::vector<int>{1, 2, 3});

    Topology p3 = path3();
    CHECK(p3.neighbors(1) == std::vector<int>{0, 2});
    CHECK_THROWS(p3.neighbors(3));
    CHECK_THROWS(p3.neighbors(-1));

    // beta=0 gives the exact ring lattice of degree 12.
    Topology ring = generate(GraphFamily::watts_strogatz, 60, ws_params(12, 0.0), 9);
    std::vector<int> expected = {1, 2, 3, 4, 5, 6, 54, 55, 56, 57, 58, 59};
    CHECK(ring.neighbors(0) == expected);
    CHECK(ring.num_edges() == 360);
    // symmetry of adjacency
    for (int v = 0; v < ring.n(); ++v)
        for (int u : ring.neighbors(v)) {
            const auto& back = ring.neighbors(u);
            CHECK(std::binary_search(back.begin(), back.end(), v));
        }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS(generate(GraphFamily::watts_strogatz, 60, ws_params(11, 0.1), 0));  // odd k
    CHECK_THROWS(generate(GraphFamily::watts_strogatz, 60, ws_params(60, 0.1), 0));  // k >= n
    CHECK_THROWS(generate(GraphFamily::watts_strogatz, 60, ws_params(12, 1.5), 0));
    CHECK_THROWS(generate(GraphFamily::erdos_renyi, 60, er_p(0.0), 0));
    CHECK_THROWS(generate(GraphFamily::erdos_renyi, 60, er_p(1.0), 0));
    CHECK_THROWS(generate(GraphFamily::erdos_renyi, 10, er_m(5), 0));     // below spanning minimum
    CHECK_THROWS(generate(GraphFamily::erdos_renyi, 10, er_m(100), 0));   // above n(n-1)/2
    CHECK_THROWS(generate(GraphFamily::barabasi_albert, 10, ba_m(10), 0));
    CHECK_THROWS(generate(GraphFamily::barabasi_albert, 10, ba_m(0), 0));
    CHECK_THROWS(generate(GraphFamily::complete, 2, {}, 0));  // n < 3
}

TEST_CASE("connectivity retry budget is a reported error") {
    // 19 edges on 20 nodes: a connected draw needs a perfect spanning tree,
    // which the uniform edge sampler essentially never produces.
    CHECK_THROWS_WITH_AS(generate(GraphFamily::erdos_renyi, 20, er_m(19), 0),
                         doctest::Contains("no connected"), std::runtime_error);
}

TEST_CASE("ER p-mode edge count is unbiased across seeds") {
    const int n = 60;
    const double p = 0.2;
    const double expected = p * n * (n - 1) / 2.0;
    const double sigma_single = std::sqrt(n * (n - 1) / 2.0 * p * (1 - p));
    double total = 0.0;
    const int runs = 100;
    for (int s = 0; s < runs; ++s) total += generate(GraphFamily::erdos_renyi, n, er_p(p), s).num_edges();
    const double mean = total / runs;
    CHECK(std::abs(mean - expected) <= 4.0 * sigma_single / std::sqrt(runs));
}

TEST_CASE("WS edge count is preserved for all beta") {
    for (double beta : {0.0, 0.1, 0.5, 1.0})
        for (uint64_t seed : {0ULL, 5ULL}) {
            GenParams p = ws_params(6, beta);
            Topology t = generate(GraphFamily::watts_strogatz, 20, p, seed);
            CHECK(t.num_edges() == 60);
            CHECK(t.connected());
        }
}

TEST_CASE("stats agree with the brute-force oracle on small graphs") {
    int checked = 0;
    for (int n = 4; n <= 8; ++n) {
        for (unsigned seed = 0; seed < 12; ++seed) {
            Topology t = oracles::random_connected_graph(n, 0.3, seed * 131 + n);
            GraphStats s = stats(t);
            auto d = oracles::floyd_warshall(t);

            int diameter = 0, radius = 1 << 20;
            long long dist_sum = 0;
            for (int i = 0; i < n; ++i) {
                int ecc = 0;
                for (int j = 0; j < n; ++j) ecc = std::max(ecc, d[i][j]);
                diameter = std::max(diameter, ecc);
                radius = std::min(radius, ecc);
                for (int j = i + 1; j < n; ++j) dist_sum += d[i][j];
            }
            CHECK(s.diameter == diameter);
            CHECK(s.radius == radius);
            CHECK(s.radius <= s.diameter);
            CHECK(s.diameter <= 2 * s.radius);
            CHECK(s.mean_distance ==
                  doctest::Approx(static_cast<double>(dist_sum) / (n * (n - 1) / 2)));

            long long tri_ends = 0, triples = 0;
            double clustering_sum = 0.0;
            for (int v = 0; v < n; ++v) {
                tri_ends += oracles::triangles_through(t, v);
                const long long deg = t.degree(v);
                triples += deg * (deg - 1) / 2;
                clustering_sum += oracles::clustering_oracle(t, v);
            }
            const double want_trans = triples > 0 ? static_cast<double>(tri_ends) / triples : 0.0;
            CHECK(s.transitivity == doctest::Approx(want_trans));
            CHECK(s.clustering_coef == doctest::Approx(clustering_sum / n));
            CHECK(s.mean_degree == doctest::Approx(2.0 * s.num_edges / n));
            CHECK(s.density == doctest::Approx(2.0 * s.num_edges / (static_cast<double>(n) * (n - 1))));
            ++checked;
        }
    }
    CHECK(checked >= 50);
}

TEST_CASE("scaled params hold density near the n=60 reference") {
    // WS: k = n/5 keeps density at 0.20; BA: m = n/5 keeps density near 0.33.
    CHECK(scaled_params(GraphFamily::watts_strogatz, 60).ring_degree == 12);
    CHECK(scaled_params(GraphFamily::watts_strogatz, 80).ring_degree == 16);
    CHECK(scaled_params(GraphFamily::watts_strogatz, 100).ring_degree == 20);
    CHECK(scaled_params(GraphFamily::barabasi_albert, 80).attach_count == 16);
    CHECK(scaled_params(GraphFamily::erdos_renyi, 60).edge_count == 166);
    CHECK(scaled_params(GraphFamily::erdos_renyi, 80).edge_prob == doctest::Approx(0.09));

    Topology ba80 = generate(GraphFamily::barabasi_albert, 80, scaled_params(GraphFamily::barabasi_albert, 80), 0);
    const double density80 = 2.0 * ba80.num_edges() / (80.0 * 79.0);
    CHECK(std::abs(density80 - 0.325) < 0.01);
}

TEST_CASE("edge list serialization") {
    Topology t = generate(GraphFamily::watts_strogatz, 20, ws_params(6, 0.1), 7);
    std::ostringstream os;
    write_edge_list(t, os);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "n=20");
    std::set<std::pair<int, int>> parsed;
    int u, v;
    while (is >> u >> v) parsed.insert({u, v});
    std::set<std::pair<int, int>> expected(t.edges().begin(), t.edges().end());
    CHECK(parsed == expected);
}

TEST_CASE("topology invariants are rejected") {
    CHECK_THROWS(Topology(3, {{0, 0}}, GraphFamily::complete, {}, 0));          // self loop
    CHECK_THROWS(Topology(3, {{0, 1}, {1, 0}}, GraphFamily::complete, {}, 0));  // duplicate
    CHECK_THROWS(Topology(3, {{0, 3}}, GraphFamily::complete, {}, 0));          // out of range
}
