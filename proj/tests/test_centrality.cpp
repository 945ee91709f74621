#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "p2pfl/centrality.hpp"
#include "p2pfl/topology.hpp"

using namespace p2pfl;

namespace {

Topology star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Topology(leaves + 1, edges, GraphFamily::erdos_renyi, {}, 0);
}

Topology path3() {
    return Topology(3, {{0, 1}, {1, 2}}, GraphFamily::erdos_renyi, {}, 0);
}

Topology ws60() {
    GenParams p;
    p.ring_degree = 12;
    p.rewire_prob = 0.1;
    return generate(GraphFamily::watts_strogatz, 60, p, 0);
}

}  // namespace

TEST_CASE("ens closed forms") {
    CHECK(ens_score(star(5), 0) == doctest::Approx(5.0));  // no ties among leaves
    Topology tri(3, {{0, 1}, {1, 2}, {0, 2}}, GraphFamily::complete, {}, 0);
    CHECK(ens_score(tri, 0) == doctest::Approx(1.0));  // 2 - 2*1/2
    Topology k4 = generate(GraphFamily::complete, 4, {}, 0);
    for (int v = 0; v < 4; ++v) CHECK(ens_score(k4, v) == doctest::Approx(1.0));  // 3 - 2*3/3
    CHECK_THROWS(ens_score(k4, 4));
}

TEST_CASE("clustering closed forms") {
    Topology tri(3, {{0, 1}, {1, 2}, {0, 2}}, GraphFamily::complete, {}, 0);
    CHECK(clustering_coefficient(tri, 0) == doctest::Approx(1.0));
    CHECK(clustering_coefficient(star(5), 0) == doctest::Approx(0.0));
    Topology k4 = generate(GraphFamily::complete, 4, {}, 0);
    CHECK(clustering_coefficient(k4, 1) == doctest::Approx(1.0));  // 2*3/(3*2)
    CHECK(clustering_coefficient(path3(), 0) == doctest::Approx(0.0));  // deg < 2
}

TEST_CASE("pagerank basics") {
    Topology k5 = generate(GraphFamily::complete, 5, {}, 0);
    auto pr = pagerank(k5);
    for (double s : pr) CHECK(s == doctest::Approx(0.2).epsilon(1e-9));

    auto star4 = star(3);
    auto pr_star = pagerank(star4, 0.85, 1e-10);
    double total = 0.0;
    for (double s : pr_star) total += s;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    for (int leaf = 1; leaf <= 3; ++leaf) CHECK(pr_star[0] > pr_star[leaf]);

    CHECK_THROWS(pagerank(k5, 1.5));
    CHECK_THROWS_AS(pagerank(k5, 0.85, 1e-16, 1), std::runtime_error);  // iteration cap
}

TEST_CASE("pagerank matches the dense power-iteration oracle") {
    auto p3 = path3();
    auto got = pagerank(p3, 0.85, 1e-14);
    auto want = oracles::pagerank_oracle(p3, 0.85, 200);
    for (int v = 0; v < 3; ++v) CHECK(std::abs(got[v] - want[v]) < 1e-8);

    for (unsigned seed = 0; seed < 20; ++seed) {
        Topology t = oracles::random_connected_graph(3 + seed % 8, 0.35, 900 + seed);
        auto scores = pagerank(t, 0.85, 1e-14);
        auto oracle = oracles::pagerank_oracle(t, 0.85, 400);
        double sum = 0.0;
        for (int v = 0; v < t.n(); ++v) {
            CHECK(std::abs(scores[v] - oracle[v]) < 1e-8);
            CHECK(scores[v] > 0.0);
            sum += scores[v];
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("degree, ens, and clustering scores equal brute force on small graphs") {
    for (unsigned seed = 0; seed < 40; ++seed) {
        Topology t = oracles::random_connected_graph(3 + seed % 8, 0.4, 7000 + seed);
        auto deg = strategy_scores(t, SelectionStrategy::max_degree);
        auto ens = strategy_scores(t, SelectionStrategy::max_ens);
        auto clus = strategy_scores(t, SelectionStrategy::max_clustering);
        for (int v = 0; v < t.n(); ++v) {
            CHECK(deg[v] == static_cast<double>(t.degree(v)));
            CHECK(ens[v] == oracles::ens_oracle(t, v));      // identical integer arithmetic
            CHECK(clus[v] == oracles::clustering_oracle(t, v));
        }
    }
}

TEST_CASE("select_nodes") {
    CHECK(select_nodes(star(5), SelectionStrategy::max_degree, 1, 0) == std::vector<int>{0});

    // All pagerank scores equal on K5: lowest ids win ties.
    Topology k5 = generate(GraphFamily::complete, 5, {}, 0);
    CHECK(select_nodes(k5, SelectionStrategy::max_pagerank, 2, 123) == std::vector<int>{0, 1});

    // Exhaustive ENS oracle over all 60 nodes.
    Topology ws = ws60();
    auto picks = select_nodes(ws, SelectionStrategy::max_ens, 3, 0);
    std::vector<std::pair<double, int>> ranked;
    for (int v = 0; v < ws.n(); ++v) ranked.push_back({-oracles::ens_oracle(ws, v), v});
    std::sort(ranked.begin(), ranked.end());
    for (int i = 0; i < 3; ++i) CHECK(picks[i] == ranked[i].second);

    CHECK_THROWS(select_nodes(k5, SelectionStrategy::max_degree, 6, 0));  // k > n

    auto r1 = select_nodes(ws, SelectionStrategy::random, 5, 77);
    auto r2 = select_nodes(ws, SelectionStrategy::random, 5, 77);
    CHECK(r1 == r2);
    std::set<int> distinct(r1.begin(), r1.end());
    CHECK(distinct.size() == 5);
    auto r3 = select_nodes(ws, SelectionStrategy::random, 5, 78);
    CHECK(r1 != r3);
}

TEST_CASE("top-k selection is invariant to positive score scaling") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        Topology t = oracles::random_connected_graph(9, 0.4, 3100 + seed);
        auto scores = strategy_scores(t, SelectionStrategy::max_ens);
        auto base = top_k_by_score(scores, 3);
        for (double c : {0.5, 3.0, 1e6}) {
            auto scaled = scores;
            for (auto& s : scaled) s *= c;
            CHECK(top_k_by_score(scaled, 3) == base);
        }
    }
}

TEST_CASE("hop profile") {
    auto p3 = path3();
    CHECK(hop_profile(p3, {0}) == std::vector<int>{0, 1, 2});

    Topology k5 = generate(GraphFamily::complete, 5, {}, 0);
    CHECK(hop_profile(k5, {3}) == std::vector<int>{1, 1, 1, 0, 1});

    CHECK_THROWS(hop_profile(p3, {}));
    CHECK_THROWS(hop_profile(p3, {5}));

    // WS(60,12,0.1) has diameter 3; every hop distance stays within it.
    Topology ws = ws60();
    const GraphStats s = stats(ws);
    auto hops = hop_profile(ws, select_nodes(ws, SelectionStrategy::max_pagerank, 3, 0));
    for (int h : hops) {
        CHECK(h >= 0);
        CHECK(h <= s.diameter);
        CHECK(h <= 3);
    }
}

TEST_CASE("hop profile equals single-source BFS minimum") {
    for (unsigned seed = 0; seed < 20; ++seed) {
        Topology t = oracles::random_connected_graph(4 + seed % 7, 0.35, 11000 + seed);
        std::vector<int> adv = {0, t.n() - 1};
        CHECK(hop_profile(t, adv) == oracles::hop_oracle(t, adv));
    }
}
