#include <algorithm>
#include <set>
#include <sstream>

#include <stdexcept>

#include <doctest.h>

#include "growthnet/topology.hpp"
#include "oracles.hpp"

using namespace growthnet;

namespace {

std::set<NodeId> neighbor_set(const Graph& g, NodeId i) {
    auto nb = g.neighbors(i);
    return {nb.begin(), nb.end()};
}

} // namespace

TEST_CASE("ring: C6 cycle") {
    const Graph g = build_ring(6, 2);
    CHECK(g.regular_edge_count() == 6);
    for (NodeId i = 0; i < 6; ++i)
        CHECK(neighbor_set(g, i) == std::set<NodeId>{(i + 5) % 6, (i + 1) % 6});
}

TEST_CASE("ring: N=400 z=6 has 1200 regular edges") {
    const Graph g = build_ring(400, 6);
    CHECK(g.regular_edge_count() == 1200);
    CHECK(g.is_simple());
    CHECK(g.is_connected());
    for (NodeId i = 0; i < 400; ++i) CHECK(g.degree(i) == 6);
}

TEST_CASE("ring: N=8 z=4 neighborhood of node 0") {
    const Graph g = build_ring(8, 4);
    CHECK(neighbor_set(g, 0) == std::set<NodeId>{1, 2, 6, 7});
}

TEST_CASE("ring: rejects bad degree") {
    CHECK_THROWS_AS(build_ring(10, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_ring(10, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_ring(10, 0), std::invalid_argument);
}

TEST_CASE("ring construction is deterministic") {
    const Graph a = build_ring(64, 6), b = build_ring(64, 6);
    CHECK(a.regular_edges() == b.regular_edges());
}

TEST_CASE("square: 3x3 von Neumann torus") {
    const Graph g = build_square(9, 4);
    CHECK(g.regular_edge_count() == 18);
    for (NodeId i = 0; i < 9; ++i) CHECK(g.degree(i) == 4);
}

TEST_CASE("square: 20x20 torus has 800 edges") {
    const Graph g = build_square(400, 4);
    CHECK(g.regular_edge_count() == 800);
    CHECK(g.is_simple());
    CHECK(g.is_connected());
}

TEST_CASE("square: z=8 Moore neighborhood") {
    const Graph g = build_square(25, 8);
    CHECK(g.regular_edge_count() == 100); // 4N/... 25*8/2
    for (NodeId i = 0; i < 25; ++i) CHECK(g.degree(i) == 8);
    CHECK(g.is_simple());
}

TEST_CASE("square: rejects invalid shapes") {
    CHECK_THROWS_AS(build_square(10, 4), std::invalid_argument); // not square
    CHECK_THROWS_AS(build_square(16, 6), std::invalid_argument); // bad z
    CHECK_THROWS_AS(build_square(9, 8), std::invalid_argument);  // side < 5
    CHECK_THROWS_AS(build_square(4, 4), std::invalid_argument);  // side < 3
}

TEST_CASE("crg: N=4 L=6 is K4") {
    Rng rng(1);
    const Graph g = build_crg(4, 6, rng);
    CHECK(g.regular_edge_count() == 6);
    for (NodeId i = 0; i < 4; ++i) CHECK(g.degree(i) == 3);
}

TEST_CASE("crg: exact edge count, simple, connected") {
    Rng rng(77);
    for (int k = 0; k < 20; ++k) {
        const Graph g = build_crg(400, 1200, rng);
        CHECK(g.regular_edge_count() == 1200);
        REQUIRE(g.is_simple());
        REQUIRE(g.is_connected());
    }
}

TEST_CASE("crg: L=N-1 samples are spanning trees") {
    Rng rng(5);
    const Graph g = build_crg(20, 19, rng);
    CHECK(g.is_connected());
    CHECK(g.regular_edge_count() == 19); // connected + N-1 edges => tree
}

TEST_CASE("crg: rejects infeasible edge counts") {
    Rng rng(2);
    CHECK_THROWS_AS(build_crg(4, 7, rng), std::invalid_argument);
    CHECK_THROWS_AS(build_crg(20, 10, rng), std::invalid_argument);
}

TEST_CASE("refresh_shortcuts: L' count and regular-edge preservation") {
    Rng rng(11);
    NetworkSpec spec;
    spec.n_agents = 400;
    spec.degree = 6;
    spec.shortcut_prob = 0.03;
    CHECK(spec.shortcut_count() == 36);

    Graph g = build_ring(400, 6);
    const auto regular_before = g.regular_edges();
    std::vector<NodeId> all(400);
    for (NodeId i = 0; i < 400; ++i) all[i] = i;

    std::size_t added = 0;
    g = refresh_shortcuts(std::move(g), all, spec.shortcut_count(), rng, &added);
    CHECK(added == 36);
    CHECK(g.shortcut_edge_count() == 36);
    CHECK(g.regular_edges() == regular_before);
    CHECK(g.is_simple());

    // Redraw replaces, never accumulates.
    g = refresh_shortcuts(std::move(g), all, spec.shortcut_count(), rng, &added);
    CHECK(g.shortcut_edge_count() == 36);
    CHECK(g.regular_edges() == regular_before);
    CHECK(g.is_simple());
}

TEST_CASE("refresh_shortcuts: empty eligibility adds nothing") {
    Rng rng(3);
    Graph g = build_ring(10, 2);
    std::size_t added = 99;
    g = refresh_shortcuts(std::move(g), {}, 5, rng, &added);
    CHECK(added == 0);
    CHECK(g.shortcut_edge_count() == 0);
}

TEST_CASE("refresh_shortcuts: zero count is the identity") {
    Rng rng(3);
    Graph g = build_ring(10, 2);
    std::vector<NodeId> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    g = refresh_shortcuts(std::move(g), all, 0, rng);
    CHECK(g.shortcut_edge_count() == 0);
    CHECK(g.regular_edge_count() == 10);
}

TEST_CASE("refresh_shortcuts: saturates small eligible sets") {
    Rng rng(3);
    Graph g = build_ring(12, 2);
    const std::vector<NodeId> eligible{0, 3, 6};
    std::size_t added = 0;
    g = refresh_shortcuts(std::move(g), eligible, 10, rng, &added);
    CHECK(added == 3); // all three non-adjacent pairs
    CHECK(g.shortcut_edge_count() == 3);
}

TEST_CASE("bfs: cycle distances") {
    const Graph g = build_ring(6, 2);
    CHECK(bfs_distances(g, 0) ==
          std::vector<std::int32_t>{0, 1, 2, 3, 2, 1});
}

TEST_CASE("bfs: shortcut shortens the path") {
    Rng rng(1);
    Graph g = build_ring(10, 2);
    g.set_shortcuts({{0, 5}});
    const auto d = bfs_distances(g, 0);
    CHECK(d[5] == 1);
    CHECK(d[4] == 2);
}

TEST_CASE("bfs: unreachable nodes are marked") {
    Graph g(4);
    g.add_regular_edge(0, 1);
    const auto d = bfs_distances(g, 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == kUnreachable);
    CHECK(d[3] == kUnreachable);
}

TEST_CASE("bfs matches Floyd-Warshall on random graphs") {
    Rng rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<std::uint32_t>(4 + rng.below(61));
        Graph g = oracles::random_connected_graph(n, rng);
        const auto fw = oracles::floyd_warshall(g);
        for (NodeId s = 0; s < n; ++s) {
            const auto d = bfs_distances(g, s);
            for (NodeId j = 0; j < n; ++j)
                REQUIRE(static_cast<std::int64_t>(d[j]) == fw[s][j]);
        }
    }
}

TEST_CASE("metrics: complete graph") {
    Rng rng(1);
    const Graph g = build_crg(4, 6, rng); // K4
    CHECK(clustering_coefficient(g) == doctest::Approx(1.0));
    CHECK(characteristic_path_length(g) == doctest::Approx(1.0));
}

TEST_CASE("metrics: C6 cycle") {
    const Graph g = build_ring(6, 2);
    CHECK(clustering_coefficient(g) == doctest::Approx(0.0));
    CHECK(characteristic_path_length(g) == doctest::Approx(1.8));
}

TEST_CASE("metrics: ring z=4 clustering is 1/2") {
    const Graph g = build_ring(100, 4);
    CHECK(clustering_coefficient(g) == doctest::Approx(0.5));
}

TEST_CASE("metrics: CPL rejects disconnected graphs") {
    Graph g(3);
    g.add_regular_edge(0, 1);
    CHECK_THROWS(characteristic_path_length(g));
}

TEST_CASE("edge-list dump: one 'u v class' triple per line") {
    Graph g(4);
    g.add_regular_edge(0, 1);
    g.add_regular_edge(1, 2);
    g.set_shortcuts({{0, 3}});
    std::ostringstream os;
    dump_edge_list(g, os);
    CHECK(os.str() == "0 1 regular\n1 2 regular\n0 3 shortcut\n");
}
