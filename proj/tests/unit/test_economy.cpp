#include <cmath>

#include <stdexcept>

#include <doctest.h>

#include "growthnet/economy.hpp"
#include "growthnet/topology.hpp"
#include "oracles.hpp"

using namespace growthnet;

TEST_CASE("team_density: two skilled seniors at distance 2") {
    Graph g(3);
    g.add_regular_edge(0, 1);
    g.add_regular_edge(1, 2);
    const std::vector<NodeId> skilled{0, 2};
    CHECK(team_density(skilled, g) == doctest::Approx(0.5));
}

TEST_CASE("team_density: triangle") {
    Graph g(3);
    g.add_regular_edge(0, 1);
    g.add_regular_edge(1, 2);
    g.add_regular_edge(0, 2);
    const std::vector<NodeId> skilled{0, 1, 2};
    CHECK(team_density(skilled, g) == doctest::Approx(2.0));
}

TEST_CASE("team_density: degenerate sets give zero") {
    const Graph g = build_ring(8, 2);
    CHECK(team_density(std::vector<NodeId>{}, g) == 0.0);
    CHECK(team_density(std::vector<NodeId>{3}, g) == 0.0);
}

TEST_CASE("team_density: unreachable pairs contribute nothing") {
    Graph g(4);
    g.add_regular_edge(0, 1);
    g.add_regular_edge(2, 3);
    const std::vector<NodeId> skilled{0, 1, 2};
    // only the (0,1) ordered pair pair counts: 2 * 1/1 over S_s=3
    CHECK(team_density(skilled, g) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("team_density matches the brute-force double loop") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const auto n = static_cast<std::uint32_t>(6 + rng.below(59));
        const Graph g = oracles::random_connected_graph(n, rng);
        std::vector<NodeId> skilled;
        for (NodeId i = 0; i < n; ++i)
            if (rng.below(3) == 0) skilled.push_back(i);
        const double expected = oracles::team_density_brute(skilled, g);
        CHECK(team_density(skilled, g) == doctest::Approx(expected).epsilon(1e-12));
        const DistanceMatrix dm(g);
        CHECK(team_density(skilled, dm) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("team_density is invariant under relabeling") {
    Rng rng(77);
    const Graph g = oracles::random_connected_graph(24, rng);
    // relabel i -> (i + 5) mod 24 by rebuilding the edge set
    Graph h(24);
    for (const Edge& e : g.regular_edges())
        h.add_regular_edge((e.u + 5) % 24, (e.v + 5) % 24);
    std::vector<NodeId> skilled{1, 4, 9, 16, 23};
    std::vector<NodeId> relabeled;
    for (NodeId i : skilled) relabeled.push_back((i + 5) % 24);
    CHECK(team_density(skilled, g) ==
          doctest::Approx(team_density(relabeled, h)).epsilon(1e-12));
}

TEST_CASE("update_ideas: direct evaluations") {
    EconParams p;
    p.delta = 0.011;
    p.gamma = 0.0;
    auto u = update_ideas(1.0, 100, 0.0, p);
    CHECK(u.change == doctest::Approx(1.1));
    CHECK(u.stock == doctest::Approx(2.1));

    u = update_ideas(5.0, 0, 0.0, p);
    CHECK(u.change == 0.0); // stagnation
    CHECK(u.stock == 5.0);

    p.gamma = 0.05;
    u = update_ideas(2.0, 10, 4.0, p);
    CHECK(u.change == doctest::Approx(0.62));
}

TEST_CASE("compute_wages: baseline period") {
    const Wages w = compute_wages(1.0, 1.1, 200, 100);
    CHECK(w.skilled_wage == doctest::Approx(2.2));
    CHECK(w.unskilled_wage == doctest::Approx(1.0));
    CHECK(w.output == doctest::Approx(2.1 * 200));
    CHECK(w.skilled_bill + w.unskilled_bill == doctest::Approx(w.output));
    CHECK_FALSE(w.poverty_flagged);
    CHECK_FALSE(w.collapse_flagged);
}

TEST_CASE("compute_wages: absorbing-state flags") {
    const Wages poverty = compute_wages(3.0, 0.0, 150, 0);
    CHECK(poverty.poverty_flagged);
    CHECK(poverty.skilled_wage == 0.0);

    const Wages collapse = compute_wages(3.0, 0.5, 0, 40);
    CHECK(collapse.collapse_flagged);
    CHECK(collapse.output == 0.0);
}

TEST_CASE("relative_weight: direct formula and guards") {
    CHECK(relative_weight(2.2, 1.0, 0.45) == doctest::Approx(0.99));
    CHECK(relative_weight(0.0, 1.0, 0.45) == 0.0);
    CHECK(relative_weight(2.0, 0.0, 0.45) == 0.0); // guarded division
    CHECK(initial_relative_weight(0.45) == 0.45);
}

TEST_CASE("wage identities over a random gamma=0 trajectory") {
    // Without a team effect the weight alpha' w_s/w_u collapses to
    // alpha' delta U(t-1); checked with the Y split over a synthetic trajectory.
    Rng rng(5);
    EconParams p;
    p.delta = 0.011;
    p.alpha_prime = 0.45;
    double a = 1.0;
    double ws = 0.0, wu = 0.0;
    std::size_t u_prev = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t s_s = 1 + rng.below(199);
        const std::size_t u = 1 + rng.below(399);
        const IdeasUpdate ideas = update_ideas(a, s_s, 0.0, p);
        const Wages w = compute_wages(a, ideas.change, u, s_s);
        CHECK(w.skilled_bill + w.unskilled_bill ==
              doctest::Approx(w.output).epsilon(1e-12));
        if (t > 0) {
            const double from_wages = relative_weight(ws, wu, p.alpha_prime);
            const double closed_form =
                p.alpha_prime * p.delta * static_cast<double>(u_prev);
            CHECK(from_wages == doctest::Approx(closed_form).epsilon(1e-12));
        }
        ws = w.skilled_wage;
        wu = w.unskilled_wage;
        u_prev = u;
        a = ideas.stock;
        if (a > 1e100) a *= 1e-100;
    }
}

TEST_CASE("ideas stock grows strictly while sources exist") {
    EconParams p;
    p.delta = 0.011;
    p.gamma = 0.05;
    double a = 1.0;
    for (int t = 0; t < 50; ++t) {
        const IdeasUpdate u = update_ideas(a, 3, 0.7, p);
        CHECK(u.stock > a);
        a = u.stock;
    }
    CHECK(update_ideas(a, 0, 0.0, p).stock == a);
    CHECK_THROWS_AS(update_ideas(0.0, 1, 0.0, p), std::invalid_argument);
}
