// Test-only reference implementations, deliberately independent of the
// library's BFS / kernel / union-find code paths.
#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "growthnet/graph.hpp"
#include "growthnet/rng.hpp"

namespace oracles {

inline constexpr std::int64_t kInf = std::numeric_limits<std::int32_t>::max();

// Floyd-Warshall all-pairs distances; kInf marks unreachable pairs.
inline std::vector<std::vector<std::int64_t>> floyd_warshall(
    const growthnet::Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    auto relax_edges = [&](const std::vector<growthnet::Edge>& edges) {
        for (const auto& e : edges) {
            d[e.u][e.v] = 1;
            d[e.v][e.u] = 1;
        }
    };
    relax_edges(g.regular_edges());
    relax_edges(g.shortcut_edges());
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][k] == kInf) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (d[k][j] == kInf) continue;
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
            }
        }
    return d;
}

// Team density by explicit double loop over ordered pairs.
inline double team_density_brute(const std::vector<growthnet::NodeId>& skilled,
                                 const growthnet::Graph& collab) {
    if (skilled.size() <= 1) return 0.0;
    const auto d = floyd_warshall(collab);
    double sum = 0.0;
    for (growthnet::NodeId i : skilled)
        for (growthnet::NodeId j : skilled) {
            if (i == j) continue;
            if (d[i][j] == kInf) continue;
            sum += 1.0 / static_cast<double>(d[i][j]);
        }
    return sum / static_cast<double>(skilled.size());
}

// Same-class domain count by recursive flood fill over an adjacency
// relation supplied by the caller.
inline std::uint32_t label_components(
    std::size_t n, const std::vector<char>& cls,
    const std::vector<std::vector<growthnet::NodeId>>& adj) {
    std::vector<char> seen(n, 0);
    std::uint32_t comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (growthnet::NodeId y : adj[x])
                if (!seen[y] && cls[y] == cls[x]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
    }
    return comps;
}

// Connected random graph with n nodes; edge structure only matters for
// exercising distance / density code.
inline growthnet::Graph random_connected_graph(std::uint32_t n,
                                               growthnet::Rng& rng,
                                               double extra_edge_fraction = 0.5) {
    growthnet::Graph g(n);
    for (growthnet::NodeId i = 1; i < n; ++i)
        g.add_regular_edge(i, static_cast<growthnet::NodeId>(rng.below(i)));
    const auto extra =
        static_cast<std::size_t>(extra_edge_fraction * n);
    std::size_t placed = 0;
    std::size_t guard = 0;
    while (placed < extra && ++guard < 50u * n) {
        const auto a = static_cast<growthnet::NodeId>(rng.below(n));
        const auto b = static_cast<growthnet::NodeId>(rng.below(n));
        if (a == b || g.adjacent(a, b)) continue;
        g.add_regular_edge(a, b);
        ++placed;
    }
    return g;
}

} // namespace oracles
