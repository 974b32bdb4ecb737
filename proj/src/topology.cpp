#include "growthnet/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace growthnet {

namespace {

std::uint64_t pair_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

std::size_t NetworkSpec::shortcut_count() const {
    return static_cast<std::size_t>(
        std::llround(static_cast<double>(regular_edge_target()) * shortcut_prob));
}

Graph build_ring(std::uint32_t n, std::uint32_t z) {
    if (z % 2 != 0) throw std::invalid_argument("ring: z must be even");
    if (z < 2) throw std::invalid_argument("ring: z must be >= 2");
    if (z >= n) throw std::invalid_argument("ring: z must be < N");
    Graph g(n);
    const std::uint32_t half = z / 2;
    // Clockwise offsets 1..z/2 enumerate every edge exactly once
    // (half < N/2, so {i, i+k} never coincides with {i, i-k}).
    for (NodeId i = 0; i < n; ++i)
        for (std::uint32_t k = 1; k <= half; ++k)
            g.add_regular_edge(i, (i + k) % n);
    return g;
}

Graph build_square(std::uint32_t n, std::uint32_t z) {
    const auto side = static_cast<std::uint32_t>(std::lround(std::sqrt(double(n))));
    if (side * side != n)
        throw std::invalid_argument("square: N must be a perfect square");
    if (z != 4 && z != 8)
        throw std::invalid_argument("square: z must be 4 or 8");
    const std::uint32_t min_side = (z == 8) ? 5 : 3;
    if (side < min_side)
        throw std::invalid_argument("square: lattice side too small for z");
    Graph g(n);
    auto id = [side](std::uint32_t x, std::uint32_t y) { return x * side + y; };
    for (std::uint32_t x = 0; x < side; ++x)
        for (std::uint32_t y = 0; y < side; ++y) {
            g.add_regular_edge(id(x, y), id((x + 1) % side, y));
            g.add_regular_edge(id(x, y), id(x, (y + 1) % side));
            if (z == 8) {
                g.add_regular_edge(id(x, y), id((x + 1) % side, (y + 1) % side));
                g.add_regular_edge(id(x, y), id((x + 1) % side, (y + side - 1) % side));
            }
        }
    return g;
}

Graph build_crg(std::uint32_t n, std::size_t l, Rng& rng, int max_attempts) {
    const std::size_t max_edges =
        static_cast<std::size_t>(n) * (n - 1) / 2;
    if (l > max_edges) throw std::invalid_argument("crg: L exceeds N(N-1)/2");
    if (n > 1 && l + 1 < n)
        throw std::invalid_argument("crg: L < N-1 can never be connected");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g(n);
        std::unordered_set<std::uint64_t> used;
        used.reserve(l * 2);
        while (used.size() < l) {
            NodeId a = rng.below32(n);
            NodeId b = rng.below32(n);
            if (a == b) continue;
            if (!used.insert(pair_key(a, b)).second) continue;
            g.add_regular_edge(a, b);
        }
        if (g.is_connected()) return g;
    }
    throw std::runtime_error(
        "crg: no connected sample within " + std::to_string(max_attempts) +
        " attempts (N=" + std::to_string(n) + ", L=" + std::to_string(l) + ")");
}

Graph refresh_shortcuts(Graph g, std::span<const NodeId> eligible,
                        std::size_t count, Rng& rng, std::size_t* added) {
    g.set_shortcuts({});
    const std::size_t k = eligible.size();
    std::vector<Edge> fresh;
    if (count > 0 && k >= 2) {
        // Feasible pairs: eligible pairs minus those already adjacent.
        std::size_t within = 0;
        std::vector<char> mark(g.node_count(), 0);
        for (NodeId e : eligible) mark[e] = 1;
        for (const Edge& e : g.regular_edges())
            if (mark[e.u] && mark[e.v]) ++within;
        const std::size_t feasible = k * (k - 1) / 2 - within;
        if (feasible <= count) {
            // Take every non-adjacent eligible pair.
            fresh.reserve(feasible);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b)
                    if (!g.adjacent(eligible[a], eligible[b]))
                        fresh.push_back({eligible[a], eligible[b]});
        } else {
            fresh.reserve(count);
            std::unordered_set<std::uint64_t> chosen;
            chosen.reserve(count * 2);
            while (fresh.size() < count) {
                NodeId a = eligible[rng.below(k)];
                NodeId b = eligible[rng.below(k)];
                if (a == b) continue;
                if (g.adjacent(a, b)) continue;
                if (!chosen.insert(pair_key(a, b)).second) continue;
                fresh.push_back({a, b});
            }
        }
    }
    if (added) *added = fresh.size();
    g.set_shortcuts(std::move(fresh));
    return g;
}

void bfs_distances(const Graph& g, NodeId source, std::vector<std::int32_t>& dist) {
    const NodeId n = g.node_count();
    dist.assign(n, kUnreachable);
    dist[source] = 0;
    std::vector<NodeId> frontier{source}, next;
    std::int32_t d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (NodeId x : frontier)
            for (NodeId y : g.neighbors(x))
                if (dist[y] == kUnreachable) {
                    dist[y] = d;
                    next.push_back(y);
                }
        frontier.swap(next);
    }
}

std::vector<std::int32_t> bfs_distances(const Graph& g, NodeId source) {
    std::vector<std::int32_t> dist;
    bfs_distances(g, source, dist);
    return dist;
}

double clustering_coefficient(const Graph& g) {
    const NodeId n = g.node_count();
    if (n == 0) return 0.0;
    double sum = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        auto nb = g.neighbors(i);
        const std::size_t d = nb.size();
        if (d < 2) continue;
        std::size_t links = 0;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b)
                if (g.adjacent(nb[a], nb[b])) ++links;
        sum += static_cast<double>(links) / (0.5 * double(d) * double(d - 1));
    }
    return sum / n;
}

double characteristic_path_length(const Graph& g) {
    const NodeId n = g.node_count();
    if (n < 2) throw std::invalid_argument("cpl: need at least two nodes");
    long double total = 0.0L;
    std::vector<std::int32_t> dist;
    for (NodeId i = 0; i < n; ++i) {
        bfs_distances(g, i, dist);
        for (NodeId j = i + 1; j < n; ++j) {
            if (dist[j] == kUnreachable)
                throw std::runtime_error("cpl: graph is disconnected");
            total += dist[j];
        }
    }
    return static_cast<double>(total / (0.5L * n * (n - 1)));
}

void dump_edge_list(const Graph& g, std::ostream& os) {
    for (const Edge& e : g.regular_edges())
        os << e.u << ' ' << e.v << " regular\n";
    for (const Edge& e : g.shortcut_edges())
        os << e.u << ' ' << e.v << " shortcut\n";
}

std::string to_string(NetworkKind k) {
    switch (k) {
        case NetworkKind::Ring: return "ring";
        case NetworkKind::Square: return "square";
        case NetworkKind::ClassicalRandom: return "crg";
    }
    return "?";
}

std::string to_string(SmallWorldMode m) {
    switch (m) {
        case SmallWorldMode::None: return "none";
        case SmallWorldMode::InfluenceOnly: return "influence";
        case SmallWorldMode::CollaborationOnly: return "collab";
        case SmallWorldMode::Both: return "both";
    }
    return "?";
}

std::optional<NetworkKind> network_kind_from_string(const std::string& s) {
    if (s == "ring") return NetworkKind::Ring;
    if (s == "square") return NetworkKind::Square;
    if (s == "crg") return NetworkKind::ClassicalRandom;
    return std::nullopt;
}

std::optional<SmallWorldMode> sw_mode_from_string(const std::string& s) {
    if (s == "none") return SmallWorldMode::None;
    if (s == "influence") return SmallWorldMode::InfluenceOnly;
    if (s == "collab") return SmallWorldMode::CollaborationOnly;
    if (s == "both") return SmallWorldMode::Both;
    return std::nullopt;
}

} // namespace growthnet
