// Network construction and structure metrics: ring / torus lattices, the
// classical random graph process, transient shortcut overlays, BFS
// distances, clustering coefficient and characteristic path length.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "growthnet/graph.hpp"
#include "growthnet/rng.hpp"

namespace growthnet {

enum class NetworkKind { Ring, Square, ClassicalRandom };
enum class SmallWorldMode { None, InfluenceOnly, CollaborationOnly, Both };
enum class OverlayLayer { Influence, Collaboration };

struct NetworkSpec {
    NetworkKind kind = NetworkKind::Ring;
    std::uint32_t n_agents = 400;
    std::uint32_t degree = 6; // regular degree z
    SmallWorldMode sw_mode = SmallWorldMode::None;
    double shortcut_prob = 0.0; // P per regular link

    std::size_t regular_edge_target() const {
        return static_cast<std::size_t>(n_agents) * degree / 2;
    }
    // L' = round(L * P)
    std::size_t shortcut_count() const;
};

// Each node i is adjacent to i+-1, ..., i+-z/2 (mod N). Throws on odd z,
// z < 2 or z >= N.
Graph build_ring(std::uint32_t n, std::uint32_t z);

// Periodic square lattice; z=4 von Neumann, z=8 Moore neighborhoods.
// N must be a perfect square; side >= 3 for z=4 and side >= 5 for z=8.
Graph build_square(std::uint32_t n, std::uint32_t z);

// Classical random graph: L distinct random edges, whole graph resampled
// until connected. Throws after `max_attempts` disconnected samples.
Graph build_crg(std::uint32_t n, std::size_t l, Rng& rng,
                int max_attempts = 1000);

// Discards the previous shortcut class and draws `count` fresh shortcut
// edges uniformly among not-already-adjacent pairs of `eligible` nodes.
// If fewer than `count` pairs are feasible, adds all of them and reports
// the shortfall through `added` (when non-null, receives the number of
// shortcuts actually placed).
Graph refresh_shortcuts(Graph g, std::span<const NodeId> eligible,
                        std::size_t count, Rng& rng,
                        std::size_t* added = nullptr);

inline constexpr std::int32_t kUnreachable = -1;

// Unweighted BFS distances from `source`; unreachable nodes get -1.
// The out-buffer form avoids reallocation in per-period loops.
void bfs_distances(const Graph& g, NodeId source, std::vector<std::int32_t>& dist);
std::vector<std::int32_t> bfs_distances(const Graph& g, NodeId source);

// Mean over nodes of (edges among neighbors) / (deg*(deg-1)/2); nodes of
// degree < 2 contribute 0.
double clustering_coefficient(const Graph& g);

// Mean shortest-path length over unordered pairs. Throws on disconnected
// graphs or n < 2.
double characteristic_path_length(const Graph& g);

// Edge-list dump, one "u v class" triple per line.
void dump_edge_list(const Graph& g, std::ostream& os);

std::string to_string(NetworkKind k);
std::string to_string(SmallWorldMode m);
std::optional<NetworkKind> network_kind_from_string(const std::string& s);
std::optional<SmallWorldMode> sw_mode_from_string(const std::string& s);

} // namespace growthnet
