// Undirected simple graph with edges partitioned into a fixed "regular"
// class and a replaceable "shortcut" class. Adjacency lists keep regular
// neighbors in a prefix so shortcuts can be swapped out cheaply.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace growthnet {

using NodeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class EdgeClass { Regular, Shortcut };

class Graph {
public:
    Graph() = default;
    explicit Graph(NodeId n) : adj_(n), regular_degree_(n, 0) {}

    NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
    std::size_t regular_edge_count() const { return regular_.size(); }
    std::size_t shortcut_edge_count() const { return shortcuts_.size(); }
    std::size_t edge_count() const { return regular_.size() + shortcuts_.size(); }

    std::span<const NodeId> neighbors(NodeId i) const { return adj_[i]; }
    std::size_t degree(NodeId i) const { return adj_[i].size(); }

    const std::vector<Edge>& regular_edges() const { return regular_; }
    const std::vector<Edge>& shortcut_edges() const { return shortcuts_; }

    bool adjacent(NodeId a, NodeId b) const {
        // Scan the shorter list; degrees here are small.
        if (adj_[a].size() > adj_[b].size()) std::swap(a, b);
        for (NodeId x : adj_[a])
            if (x == b) return true;
        return false;
    }

    // Build phase. Callers must not create self-loops or duplicates;
    // add_regular_edge is only valid before any shortcut exists.
    void add_regular_edge(NodeId a, NodeId b);

    // Replaces the entire shortcut class.
    void set_shortcuts(std::vector<Edge> shortcuts);

    bool is_simple() const;
    bool is_connected() const;

private:
    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::uint32_t> regular_degree_;
    std::vector<Edge> regular_;
    std::vector<Edge> shortcuts_;
};

} // namespace growthnet
