#include "growthnet/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace growthnet {

void Graph::add_regular_edge(NodeId a, NodeId b) {
    if (a == b) throw std::invalid_argument("graph: self-loop");
    if (!shortcuts_.empty())
        throw std::logic_error("graph: regular edges must precede shortcuts");
    if (a > b) std::swap(a, b);
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    ++regular_degree_[a];
    ++regular_degree_[b];
    regular_.push_back({a, b});
}

void Graph::set_shortcuts(std::vector<Edge> shortcuts) {
    for (NodeId i = 0; i < node_count(); ++i)
        adj_[i].resize(regular_degree_[i]);
    for (auto& e : shortcuts) {
        if (e.u > e.v) std::swap(e.u, e.v);
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    shortcuts_ = std::move(shortcuts);
}

bool Graph::is_simple() const {
    for (NodeId i = 0; i < node_count(); ++i) {
        auto nb = adj_[i];
        std::vector<NodeId> s(nb.begin(), nb.end());
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
        if (std::find(s.begin(), s.end(), i) != s.end()) return false;
    }
    return true;
}

bool Graph::is_connected() const {
    const NodeId n = node_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    NodeId reached = 1;
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (NodeId y : adj_[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

} // namespace growthnet
