#include "growthnet/economy.hpp"

#include <stdexcept>

#include "growthnet/kernels.hpp"
#include "growthnet/topology.hpp"

namespace growthnet {

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.node_count()) {
    data_.resize(std::size_t(n_) * n_);
    std::vector<std::int32_t> dist;
    for (NodeId i = 0; i < n_; ++i) {
        bfs_distances(g, i, dist);
        std::copy(dist.begin(), dist.end(), data_.begin() + std::size_t(i) * n_);
    }
}

namespace {

std::vector<std::uint8_t> make_mask(std::span<const NodeId> nodes, std::size_t n) {
    std::vector<std::uint8_t> mask(n, 0);
    for (NodeId i : nodes) mask[i] = 1;
    return mask;
}

} // namespace

double team_density(std::span<const NodeId> skilled_seniors, const Graph& collab) {
    const std::size_t s = skilled_seniors.size();
    if (s <= 1) return 0.0;
    const auto mask = make_mask(skilled_seniors, collab.node_count());
    std::vector<std::int32_t> dist;
    double total = 0.0;
    for (NodeId i : skilled_seniors) {
        bfs_distances(collab, i, dist);
        total += kernels::masked_inv_sum(dist.data(), mask.data(), dist.size());
    }
    return total / static_cast<double>(s);
}

double team_density(std::span<const NodeId> skilled_seniors,
                    const DistanceMatrix& distances) {
    const std::size_t s = skilled_seniors.size();
    if (s <= 1) return 0.0;
    const auto mask = make_mask(skilled_seniors, distances.size());
    double total = 0.0;
    for (NodeId i : skilled_seniors)
        total += kernels::masked_inv_sum(distances.row(i), mask.data(),
                                         distances.size());
    return total / static_cast<double>(s);
}

IdeasUpdate update_ideas(double a_prev, std::size_t skilled_seniors, double d,
                         const EconParams& params) {
    if (a_prev <= 0.0)
        throw std::invalid_argument("update_ideas: A must stay positive");
    const double change =
        a_prev * (params.delta * static_cast<double>(skilled_seniors) +
                  params.gamma * d);
    return {a_prev + change, change};
}

Wages compute_wages(double a_prev, double delta_a, std::size_t unskilled,
                    std::size_t skilled_seniors) {
    Wages w;
    const auto u = static_cast<double>(unskilled);
    w.skilled_bill = delta_a * u;
    w.unskilled_bill = a_prev * u;
    w.output = (a_prev + delta_a) * u;
    w.unskilled_wage = a_prev;
    w.poverty_flagged = (skilled_seniors == 0);
    w.collapse_flagged = (unskilled == 0);
    w.skilled_wage = w.poverty_flagged
                         ? 0.0
                         : delta_a * u / static_cast<double>(skilled_seniors);
    return w;
}

double relative_weight(double skilled_wage_prev, double unskilled_wage_prev,
                       double alpha_prime) {
    if (unskilled_wage_prev <= 0.0) return 0.0;
    return alpha_prime * skilled_wage_prev / unskilled_wage_prev;
}

} // namespace growthnet
