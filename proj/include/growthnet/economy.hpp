// Ideas stock, output, wages and the education decision weight.
// Y(t) = A(t) U(t); dA = A(t-1) (delta S_s + gamma D); the wage split is
// Y_s = dA U, Y_u = A(t-1) U.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "growthnet/graph.hpp"

namespace growthnet {

struct EconParams {
    double delta = 0.011;       // skilled marginal productivity
    double gamma = 0.0;         // team effect weight
    double alpha_prime = 0.45;  // education bias

    double lambda() const { return delta * alpha_prime; }
};

struct IdeasUpdate {
    double stock = 0.0;  // A(t)
    double change = 0.0; // A(t) - A(t-1)
};

struct Wages {
    double output = 0.0;       // Y
    double skilled_bill = 0.0; // Y_s
    double unskilled_bill = 0.0;
    double skilled_wage = 0.0;   // w_s (0 when S_s = 0)
    double unskilled_wage = 0.0; // w_u = A(t-1)
    bool poverty_flagged = false; // S_s = 0 this period
    bool collapse_flagged = false; // U = 0 this period
};

// Dense all-pairs distance table (row-major int32, -1 = unreachable),
// built by one BFS per node. Used when the collaboration graph is static
// so team densities reduce to masked row sums.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph& g);

    std::uint32_t size() const { return n_; }
    const std::int32_t* row(NodeId i) const { return data_.data() + std::size_t(i) * n_; }

private:
    std::uint32_t n_ = 0;
    std::vector<std::int32_t> data_;
};

// Team density D = (1/S_s) * sum over ordered pairs (i,j), i != j, of
// 1/d(i,j) across skilled seniors. Unreachable pairs contribute 0;
// D = 0 when fewer than two skilled seniors exist.
double team_density(std::span<const NodeId> skilled_seniors, const Graph& collab);
double team_density(std::span<const NodeId> skilled_seniors,
                    const DistanceMatrix& distances);

// dA = A_prev * (delta * S_s + gamma * D); A = A_prev + dA.
IdeasUpdate update_ideas(double a_prev, std::size_t skilled_seniors, double d,
                         const EconParams& params);

Wages compute_wages(double a_prev, double delta_a, std::size_t unskilled,
                    std::size_t skilled_seniors);

// r_w(t) = alpha' * w_s(t-1) / w_u(t-1); 0 when the unskilled wage is 0.
double relative_weight(double skilled_wage_prev, double unskilled_wage_prev,
                       double alpha_prime);

// First-period weight: no production has happened, wages start equal,
// so the weight reduces to the bias alone.
inline double initial_relative_weight(double alpha_prime) { return alpha_prime; }

} // namespace growthnet
