#include "growthnet/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "growthnet/kernels.hpp"

namespace growthnet {

StateCounts counts(const Population& pop) {
    std::size_t c[4];
    kernels::count_states(pop.states.data(), pop.states.size(), c);
    return {c[0], c[1], c[2], c[3]};
}

void validate(const Population& pop) {
    const StateCounts c = counts(pop);
    const std::size_t n = pop.size();
    if (n % 2 != 0)
        throw std::invalid_argument("population: N must be even");
    if (c.juniors() != n / 2 || c.seniors() != n / 2)
        throw std::invalid_argument(
            "population: junior/senior counts must both equal N/2");
}

Population initialize(std::uint32_t n, double skilled_fraction, Rng& rng) {
    if (n == 0 || n % 2 != 0)
        throw std::invalid_argument("initialize: N must be positive and even");
    if (skilled_fraction < 0.0 || skilled_fraction > 1.0)
        throw std::invalid_argument("initialize: skilled_fraction outside [0,1]");
    const double exact = skilled_fraction * static_cast<double>(n);
    const auto skilled = static_cast<std::uint64_t>(std::llround(exact));
    if (std::abs(exact - static_cast<double>(skilled)) > 1e-9)
        throw std::invalid_argument(
            "initialize: skilled_fraction * N is not an integer");
    if (skilled % 2 != 0)
        throw std::invalid_argument(
            "initialize: skilled count must split evenly into juniors/seniors");
    if ((n - skilled) % 2 != 0)
        throw std::invalid_argument(
            "initialize: unskilled count must split evenly into juniors/seniors");

    Population pop;
    pop.states.reserve(n);
    const std::size_t js = skilled / 2;
    const std::size_t ju = (n - skilled) / 2;
    pop.states.insert(pop.states.end(), js, 0);
    pop.states.insert(pop.states.end(), ju, 1);
    pop.states.insert(pop.states.end(), js, 2);
    pop.states.insert(pop.states.end(), ju, 3);
    // Fisher-Yates with the portable bounded draw.
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = rng.below(i + 1);
        std::swap(pop.states[i], pop.states[j]);
    }
    pop.period = 0;
    return pop;
}

Population step(const Population& pop, const Graph& influence, double r_w) {
    validate(pop);
    const std::size_t n = pop.size();
    if (influence.node_count() != n)
        throw std::invalid_argument("step: graph/population size mismatch");

    Population next;
    next.states.resize(n);
    next.period = pop.period + 1;
    const std::uint8_t* s = pop.states.data();
    for (NodeId i = 0; i < n; ++i) {
        const std::uint8_t v = s[i];
        if (v < 2) {
            next.states[i] = v + 2; // promotion
            continue;
        }
        std::size_t sk = 0, un = 0;
        for (NodeId j : influence.neighbors(i)) {
            sk += (s[j] == 0);
            un += (s[j] == 1);
        }
        next.states[i] =
            decide(r_w, sk, un) == Choice::Skilled ? 0 : 1;
    }
    return next;
}

std::vector<NodeId> skilled_senior_nodes(const Population& pop) {
    std::vector<NodeId> out;
    for (NodeId i = 0; i < pop.size(); ++i)
        if (pop.states[i] == 2) out.push_back(i);
    return out;
}

} // namespace growthnet
