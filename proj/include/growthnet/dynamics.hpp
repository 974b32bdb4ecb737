// Agent population and the synchronous per-period update: juniors are
// promoted, seniors are replaced by newborns whose education choice is a
// weighted majority over the just-promoted seniors in their neighborhood.
#pragma once

#include <cstdint>
#include <vector>

#include "growthnet/graph.hpp"
#include "growthnet/rng.hpp"

namespace growthnet {

// sigma values; the numeric codes appear in state dumps.
enum class AgentState : std::uint8_t {
    SkilledJunior = 0,
    UnskilledJunior = 1,
    SkilledSenior = 2,
    UnskilledSenior = 3,
};

struct Population {
    std::vector<std::uint8_t> states; // AgentState codes, one per node
    std::int64_t period = 0;

    std::size_t size() const { return states.size(); }
};

struct StateCounts {
    std::size_t skilled_juniors = 0;
    std::size_t unskilled_juniors = 0;
    std::size_t skilled_seniors = 0;
    std::size_t unskilled_seniors = 0;

    std::size_t unskilled() const { return unskilled_juniors + unskilled_seniors; }
    std::size_t juniors() const { return skilled_juniors + unskilled_juniors; }
    std::size_t seniors() const { return skilled_seniors + unskilled_seniors; }

    friend bool operator==(const StateCounts&, const StateCounts&) = default;
};

enum class Choice { Skilled, Unskilled };

StateCounts counts(const Population& pop);

// Throws std::invalid_argument unless juniors == seniors == N/2.
void validate(const Population& pop);

// N/2 juniors and N/2 seniors; skilled_fraction of the population is
// skilled, split evenly between the age classes; placement is a uniform
// random permutation. Requires integral, even skilled counts.
Population initialize(std::uint32_t n, double skilled_fraction, Rng& rng);

// Education choice: Skilled iff r_w * skilled_nbrs > unskilled_nbrs
// (strict; ties and empty neighborhoods give Unskilled).
inline Choice decide(double r_w, std::size_t skilled_nbrs,
                     std::size_t unskilled_nbrs) {
    return r_w * static_cast<double>(skilled_nbrs) >
                   static_cast<double>(unskilled_nbrs)
               ? Choice::Skilled
               : Choice::Unskilled;
}

// One synchronous period: every junior becomes the corresponding senior
// (0->2, 1->3) and every senior is replaced by a newborn junior. The
// newborn at node i applies decide() to the skill counts of neighbors
// holding juniors in `pop` -- the cohort promoted to senior within this
// same update. All reads are from `pop`, all writes simultaneous.
Population step(const Population& pop, const Graph& influence, double r_w);

// Nodes currently holding skilled seniors, ascending.
std::vector<NodeId> skilled_senior_nodes(const Population& pop);

} // namespace growthnet
