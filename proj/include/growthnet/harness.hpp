// Single-run and ensemble orchestration: per-period scheduling, shortcut
// refresh, absorption handling, segregation observables and steady-state
// statistics.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "growthnet/dynamics.hpp"
#include "growthnet/economy.hpp"
#include "growthnet/topology.hpp"

namespace growthnet {

// Base graph used for collaboration distances. SameAsInfluence shares the
// influence network's regular graph; ClassicalRandom builds a separate
// connected CRG with the same N and L for the distance layer only.
enum class CollabBase { SameAsInfluence, ClassicalRandom };

struct SimConfig {
    NetworkSpec network;
    CollabBase collab_base = CollabBase::SameAsInfluence;
    EconParams econ;
    std::uint32_t periods = 600;            // horizon T
    std::uint32_t window_generations = 100; // steady-state tail W
    std::uint32_t runs = 1000;
    std::uint64_t base_seed = 20080011;
    double skilled_fraction_init = 0.5;

    void validate() const; // throws std::invalid_argument
};

enum class Termination { Steady, Collapsed, PovertyTrap };

struct PeriodRecord {
    std::uint32_t skilled_seniors = 0;
    std::uint32_t unskilled = 0;
    double growth = 0.0;   // (Y(t) - Y(t-1)) / Y(t-1)
    double wage_ratio = 0.0;
    double team_effect = 0.0; // gamma * D(t)
    std::uint32_t partitions = 0;
};

struct SteadySummary {
    double growth = 0.0;
    double wage_ratio = 0.0;
    double skilled_seniors = 0.0;
    double unskilled = 0.0;
    double partitions = 0.0;
    double team_effect = 0.0;
};

struct RunResult {
    std::vector<PeriodRecord> series; // one entry per executed period
    Termination termination = Termination::Steady;
    std::optional<SteadySummary> summary; // only for Steady
    std::uint64_t invariant_checks = 0;
    std::size_t shortcut_shortfalls = 0; // refreshes that could not place L'
};

struct Stat {
    double mean = 0.0;
    double stderr_mean = 0.0;
    std::size_t count = 0;
};

struct SeriesMeans {
    // Per-period means over runs still alive at that period.
    std::vector<double> skilled_seniors;
    std::vector<double> unskilled;
    std::vector<double> walls;
    std::vector<std::uint32_t> alive;
};

struct EnsembleSummary {
    Stat growth, wage_ratio, skilled_seniors, unskilled, partitions, team_effect;
    std::uint32_t runs = 0;
    std::uint32_t steady_runs = 0;
    std::uint32_t collapsed_runs = 0;
    std::uint32_t trapped_runs = 0;
    std::uint64_t invariant_checks = 0;
    std::optional<SeriesMeans> series_means;
    std::string diagnostic; // set when no run reached a steady state
};

struct EnsembleOptions {
    bool collect_series_means = false;
    unsigned threads = 0; // 0 = hardware concurrency
};

// Called after initialization (period 0) and after every executed period.
using PeriodObserver = std::function<void(const Population&)>;

// Executes the per-period schedule: weight from t-1 wages (alpha' at
// t=1), synchronous step on the influence graph, overlay refresh, team
// density on the collaboration graph, ideas/wages update, observables.
// Terminates early on U = 0 (collapse) or S_s = J_s = 0 (poverty trap).
// Population and wage-split identities are asserted every period and
// throw InvariantViolation on failure.
RunResult run_single(const SimConfig& config, std::uint64_t seed,
                     const PeriodObserver& observer = {});

// Independent runs with seeds base_seed + k. Absorbed runs are excluded
// from the steady-state statistics but counted.
EnsembleSummary run_ensemble(const SimConfig& config,
                             const EnsembleOptions& options = {});

// Domain count of the skilled/unskilled classification. Ring-family
// networks count maximal same-class runs around the index cycle; square
// lattices and classical random graphs count connected same-class
// components under the regular adjacency (shortcuts never enter).
std::uint32_t count_partitions(const Population& pop, const NetworkSpec& network);
std::uint32_t count_partitions(const Population& pop, const NetworkSpec& network,
                               const Graph& regular);

// Ring-only wall count: 0 when one domain spans the ring, otherwise equal
// to the partition count. Throws for square/CRG networks.
std::vector<std::uint32_t> wall_series(const RunResult& run,
                                       const NetworkSpec& network);
std::uint32_t walls_from_partitions(std::uint32_t partitions);

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace growthnet
