// CSV and text emission. All numeric cells use fixed-decimal notation
// with six significant digits; every file opens with metadata comment
// lines recording seed, config hash and the conventions in effect.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "growthnet/config.hpp"
#include "growthnet/harness.hpp"
#include "growthnet/scenarios.hpp"

namespace growthnet {

struct EmitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed-decimal formatting with six significant digits.
std::string fmt_sig(double x);

struct ScenarioRow {
    std::string name;
    SimConfig config;
    EnsembleSummary summary;
};

// ensemble.csv style table: one row per scenario with means, standard
// errors and absorption counts. Empty mean cells when no steady runs.
void emit_ensemble_csv(const std::vector<ScenarioRow>& rows,
                       const std::filesystem::path& file);

// series_<run>.csv: per-period observables of a single run. The walls
// column is filled for ring-family networks and left empty otherwise.
void emit_series_csv(const RunResult& run, const SimConfig& config,
                     std::uint64_t seed, std::uint32_t run_index,
                     const std::filesystem::path& dir);

// states_<run>_<t>.txt: one sigma code per agent, space separated.
void emit_state_dump(const Population& pop, const SimConfig& config,
                     std::uint64_t seed, std::uint32_t run_index,
                     const std::filesystem::path& dir);

// (t, mean walls, alive) rows from ensemble series means.
void emit_walls_csv(const SeriesMeans& means, const SimConfig& config,
                    const std::filesystem::path& file);

// (t, mean S_s, mean U, alive) rows.
void emit_series_mean_csv(const SeriesMeans& means, const SimConfig& config,
                          const std::filesystem::path& file);

// config.cfg echo; parse_config_file() on it reproduces the SimConfig.
void emit_config_echo(const SimConfig& config, const std::filesystem::path& file);

} // namespace growthnet
