#include "growthnet/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace growthnet {

std::string fmt_sig(double x) {
    if (!std::isfinite(x)) return "nan";
    if (x == 0.0) return "0.00000";
    const double ax = std::abs(x);
    const int exponent = static_cast<int>(std::floor(std::log10(ax)));
    int decimals = 5 - exponent;
    if (decimals < 0) decimals = 0;
    if (decimals > 17) decimals = 17;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

namespace {

std::ofstream open_sink(const std::filesystem::path& file) {
    if (file.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(file.parent_path(), ec);
    }
    std::ofstream os(file);
    if (!os) throw EmitError("emit: cannot write '" + file.string() + "'");
    return os;
}

void metadata_header(std::ostream& os, const SimConfig& config,
                     const char* what) {
    os << "# growthnet " << what << " seed=" << config.base_seed
       << " config_hash=" << config_hash(config)
       << " conventions=promoted-senior-decision,alpha-prime-first-weight,"
          "ordered-pair-density,wholesale-shortcut-refresh\n";
    os << "# partitions=" << (config.network.kind == NetworkKind::Ring
                                  ? "cycle-runs"
                                  : "regular-adjacency-components")
       << " tail=generation-averaged-last-" << config.window_generations
       << "-generations\n";
}

void stat_cells(std::ostream& os, const Stat& s) {
    if (s.count == 0) {
        os << ",,";
        return;
    }
    os << ',' << fmt_sig(s.mean) << ',' << fmt_sig(s.stderr_mean);
}

} // namespace

void emit_ensemble_csv(const std::vector<ScenarioRow>& rows,
                       const std::filesystem::path& file) {
    if (rows.empty()) throw EmitError("emit: no scenario rows");
    auto os = open_sink(file);
    metadata_header(os, rows.front().config, "ensemble");
    os << "scenario,runs,steady_runs,collapsed,trapped"
          ",growth,growth_se,w,w_se,s_s,s_s_se,u,u_se"
          ",partitions,partitions_se,team_eff,team_eff_se\n";
    for (const ScenarioRow& row : rows) {
        const EnsembleSummary& s = row.summary;
        os << row.name << ',' << s.runs << ',' << s.steady_runs << ','
           << s.collapsed_runs << ',' << s.trapped_runs;
        stat_cells(os, s.growth);
        stat_cells(os, s.wage_ratio);
        stat_cells(os, s.skilled_seniors);
        stat_cells(os, s.unskilled);
        stat_cells(os, s.partitions);
        stat_cells(os, s.team_effect);
        os << '\n';
    }
    if (!os) throw EmitError("emit: write failed for '" + file.string() + "'");
}

void emit_series_csv(const RunResult& run, const SimConfig& config,
                     std::uint64_t seed, std::uint32_t run_index,
                     const std::filesystem::path& dir) {
    auto os = open_sink(dir / ("series_" + std::to_string(run_index) + ".csv"));
    metadata_header(os, config, "series");
    os << "# run_seed=" << seed << " termination="
       << (run.termination == Termination::Steady
               ? "steady"
               : run.termination == Termination::Collapsed ? "collapsed"
                                                           : "poverty-trap")
       << '\n';
    const bool ring = config.network.kind == NetworkKind::Ring;
    os << "period,s_s,u,growth,w,team_eff,partitions,walls\n";
    for (std::size_t t = 0; t < run.series.size(); ++t) {
        const PeriodRecord& r = run.series[t];
        os << (t + 1) << ',' << r.skilled_seniors << ',' << r.unskilled << ','
           << fmt_sig(r.growth) << ',' << fmt_sig(r.wage_ratio) << ','
           << fmt_sig(r.team_effect) << ',' << r.partitions << ',';
        if (ring) os << walls_from_partitions(r.partitions);
        os << '\n';
    }
    if (!os) throw EmitError("emit: write failed in '" + dir.string() + "'");
}

void emit_state_dump(const Population& pop, const SimConfig& config,
                     std::uint64_t seed, std::uint32_t run_index,
                     const std::filesystem::path& dir) {
    auto os = open_sink(dir / ("states_" + std::to_string(run_index) + "_" +
                               std::to_string(pop.period) + ".txt"));
    metadata_header(os, config, "states");
    os << "# run_seed=" << seed << " period=" << pop.period << '\n';
    for (std::size_t i = 0; i < pop.states.size(); ++i) {
        if (i) os << ' ';
        os << static_cast<int>(pop.states[i]);
    }
    os << '\n';
    if (!os) throw EmitError("emit: write failed in '" + dir.string() + "'");
}

void emit_walls_csv(const SeriesMeans& means, const SimConfig& config,
                    const std::filesystem::path& file) {
    auto os = open_sink(file);
    metadata_header(os, config, "walls");
    os << "period,mean_walls,alive_runs\n";
    for (std::size_t t = 0; t < means.walls.size(); ++t)
        os << (t + 1) << ',' << fmt_sig(means.walls[t]) << ',' << means.alive[t]
           << '\n';
    if (!os) throw EmitError("emit: write failed for '" + file.string() + "'");
}

void emit_series_mean_csv(const SeriesMeans& means, const SimConfig& config,
                          const std::filesystem::path& file) {
    auto os = open_sink(file);
    metadata_header(os, config, "series-mean");
    os << "period,mean_s_s,mean_u,alive_runs\n";
    for (std::size_t t = 0; t < means.skilled_seniors.size(); ++t)
        os << (t + 1) << ',' << fmt_sig(means.skilled_seniors[t]) << ','
           << fmt_sig(means.unskilled[t]) << ',' << means.alive[t] << '\n';
    if (!os) throw EmitError("emit: write failed for '" + file.string() + "'");
}

void emit_config_echo(const SimConfig& config, const std::filesystem::path& file) {
    auto os = open_sink(file);
    os << serialize_config(config);
    if (!os) throw EmitError("emit: write failed for '" + file.string() + "'");
}

} // namespace growthnet
