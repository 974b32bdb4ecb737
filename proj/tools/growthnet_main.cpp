// growthnet command-line front end.
//
// Subcommands: run (single trajectory), ensemble (Monte Carlo summary),
// mf (representative-agent fixed point and calibration), tables (the two
// scenario suites), metrics (network structure of a generated graph).
// Exit codes: 0 success, 1 configuration error, 2 I/O error.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "growthnet/config.hpp"
#include "growthnet/emit.hpp"
#include "growthnet/harness.hpp"
#include "growthnet/kernels.hpp"
#include "growthnet/meanfield.hpp"
#include "growthnet/scenarios.hpp"

namespace gn = growthnet;

namespace {

struct ConfigFlags {
    std::string preset;
    std::string config_file;
    // key/value pairs in CLI order; applied after preset and file values.
    std::vector<std::pair<std::string, std::string>> overrides;
};

void add_config_options(CLI::App* cmd, ConfigFlags& flags) {
    cmd->add_option("--preset", flags.preset, "Scenario preset name");
    cmd->add_option("--config", flags.config_file, "key=value config file");
    auto track = [&flags](const std::string& key) {
        return [&flags, key](const std::string& value) {
            flags.overrides.emplace_back(key, value);
        };
    };
    cmd->add_option_function<std::string>("--network", track("network"),
                                          "ring | square | crg");
    cmd->add_option_function<std::string>("--n", track("n"), "Number of agents");
    cmd->add_option_function<std::string>("--z", track("z"), "Regular degree");
    cmd->add_option_function<std::string>(
        "--sw", track("sw"), "Shortcut overlay: none | influence | collab | both");
    cmd->add_option_function<std::string>("--p", track("p"),
                                          "Shortcut probability per regular link");
    cmd->add_option_function<std::string>(
        "--collab", track("collab"),
        "Collaboration base graph: same | crg");
    cmd->add_option_function<std::string>("--alpha-prime", track("alpha_prime"),
                                          "Education bias alpha'");
    cmd->add_option_function<std::string>("--delta", track("delta"),
                                          "Skilled marginal productivity");
    cmd->add_option_function<std::string>("--gamma", track("gamma"),
                                          "Team effect parameter");
    cmd->add_option_function<std::string>("--periods", track("periods"),
                                          "Horizon in periods");
    cmd->add_option_function<std::string>("--window", track("window"),
                                          "Steady-state window in generations");
    cmd->add_option_function<std::string>("--runs", track("runs"),
                                          "Ensemble size");
    cmd->add_option_function<std::string>("--seed", track("seed"), "Base seed");
    cmd->add_option_function<std::string>("--skilled-init", track("skilled_init"),
                                          "Initial skilled fraction");
}

gn::SimConfig resolve_config(const ConfigFlags& flags) {
    gn::SimConfig config;
    if (!flags.preset.empty()) {
        auto scenario = gn::find_scenario(flags.preset);
        if (!scenario)
            throw gn::ConfigError("config: unknown preset '" + flags.preset + "'");
        config = scenario->config;
    }
    if (!flags.config_file.empty())
        config = gn::parse_config_file(flags.config_file, config);
    for (const auto& [key, value] : flags.overrides)
        gn::apply_config_key(config, key, value);
    config.validate();
    return config;
}

void print_summary(const gn::EnsembleSummary& s) {
    auto line = [](const char* name, const gn::Stat& st) {
        std::cout << "  " << name << ": ";
        if (st.count == 0) {
            std::cout << "- (no steady runs)\n";
            return;
        }
        std::cout << gn::fmt_sig(st.mean) << "  (se " << gn::fmt_sig(st.stderr_mean)
                  << ", n=" << st.count << ")\n";
    };
    std::cout << "steady runs: " << s.steady_runs << "/" << s.runs
              << "  collapsed: " << s.collapsed_runs
              << "  poverty-trapped: " << s.trapped_runs << "\n";
    line("growth dY/Y", s.growth);
    line("wage ratio w", s.wage_ratio);
    line("skilled seniors S_s", s.skilled_seniors);
    line("unskilled U", s.unskilled);
    line("partitions", s.partitions);
    line("team effect gD", s.team_effect);
    if (!s.diagnostic.empty()) std::cout << "warning: " << s.diagnostic << "\n";
}

int run_command(const ConfigFlags& flags, const std::string& out_dir,
                bool dump_states, std::uint32_t dump_every) {
    gn::SimConfig config = resolve_config(flags);
    const std::filesystem::path dir = out_dir;
    std::vector<std::int64_t> dump_periods;
    gn::PeriodObserver observer;
    if (dump_states) {
        observer = [&](const gn::Population& pop) {
            const auto t = pop.period;
            const bool due = (t == 0) || (dump_every > 0 && t % dump_every == 0) ||
                             t == config.periods;
            if (due)
                gn::emit_state_dump(pop, config, config.base_seed, 0, dir);
        };
    }
    gn::RunResult run = gn::run_single(config, config.base_seed, observer);
    gn::emit_series_csv(run, config, config.base_seed, 0, dir);
    gn::emit_config_echo(config, dir / "config.cfg");
    std::cout << "periods executed: " << run.series.size() << "  termination: "
              << (run.termination == gn::Termination::Steady
                      ? "steady"
                      : run.termination == gn::Termination::Collapsed
                            ? "collapsed"
                            : "poverty-trap")
              << "\n";
    if (run.summary) {
        const auto& s = *run.summary;
        std::cout << "tail means: growth=" << gn::fmt_sig(s.growth)
                  << " w=" << gn::fmt_sig(s.wage_ratio)
                  << " S_s=" << gn::fmt_sig(s.skilled_seniors)
                  << " U=" << gn::fmt_sig(s.unskilled)
                  << " partitions=" << gn::fmt_sig(s.partitions)
                  << " team_eff=" << gn::fmt_sig(s.team_effect) << "\n";
    }
    if (run.shortcut_shortfalls > 0)
        std::cout << "warning: " << run.shortcut_shortfalls
                  << " shortcut refreshes placed fewer than L' edges\n";
    std::cout << "wrote " << (dir / "series_0.csv").string() << "\n";
    return 0;
}

int ensemble_command(const ConfigFlags& flags, const std::string& out_dir,
                     unsigned threads, bool emit_walls, bool emit_series_mean,
                     const std::string& row_name) {
    gn::SimConfig config = resolve_config(flags);
    gn::EnsembleOptions options;
    options.threads = threads;
    options.collect_series_means = emit_walls || emit_series_mean;
    if (emit_walls && config.network.kind != gn::NetworkKind::Ring)
        throw gn::ConfigError("config: wall series requires a ring network");
    const gn::EnsembleSummary summary = gn::run_ensemble(config, options);
    const std::filesystem::path dir = out_dir;
    std::string name = row_name;
    if (name.empty()) name = flags.preset.empty() ? "custom" : flags.preset;
    gn::emit_ensemble_csv({{name, config, summary}}, dir / "ensemble.csv");
    gn::emit_config_echo(config, dir / "config.cfg");
    if (emit_walls)
        gn::emit_walls_csv(*summary.series_means, config, dir / "walls_mean.csv");
    if (emit_series_mean)
        gn::emit_series_mean_csv(*summary.series_means, config,
                                 dir / "series_mean.csv");
    print_summary(summary);
    std::cout << "wrote " << (dir / "ensemble.csv").string() << "\n";
    return 0;
}

int tables_command(const std::string& which, std::uint32_t runs,
                   std::uint64_t seed, bool seed_given, unsigned threads,
                   const std::string& out_dir) {
    const std::filesystem::path dir = out_dir;
    auto run_family = [&](const std::vector<std::string>& names,
                          const std::string& file) {
        std::vector<gn::ScenarioRow> rows;
        for (const std::string& name : names) {
            auto scenario = gn::find_scenario(name);
            gn::SimConfig config = scenario->config;
            if (runs > 0) config.runs = runs;
            if (seed_given) config.base_seed = seed;
            gn::EnsembleOptions options;
            options.threads = threads;
            std::cout << "running " << name << " (" << config.runs
                      << " runs)...\n";
            rows.push_back({name, config, gn::run_ensemble(config, options)});
        }
        gn::emit_ensemble_csv(rows, dir / file);
        std::cout << "wrote " << (dir / file).string() << "\n";
    };
    if (which == "1" || which == "both")
        run_family(gn::table1_scenarios(), "table1.csv");
    if (which == "2" || which == "both")
        run_family(gn::table2_scenarios(), "table2.csv");
    return 0;
}

int mf_command(double lambda, bool lambda_given, std::uint32_t n,
               double alpha_prime, double delta, double growth,
               std::uint32_t years, double u_star, bool u_star_given) {
    gn::MFParams params;
    params.n = n;
    params.alpha_prime = alpha_prime;
    params.delta = delta;
    params.lambda = lambda_given ? lambda : delta * alpha_prime;
    const gn::MFFixedPoint fp = gn::mf_fixed_point(params);
    std::cout << "fixed point (lambda=" << gn::fmt_sig(params.lambda)
              << ", N=" << params.n << ", alpha'=" << gn::fmt_sig(alpha_prime)
              << ", delta=" << gn::fmt_sig(delta) << ")\n"
              << "  branch     : " << (fp.nontrivial ? "nontrivial" : "trivial R*=0")
              << "\n"
              << "  R*         : " << gn::fmt_sig(fp.r_star) << "\n"
              << "  w*         : " << gn::fmt_sig(fp.wage_ratio) << "\n"
              << "  U*         : " << gn::fmt_sig(fp.unskilled) << "\n"
              << "  S_s*       : " << gn::fmt_sig(fp.skilled_seniors) << "\n"
              << "  dY/Y*      : " << gn::fmt_sig(fp.growth) << "\n";
    const double target_u = u_star_given ? u_star : static_cast<double>(n) / 2.0;
    const gn::Calibration cal = gn::calibrate(growth, years, target_u, n);
    std::cout << "calibration (annual growth=" << gn::fmt_sig(growth)
              << ", years/period=" << years << ", U*=" << gn::fmt_sig(target_u)
              << ", N=" << n << ")\n"
              << "  period dY/Y: " << gn::fmt_sig(cal.growth_target) << "\n"
              << "  delta      : " << gn::fmt_sig(cal.delta) << "\n"
              << "  alpha'     : " << gn::fmt_sig(cal.alpha_prime) << "\n"
              << "  lambda     : " << gn::fmt_sig(cal.lambda) << "\n";
    return 0;
}

int metrics_command(const ConfigFlags& flags, const std::string& dump_file) {
    gn::SimConfig config = resolve_config(flags);
    gn::Rng rng(config.base_seed);
    gn::Graph g;
    switch (config.network.kind) {
        case gn::NetworkKind::Ring:
            g = gn::build_ring(config.network.n_agents, config.network.degree);
            break;
        case gn::NetworkKind::Square:
            g = gn::build_square(config.network.n_agents, config.network.degree);
            break;
        case gn::NetworkKind::ClassicalRandom:
            g = gn::build_crg(config.network.n_agents,
                              config.network.regular_edge_target(), rng);
            break;
    }
    if (config.network.sw_mode == gn::SmallWorldMode::InfluenceOnly ||
        config.network.sw_mode == gn::SmallWorldMode::Both) {
        std::vector<gn::NodeId> all(config.network.n_agents);
        std::iota(all.begin(), all.end(), 0);
        g = gn::refresh_shortcuts(std::move(g), all,
                                  config.network.shortcut_count(), rng);
    }
    std::cout << "influence network: " << gn::to_string(config.network.kind)
              << " N=" << g.node_count() << " regular_edges="
              << g.regular_edge_count() << " shortcuts=" << g.shortcut_edge_count()
              << "\n";
    std::cout << "clustering coefficient: " << gn::fmt_sig(gn::clustering_coefficient(g))
              << "\n";
    std::cout << "characteristic path length: "
              << gn::fmt_sig(gn::characteristic_path_length(g)) << "\n";
    if (!dump_file.empty()) {
        std::ofstream os(dump_file);
        if (!os) throw gn::EmitError("emit: cannot write '" + dump_file + "'");
        gn::dump_edge_list(g, os);
        std::cout << "wrote " << dump_file << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"growthnet: network economy simulator"};
    app.require_subcommand(1);

    std::string kernels_choice = "auto";
    app.add_option("--kernels", kernels_choice,
                   "Kernel backend: auto | scalar | avx2");

    ConfigFlags run_flags;
    std::string run_out = "out";
    bool dump_states = false;
    std::uint32_t dump_every = 0;
    auto* run_cmd = app.add_subcommand("run", "Execute a single run");
    add_config_options(run_cmd, run_flags);
    run_cmd->add_option("--out", run_out, "Output directory");
    run_cmd->add_flag("--dump-states", dump_states,
                      "Dump agent state vectors (period 0 and final)");
    run_cmd->add_option("--dump-every", dump_every,
                        "Also dump states every K periods");

    ConfigFlags ens_flags;
    std::string ens_out = "out";
    unsigned threads = 0;
    bool emit_walls = false, emit_series_mean = false;
    std::string row_name;
    auto* ens_cmd = app.add_subcommand("ensemble", "Run an ensemble");
    add_config_options(ens_cmd, ens_flags);
    ens_cmd->add_option("--out", ens_out, "Output directory");
    ens_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");
    ens_cmd->add_flag("--emit-walls", emit_walls, "Write walls_mean.csv (ring)");
    ens_cmd->add_flag("--emit-series-mean", emit_series_mean,
                      "Write series_mean.csv");
    ens_cmd->add_option("--name", row_name, "Row label in ensemble.csv");

    std::string which = "both";
    std::uint32_t table_runs = 0;
    std::uint64_t table_seed = 0;
    std::string tables_out = "out";
    unsigned table_threads = 0;
    auto* tab_cmd = app.add_subcommand("tables", "Reproduce the scenario tables");
    tab_cmd->add_option("--which", which, "1 | 2 | both");
    tab_cmd->add_option("--runs", table_runs, "Override ensemble size");
    auto* seed_opt = tab_cmd->add_option("--seed", table_seed, "Override base seed");
    tab_cmd->add_option("--threads", table_threads, "Worker threads");
    tab_cmd->add_option("--out", tables_out, "Output directory");

    double mf_lambda = 0.0, mf_alpha = 0.45, mf_delta = 0.011;
    double mf_growth = 0.03, mf_ustar = 0.0;
    std::uint32_t mf_n = 400, mf_years = 25;
    auto* mf_cmd = app.add_subcommand("mf", "Mean-field fixed point and calibration");
    auto* lambda_opt = mf_cmd->add_option("--lambda", mf_lambda, "lambda = delta*alpha'");
    mf_cmd->add_option("--n", mf_n, "Population size");
    mf_cmd->add_option("--alpha-prime", mf_alpha, "Education bias");
    mf_cmd->add_option("--delta", mf_delta, "Skilled productivity");
    mf_cmd->add_option("--growth", mf_growth, "Annual growth target");
    mf_cmd->add_option("--years", mf_years, "Years per period");
    auto* ustar_opt = mf_cmd->add_option("--u-star", mf_ustar, "Target U*");

    ConfigFlags met_flags;
    std::string dump_graph;
    auto* met_cmd = app.add_subcommand("metrics", "Network structure metrics");
    add_config_options(met_cmd, met_flags);
    met_cmd->add_option("--dump-graph", dump_graph, "Edge-list dump file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (kernels_choice == "scalar")
            gn::kernels::set_backend(gn::kernels::Backend::Scalar);
        else if (kernels_choice == "avx2")
            gn::kernels::set_backend(gn::kernels::Backend::Avx2);
        else if (kernels_choice != "auto")
            throw gn::ConfigError("config: unknown kernel backend '" +
                                  kernels_choice + "'");

        if (run_cmd->parsed())
            return run_command(run_flags, run_out, dump_states, dump_every);
        if (ens_cmd->parsed())
            return ensemble_command(ens_flags, ens_out, threads, emit_walls,
                                    emit_series_mean, row_name);
        if (tab_cmd->parsed()) {
            if (which != "1" && which != "2" && which != "both")
                throw gn::ConfigError("config: --which must be 1, 2 or both");
            return tables_command(which, table_runs, table_seed,
                                  seed_opt->count() > 0, table_threads,
                                  tables_out);
        }
        if (mf_cmd->parsed())
            return mf_command(mf_lambda, lambda_opt->count() > 0, mf_n, mf_alpha,
                              mf_delta, mf_growth, mf_years, mf_ustar,
                              ustar_opt->count() > 0);
        if (met_cmd->parsed()) return metrics_command(met_flags, dump_graph);
    } catch (const gn::EmitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
