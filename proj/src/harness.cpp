#include "growthnet/harness.hpp"

#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace growthnet {

namespace {

constexpr double kIdentityTol = 1e-12;
// Power-of-two rescale keeps every reported ratio bit-exact while the
// ideas stock grows geometrically past the double range.
constexpr double kRescaleThreshold = 0x1p500;
constexpr double kRescaleFactor = 0x1p-500;

void check(bool ok, const char* what, std::int64_t period) {
    if (!ok) {
        std::ostringstream os;
        os << "invariant violated at period " << period << ": " << what;
        throw InvariantViolation(os.str());
    }
}

bool close(double a, double b, double tol) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

std::uint32_t ring_partitions(const Population& pop) {
    const std::size_t n = pop.size();
    std::uint32_t changes = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool a = pop.states[i] == 1 || pop.states[i] == 3;
        const bool b = pop.states[(i + 1) % n] == 1 || pop.states[(i + 1) % n] == 3;
        changes += (a != b);
    }
    return changes > 0 ? changes : 1;
}

std::uint32_t component_partitions(const Population& pop, const Graph& regular) {
    const std::size_t n = pop.size();
    std::vector<NodeId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](NodeId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto same_class = [&](NodeId a, NodeId b) {
        const bool ua = pop.states[a] == 1 || pop.states[a] == 3;
        const bool ub = pop.states[b] == 1 || pop.states[b] == 3;
        return ua == ub;
    };
    for (const Edge& e : regular.regular_edges())
        if (same_class(e.u, e.v)) {
            NodeId ra = find(e.u), rb = find(e.v);
            if (ra != rb) parent[ra] = rb;
        }
    std::uint32_t components = 0;
    for (NodeId i = 0; i < n; ++i)
        if (find(i) == i) ++components;
    return components;
}

struct EconTrack {
    double a_prev = 1.0;
    double y_prev = 0.0;
    double ws_prev = 0.0;
    double wu_prev = 0.0;
    bool first = true;
};

} // namespace

void SimConfig::validate() const {
    const auto n = network.n_agents;
    if (n == 0 || n % 2 != 0)
        throw std::invalid_argument("config: N must be positive and even");
    switch (network.kind) {
        case NetworkKind::Ring:
            if (network.degree % 2 != 0 || network.degree < 2 ||
                network.degree >= n)
                throw std::invalid_argument("config: ring needs even 2 <= z < N");
            break;
        case NetworkKind::Square: {
            const auto side =
                static_cast<std::uint32_t>(std::lround(std::sqrt(double(n))));
            if (side * side != n)
                throw std::invalid_argument("config: square needs perfect-square N");
            if (network.degree != 4 && network.degree != 8)
                throw std::invalid_argument("config: square needs z in {4,8}");
            if (side < (network.degree == 8 ? 5u : 3u))
                throw std::invalid_argument("config: lattice side too small for z");
            break;
        }
        case NetworkKind::ClassicalRandom: {
            const std::size_t l = network.regular_edge_target();
            if (l > std::size_t(n) * (n - 1) / 2)
                throw std::invalid_argument("config: crg L exceeds N(N-1)/2");
            if (n > 1 && l + 1 < n)
                throw std::invalid_argument("config: crg L < N-1 cannot connect");
            break;
        }
    }
    if (network.shortcut_prob < 0.0)
        throw std::invalid_argument("config: p must be non-negative");
    if (network.shortcut_prob > 0.0 && network.sw_mode == SmallWorldMode::None)
        throw std::invalid_argument("config: p requires an sw mode");
    if (econ.delta <= 0.0) throw std::invalid_argument("config: delta must be > 0");
    if (econ.gamma < 0.0) throw std::invalid_argument("config: gamma must be >= 0");
    if (econ.alpha_prime <= 0.0)
        throw std::invalid_argument("config: alpha_prime must be > 0");
    if (window_generations == 0)
        throw std::invalid_argument("config: window must be >= 1");
    if (periods < 2 * window_generations)
        throw std::invalid_argument("config: periods must cover 2*window");
    if (runs == 0) throw std::invalid_argument("config: runs must be >= 1");
    if (skilled_fraction_init < 0.0 || skilled_fraction_init > 1.0)
        throw std::invalid_argument("config: skilled_init outside [0,1]");
    const double k = skilled_fraction_init * static_cast<double>(n);
    const double rounded = std::round(k);
    if (std::abs(k - rounded) > 1e-9 ||
        std::llround(rounded) % 2 != 0 ||
        (std::int64_t(n) - std::llround(rounded)) % 2 != 0)
        throw std::invalid_argument(
            "config: skilled_init must give even skilled and unskilled counts");
}

std::uint32_t count_partitions(const Population& pop, const NetworkSpec& network,
                               const Graph& regular) {
    if (network.kind == NetworkKind::Ring) return ring_partitions(pop);
    return component_partitions(pop, regular);
}

std::uint32_t count_partitions(const Population& pop, const NetworkSpec& network) {
    switch (network.kind) {
        case NetworkKind::Ring:
            return ring_partitions(pop);
        case NetworkKind::Square: {
            const Graph g = build_square(network.n_agents, network.degree);
            return component_partitions(pop, g);
        }
        case NetworkKind::ClassicalRandom:
            throw std::invalid_argument(
                "count_partitions: CRG needs the sampled graph");
    }
    return 0;
}

std::uint32_t walls_from_partitions(std::uint32_t partitions) {
    return partitions <= 1 ? 0 : partitions;
}

std::vector<std::uint32_t> wall_series(const RunResult& run,
                                       const NetworkSpec& network) {
    if (network.kind != NetworkKind::Ring)
        throw std::invalid_argument("wall_series: walls are defined on rings only");
    std::vector<std::uint32_t> walls;
    walls.reserve(run.series.size());
    for (const PeriodRecord& rec : run.series)
        walls.push_back(walls_from_partitions(rec.partitions));
    return walls;
}

RunResult run_single(const SimConfig& config, std::uint64_t seed,
                     const PeriodObserver& observer) {
    config.validate();
    const NetworkSpec& net = config.network;
    const std::uint32_t n = net.n_agents;
    Rng rng(seed);

    Graph base;
    switch (net.kind) {
        case NetworkKind::Ring: base = build_ring(n, net.degree); break;
        case NetworkKind::Square: base = build_square(n, net.degree); break;
        case NetworkKind::ClassicalRandom:
            base = build_crg(n, net.regular_edge_target(), rng);
            break;
    }
    Graph collab_base =
        config.collab_base == CollabBase::ClassicalRandom
            ? build_crg(n, net.regular_edge_target(), rng)
            : base;

    RunResult result;
    Population pop = initialize(n, config.skilled_fraction_init, rng);
    if (observer) observer(pop);
    StateCounts c = counts(pop);
    if (c.unskilled() == 0) {
        result.termination = Termination::Collapsed;
        return result;
    }
    if (c.skilled_seniors == 0 && c.skilled_juniors == 0) {
        result.termination = Termination::PovertyTrap;
        return result;
    }

    const bool sw_influence = net.sw_mode == SmallWorldMode::InfluenceOnly ||
                              net.sw_mode == SmallWorldMode::Both;
    const bool sw_collab = net.sw_mode == SmallWorldMode::CollaborationOnly ||
                           net.sw_mode == SmallWorldMode::Both;
    const std::size_t target_shortcuts = net.shortcut_count();

    std::vector<NodeId> all_nodes(n);
    std::iota(all_nodes.begin(), all_nodes.end(), 0);

    auto track_shortfall = [&](std::size_t added) {
        if (added < target_shortcuts) ++result.shortcut_shortfalls;
    };

    // Overlays exist from the start; redrawn wholesale after every update.
    Graph influence = base;
    std::size_t added = 0;
    if (sw_influence) {
        influence = refresh_shortcuts(std::move(influence), all_nodes,
                                      target_shortcuts, rng, &added);
        track_shortfall(added);
    }
    Graph collab = std::move(collab_base);
    if (sw_collab) {
        collab = refresh_shortcuts(std::move(collab), skilled_senior_nodes(pop),
                                   target_shortcuts, rng, &added);
        track_shortfall(added);
    }

    const bool static_collab = !sw_collab;
    const bool needs_density = config.econ.gamma > 0.0;
    std::unique_ptr<DistanceMatrix> distances;
    if (needs_density && static_collab)
        distances = std::make_unique<DistanceMatrix>(collab);

    EconTrack econ;
    econ.y_prev = econ.a_prev * static_cast<double>(c.unskilled());

    result.series.reserve(config.periods);
    for (std::uint32_t t = 1; t <= config.periods; ++t) {
        const double r_w =
            econ.first ? initial_relative_weight(config.econ.alpha_prime)
                       : relative_weight(econ.ws_prev, econ.wu_prev,
                                         config.econ.alpha_prime);
        const StateCounts prev = c;
        pop = step(pop, influence, r_w);
        c = counts(pop);

        check(c.skilled_seniors == prev.skilled_juniors, "S_s(t) = J_s(t-1)", t);
        check(c.unskilled_seniors == prev.unskilled_juniors, "S_u(t) = J_u(t-1)", t);
        check(c.juniors() == n / 2 && c.seniors() == n / 2,
              "J_s+J_u = S_s+S_u = N/2", t);
        result.invariant_checks += 3;

        if (sw_influence) {
            influence = refresh_shortcuts(std::move(influence), all_nodes,
                                          target_shortcuts, rng, &added);
            track_shortfall(added);
        }
        if (sw_collab) {
            collab = refresh_shortcuts(std::move(collab),
                                       skilled_senior_nodes(pop),
                                       target_shortcuts, rng, &added);
            track_shortfall(added);
        }

        double density = 0.0;
        if (needs_density && c.skilled_seniors > 1) {
            const auto seniors = skilled_senior_nodes(pop);
            density = static_collab ? team_density(seniors, *distances)
                                    : team_density(seniors, collab);
        }

        const IdeasUpdate ideas =
            update_ideas(econ.a_prev, c.skilled_seniors, density, config.econ);
        const Wages wages = compute_wages(econ.a_prev, ideas.change,
                                          c.unskilled(), c.skilled_seniors);

        check(close(wages.skilled_bill + wages.unskilled_bill, wages.output,
                    kIdentityTol),
              "Y_s + Y_u = Y", t);
        check(close(wages.output,
                    ideas.stock * static_cast<double>(c.unskilled()),
                    kIdentityTol),
              "Y = A U", t);
        check(ideas.change >= 0.0, "A non-decreasing", t);
        result.invariant_checks += 3;
        if (config.econ.gamma == 0.0 && !econ.first) {
            // With no team effect the wage ratio reduces to delta U(t-1).
            check(close(r_w,
                        config.econ.alpha_prime * config.econ.delta *
                            static_cast<double>(prev.unskilled()),
                        kIdentityTol),
                  "r_w = alpha' delta U(t-1) when gamma = 0", t);
            ++result.invariant_checks;
        }

        PeriodRecord rec;
        rec.skilled_seniors = static_cast<std::uint32_t>(c.skilled_seniors);
        rec.unskilled = static_cast<std::uint32_t>(c.unskilled());
        rec.growth = (wages.output - econ.y_prev) / econ.y_prev;
        rec.wage_ratio = wages.unskilled_wage > 0.0
                             ? wages.skilled_wage / wages.unskilled_wage
                             : 0.0;
        rec.team_effect = config.econ.gamma * density;
        rec.partitions = count_partitions(pop, net, base);
        if (c.skilled_seniors > 0) {
            const double expected =
                (config.econ.delta * static_cast<double>(c.skilled_seniors) +
                 config.econ.gamma * density) *
                static_cast<double>(c.unskilled()) /
                static_cast<double>(c.skilled_seniors);
            check(close(rec.wage_ratio, expected, kIdentityTol),
                  "w = (delta S_s + gamma D) U / S_s", t);
            ++result.invariant_checks;
        }
        result.series.push_back(rec);
        if (observer) observer(pop);

        if (c.unskilled() == 0) {
            result.termination = Termination::Collapsed;
            return result;
        }
        if (c.skilled_seniors == 0 && c.skilled_juniors == 0) {
            result.termination = Termination::PovertyTrap;
            return result;
        }

        econ.a_prev = ideas.stock;
        econ.y_prev = wages.output;
        econ.ws_prev = wages.skilled_wage;
        econ.wu_prev = wages.unskilled_wage;
        econ.first = false;
        if (econ.a_prev > kRescaleThreshold) {
            econ.a_prev *= kRescaleFactor;
            econ.y_prev *= kRescaleFactor;
            econ.ws_prev *= kRescaleFactor;
            econ.wu_prev *= kRescaleFactor;
        }
    }

    // Generation-averaged tail means.
    SteadySummary s;
    const std::uint32_t window = 2 * config.window_generations;
    const std::size_t start = result.series.size() - window;
    for (std::uint32_t g = 0; g < config.window_generations; ++g) {
        const PeriodRecord& a = result.series[start + 2 * g];
        const PeriodRecord& b = result.series[start + 2 * g + 1];
        s.growth += 0.5 * (a.growth + b.growth);
        s.wage_ratio += 0.5 * (a.wage_ratio + b.wage_ratio);
        s.skilled_seniors += 0.5 * double(a.skilled_seniors + b.skilled_seniors);
        s.unskilled += 0.5 * double(a.unskilled + b.unskilled);
        s.partitions += 0.5 * double(a.partitions + b.partitions);
        s.team_effect += 0.5 * (a.team_effect + b.team_effect);
    }
    const auto w = static_cast<double>(config.window_generations);
    s.growth /= w;
    s.wage_ratio /= w;
    s.skilled_seniors /= w;
    s.unskilled /= w;
    s.partitions /= w;
    s.team_effect /= w;
    result.summary = s;
    result.termination = Termination::Steady;
    return result;
}

namespace {

struct Accumulator {
    double sum = 0.0;
    double sumsq = 0.0;
    std::size_t count = 0;

    void add(double x) {
        sum += x;
        sumsq += x * x;
        ++count;
    }
    Stat stat() const {
        Stat s;
        s.count = count;
        if (count == 0) return s;
        s.mean = sum / double(count);
        if (count > 1) {
            const double var =
                std::max(0.0, (sumsq - sum * sum / double(count)) / double(count - 1));
            s.stderr_mean = std::sqrt(var / double(count));
        }
        return s;
    }
};

} // namespace

EnsembleSummary run_ensemble(const SimConfig& config,
                             const EnsembleOptions& options) {
    config.validate();
    const std::uint32_t runs = config.runs;
    std::vector<RunResult> results(runs);

    unsigned threads = options.threads;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, runs);

    std::atomic<std::uint32_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::uint32_t k = next.fetch_add(1);
            if (k >= runs) return;
            try {
                results[k] = run_single(config, config.base_seed + k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    EnsembleSummary out;
    out.runs = runs;
    Accumulator growth, wage, skilled, unskilled, partitions, team;
    const bool ring_family = config.network.kind == NetworkKind::Ring;
    if (options.collect_series_means) {
        out.series_means.emplace();
        auto& sm = *out.series_means;
        sm.skilled_seniors.assign(config.periods, 0.0);
        sm.unskilled.assign(config.periods, 0.0);
        sm.walls.assign(config.periods, 0.0);
        sm.alive.assign(config.periods, 0);
    }

    for (const RunResult& r : results) {
        out.invariant_checks += r.invariant_checks;
        switch (r.termination) {
            case Termination::Collapsed: ++out.collapsed_runs; break;
            case Termination::PovertyTrap: ++out.trapped_runs; break;
            case Termination::Steady: {
                ++out.steady_runs;
                const SteadySummary& s = *r.summary;
                growth.add(s.growth);
                wage.add(s.wage_ratio);
                skilled.add(s.skilled_seniors);
                unskilled.add(s.unskilled);
                partitions.add(s.partitions);
                team.add(s.team_effect);
                break;
            }
        }
        if (out.series_means) {
            auto& sm = *out.series_means;
            for (std::size_t t = 0; t < r.series.size(); ++t) {
                const PeriodRecord& rec = r.series[t];
                sm.skilled_seniors[t] += rec.skilled_seniors;
                sm.unskilled[t] += rec.unskilled;
                if (ring_family)
                    sm.walls[t] += walls_from_partitions(rec.partitions);
                ++sm.alive[t];
            }
        }
    }
    out.growth = growth.stat();
    out.wage_ratio = wage.stat();
    out.skilled_seniors = skilled.stat();
    out.unskilled = unskilled.stat();
    out.partitions = partitions.stat();
    out.team_effect = team.stat();
    if (out.series_means) {
        auto& sm = *out.series_means;
        for (std::size_t t = 0; t < sm.alive.size(); ++t) {
            if (sm.alive[t] == 0) continue;
            sm.skilled_seniors[t] /= sm.alive[t];
            sm.unskilled[t] /= sm.alive[t];
            sm.walls[t] /= sm.alive[t];
        }
    }
    if (out.steady_runs == 0)
        out.diagnostic = "no run reached a steady state; all absorbed";
    return out;
}

} // namespace growthnet
