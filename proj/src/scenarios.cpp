#include "growthnet/scenarios.hpp"

namespace growthnet {

namespace {

SimConfig base_config(NetworkKind kind, std::uint32_t z, double gamma) {
    SimConfig c;
    c.network.kind = kind;
    c.network.n_agents = 400;
    c.network.degree = z;
    c.econ.delta = 0.011;
    c.econ.alpha_prime = 0.45;
    c.econ.gamma = gamma;
    return c;
}

SimConfig with_sw(SimConfig c, SmallWorldMode mode, double p) {
    c.network.sw_mode = mode;
    c.network.shortcut_prob = p;
    return c;
}

SimConfig with_crg_collab(SimConfig c) {
    c.collab_base = CollabBase::ClassicalRandom;
    return c;
}

std::vector<Scenario> make_scenarios() {
    constexpr double kTeamGamma = 0.05;
    std::vector<Scenario> v;
    auto add = [&v](std::string name, SimConfig cfg, std::string note) {
        v.push_back({std::move(name), std::move(cfg), std::move(note)});
    };

    // table1: z = 6 family
    add("ring-base", base_config(NetworkKind::Ring, 6, 0.0), "table1:ring:base");
    add("ring-team", base_config(NetworkKind::Ring, 6, kTeamGamma), "table1:ring:team");
    add("sw-dec-p03-base",
        with_sw(base_config(NetworkKind::Ring, 6, 0.0), SmallWorldMode::InfluenceOnly, 0.03),
        "table1:sw-decision:p=0.03:base");
    add("sw-dec-p03-team",
        with_sw(base_config(NetworkKind::Ring, 6, kTeamGamma), SmallWorldMode::InfluenceOnly, 0.03),
        "table1:sw-decision:p=0.03:team");
    add("sw-dec-p10-base",
        with_sw(base_config(NetworkKind::Ring, 6, 0.0), SmallWorldMode::InfluenceOnly, 0.1),
        "table1:sw-decision:p=0.1:base");
    add("sw-dec-p10-team",
        with_sw(base_config(NetworkKind::Ring, 6, kTeamGamma), SmallWorldMode::InfluenceOnly, 0.1),
        "table1:sw-decision:p=0.1:team");
    add("sw-team-p03",
        with_sw(base_config(NetworkKind::Ring, 6, kTeamGamma), SmallWorldMode::CollaborationOnly, 0.03),
        "table1:sw-team-effect:p=0.03");
    add("sw-team-p10",
        with_sw(base_config(NetworkKind::Ring, 6, kTeamGamma), SmallWorldMode::CollaborationOnly, 0.1),
        "table1:sw-team-effect:p=0.1");
    add("sw-dec-team-p03",
        with_sw(base_config(NetworkKind::Ring, 6, kTeamGamma), SmallWorldMode::Both, 0.03),
        "table1:sw-decision+team:p=0.03");
    add("sw-dec-team-p10",
        with_sw(base_config(NetworkKind::Ring, 6, kTeamGamma), SmallWorldMode::Both, 0.1),
        "table1:sw-decision+team:p=0.1");
    // The random-graph scenarios keep ring influence dynamics and use a
    // connected CRG (same N, L) as the collaboration network.
    add("crg-base", with_crg_collab(base_config(NetworkKind::Ring, 6, 0.0)),
        "table1:crg:base");
    add("crg-team", with_crg_collab(base_config(NetworkKind::Ring, 6, kTeamGamma)),
        "table1:crg:team");

    // table2: z = 4 family
    add("ring-z4-base", base_config(NetworkKind::Ring, 4, 0.0), "table2:ring:base");
    add("ring-z4-team", base_config(NetworkKind::Ring, 4, kTeamGamma), "table2:ring:team");
    add("ring-team-sw-p03",
        with_sw(base_config(NetworkKind::Ring, 4, kTeamGamma), SmallWorldMode::CollaborationOnly, 0.03),
        "table2:ring-sw-team:p=0.03");
    add("ring-team-sw-p10",
        with_sw(base_config(NetworkKind::Ring, 4, kTeamGamma), SmallWorldMode::CollaborationOnly, 0.1),
        "table2:ring-sw-team:p=0.1");
    add("sq-base", base_config(NetworkKind::Square, 4, 0.0), "table2:square:base");
    add("sq-team", base_config(NetworkKind::Square, 4, kTeamGamma), "table2:square:team");
    add("sq-team-sw-p03",
        with_sw(base_config(NetworkKind::Square, 4, kTeamGamma), SmallWorldMode::CollaborationOnly, 0.03),
        "table2:square-sw-team:p=0.03");
    add("sq-team-sw-p10",
        with_sw(base_config(NetworkKind::Square, 4, kTeamGamma), SmallWorldMode::CollaborationOnly, 0.1),
        "table2:square-sw-team:p=0.1");
    return v;
}

} // namespace

const std::vector<Scenario>& all_scenarios() {
    static const std::vector<Scenario> scenarios = make_scenarios();
    return scenarios;
}

const std::vector<std::string>& table1_scenarios() {
    static const std::vector<std::string> names = {
        "ring-base",       "ring-team",       "sw-dec-p03-base",
        "sw-dec-p03-team", "sw-dec-p10-base", "sw-dec-p10-team",
        "sw-team-p03",     "sw-team-p10",     "sw-dec-team-p03",
        "sw-dec-team-p10", "crg-base",        "crg-team",
    };
    return names;
}

const std::vector<std::string>& table2_scenarios() {
    static const std::vector<std::string> names = {
        "ring-z4-base",     "ring-z4-team",     "ring-team-sw-p03",
        "ring-team-sw-p10", "sq-base",          "sq-team",
        "sq-team-sw-p03",   "sq-team-sw-p10",
    };
    return names;
}

std::optional<Scenario> find_scenario(const std::string& name) {
    for (const Scenario& s : all_scenarios())
        if (s.name == name) return s;
    return std::nullopt;
}

} // namespace growthnet
