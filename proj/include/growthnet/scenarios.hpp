// Named scenario presets. The table1 family covers the z=6 ring-based
// comparisons (small worlds, random-graph collaboration, team effect);
// table2 covers the z=4 one- versus two-dimensional comparison.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthnet/harness.hpp"

namespace growthnet {

struct Scenario {
    std::string name;
    SimConfig config;
    std::string note; // which emitted table column the preset produces
};

const std::vector<Scenario>& all_scenarios();
const std::vector<std::string>& table1_scenarios();
const std::vector<std::string>& table2_scenarios();
std::optional<Scenario> find_scenario(const std::string& name);

} // namespace growthnet
