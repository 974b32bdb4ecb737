#include "growthnet/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace growthnet {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
    throw ConfigError("config: malformed value for key '" + key + "': '" +
                      value + "'");
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) bad_value(key, value);
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double out = std::stod(value, &used);
        if (used != value.size()) bad_value(key, value);
        return out;
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
        bad_value(key, value);
    }
}

} // namespace

void apply_config_key(SimConfig& config, const std::string& key,
                      const std::string& value) {
    if (key == "network") {
        auto k = network_kind_from_string(value);
        if (!k) bad_value(key, value);
        config.network.kind = *k;
    } else if (key == "n") {
        config.network.n_agents = static_cast<std::uint32_t>(parse_u64(key, value));
    } else if (key == "z") {
        config.network.degree = static_cast<std::uint32_t>(parse_u64(key, value));
    } else if (key == "sw") {
        auto m = sw_mode_from_string(value);
        if (!m) bad_value(key, value);
        config.network.sw_mode = *m;
    } else if (key == "p") {
        config.network.shortcut_prob = parse_double(key, value);
    } else if (key == "collab") {
        if (value == "same")
            config.collab_base = CollabBase::SameAsInfluence;
        else if (value == "crg")
            config.collab_base = CollabBase::ClassicalRandom;
        else
            bad_value(key, value);
    } else if (key == "alpha_prime") {
        config.econ.alpha_prime = parse_double(key, value);
    } else if (key == "delta") {
        config.econ.delta = parse_double(key, value);
    } else if (key == "gamma") {
        config.econ.gamma = parse_double(key, value);
    } else if (key == "periods") {
        config.periods = static_cast<std::uint32_t>(parse_u64(key, value));
    } else if (key == "window") {
        config.window_generations = static_cast<std::uint32_t>(parse_u64(key, value));
    } else if (key == "runs") {
        config.runs = static_cast<std::uint32_t>(parse_u64(key, value));
    } else if (key == "seed") {
        config.base_seed = parse_u64(key, value);
    } else if (key == "skilled_init") {
        config.skilled_fraction_init = parse_double(key, value);
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

SimConfig parse_config_text(const std::string& text, const SimConfig& defaults) {
    SimConfig config = defaults;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key=value, got '" + line + "'");
        apply_config_key(config, trim(line.substr(0, eq)),
                         trim(line.substr(eq + 1)));
    }
    return config;
}

SimConfig parse_config_file(const std::string& path, const SimConfig& defaults) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), defaults);
}

namespace {

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

std::string serialize_config(const SimConfig& c) {
    std::ostringstream os;
    os << "network=" << to_string(c.network.kind) << '\n'
       << "n=" << c.network.n_agents << '\n'
       << "z=" << c.network.degree << '\n'
       << "sw=" << to_string(c.network.sw_mode) << '\n'
       << "p=" << format_double(c.network.shortcut_prob) << '\n'
       << "collab=" << to_string(c.collab_base) << '\n'
       << "alpha_prime=" << format_double(c.econ.alpha_prime) << '\n'
       << "delta=" << format_double(c.econ.delta) << '\n'
       << "gamma=" << format_double(c.econ.gamma) << '\n'
       << "periods=" << c.periods << '\n'
       << "window=" << c.window_generations << '\n'
       << "runs=" << c.runs << '\n'
       << "seed=" << c.base_seed << '\n'
       << "skilled_init=" << format_double(c.skilled_fraction_init) << '\n';
    return os.str();
}

std::string config_hash(const SimConfig& config) {
    const std::string text = serialize_config(config);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string to_string(CollabBase c) {
    return c == CollabBase::SameAsInfluence ? "same" : "crg";
}

} // namespace growthnet
