// config.hpp — flat key = value run configuration with total validation:
// every rejection names the offending key

#pragma once

#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "su2bath/bath.hpp"
#include "su2bath/evolution.hpp"
#include "su2bath/render.hpp"
#include "su2bath/states.hpp"

namespace su2bath {

class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error("config key '" + key + "': " + message), key_(std::move(key)) {}

    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

inline double parse_double(const std::string& key, const std::string& value) {
    if (value == "inf" || value == "+inf") return std::numeric_limits<double>::infinity();
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError(key, "not a number: '" + value + "'");
    }
}

inline int parse_int(const std::string& key, const std::string& value) {
    int parsed = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError(key, "not an integer: '" + value + "'");
    }
    return parsed;
}

} // namespace detail

struct RunConfig {
    std::string scenario;
    ModelParams params;
    std::optional<FormFactor> form_factor;

    int subspace = -1;  // N for equilibrium / coherent scenarios
    WavepacketSpec wavepacket;
    double theta = 0.0;
    double phi = 0.0;
    double tmax = 50.0;
    int nsteps = 200;
    GridSpec grid;
    std::vector<CoefficientAddress> tracked;
    std::string out_dir = ".";

    static RunConfig parse(const std::string& text);
};

namespace detail {

// raw key/value map with duplicate and comment handling
inline std::map<std::string, std::string> tokenize_config(const std::string& text) {
    std::map<std::string, std::string> raw;
    std::size_t start = 0;
    int lineno = 0;
    while (start <= text.size()) {
        std::size_t stop = text.find('\n', start);
        if (stop == std::string::npos) stop = text.size();
        std::string line = text.substr(start, stop - start);
        start = stop + 1;
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno), "empty key");
        if (raw.count(key)) throw ConfigError(key, "duplicate key");
        raw[key] = value;
    }
    return raw;
}

inline std::vector<CoefficientAddress> parse_track(const std::string& value) {
    std::vector<CoefficientAddress> out;
    std::size_t start = 0;
    while (start < value.size()) {
        std::size_t stop = value.find(';', start);
        if (stop == std::string::npos) stop = value.size();
        const std::string item = trim(value.substr(start, stop - start));
        start = stop + 1;
        if (item.empty()) continue;
        std::vector<int> numbers;
        std::size_t pos = 0;
        while (pos <= item.size()) {
            std::size_t comma = item.find(',', pos);
            if (comma == std::string::npos) comma = item.size();
            numbers.push_back(parse_int("track", trim(item.substr(pos, comma - pos))));
            pos = comma + 1;
        }
        if (numbers.size() != 4) {
            throw ConfigError("track", "each entry needs 4 integers N,Ntilde,r,rtilde");
        }
        CoefficientAddress address{numbers[0], numbers[1], numbers[2], numbers[3]};
        try {
            KetLabel ket(address.ket_total, address.r);
            KetLabel bra(address.bra_total, address.rt);
            (void)ket;
            (void)bra;
        } catch (const std::domain_error& e) {
            throw ConfigError("track", e.what());
        }
        out.push_back(address);
    }
    return out;
}

} // namespace detail

inline RunConfig RunConfig::parse(const std::string& text) {
    auto raw = detail::tokenize_config(text);
    const std::set<std::string> known = {
        "scenario", "omega1", "omega2", "beta", "nbar0", "gamma", "lambda", "form_factor",
        "omega_c", "delta_omega1", "delta_omega2", "N", "a", "ratio", "nmax", "theta", "phi",
        "tmax", "nsteps", "xmin", "xmax", "steps", "track", "out"};
    for (const auto& [key, value] : raw) {
        if (!known.count(key)) throw ConfigError(key, "unknown key");
    }
    const auto has = [&](const char* key) { return raw.count(key) != 0; };
    const auto number = [&](const char* key, double fallback) {
        return has(key) ? detail::parse_double(key, raw[key]) : fallback;
    };
    const auto integer = [&](const char* key, int fallback) {
        return has(key) ? detail::parse_int(key, raw[key]) : fallback;
    };

    RunConfig config;
    if (!has("scenario")) throw ConfigError("scenario", "missing (equilibrium|evolve|example1|example2|coherent)");
    config.scenario = raw["scenario"];
    const std::set<std::string> scenarios = {"equilibrium", "evolve", "example1", "example2",
                                             "coherent"};
    if (!scenarios.count(config.scenario)) {
        throw ConfigError("scenario", "unknown scenario '" + config.scenario + "'");
    }

    config.params.omega1 = number("omega1", 2.0);
    config.params.omega2 = number("omega2", 1.0);
    if (!(config.params.omega2 > 0.0) || !(config.params.omega1 > config.params.omega2)) {
        throw ConfigError("omega1", "require omega1 > omega2 > 0");
    }

    // temperature: exactly one of beta / nbar0
    if (has("beta") == has("nbar0")) {
        throw ConfigError(has("beta") ? "nbar0" : "beta", "give exactly one of beta or nbar0");
    }
    if (has("beta")) {
        config.params.beta = detail::parse_double("beta", raw["beta"]);
        if (!(config.params.beta > 0.0)) throw ConfigError("beta", "must be positive or inf");
    } else {
        const double nbar = detail::parse_double("nbar0", raw["nbar0"]);
        if (nbar < 0.0) throw ConfigError("nbar0", "must be non-negative");
        config.params.beta = beta_for_occupancy(nbar, config.params.omega0());
    }

    // decay: exactly one of gamma / {lambda, form_factor, omega_c}
    const bool microscopic = has("lambda") || has("form_factor") || has("omega_c");
    if (has("gamma") == microscopic) {
        throw ConfigError("gamma", "give exactly one of gamma or {lambda, form_factor, omega_c}");
    }
    if (has("gamma")) {
        config.params.gamma = detail::parse_double("gamma", raw["gamma"]);
        if (!(config.params.gamma > 0.0)) throw ConfigError("gamma", "must be positive");
        config.params.delta_omega1 = number("delta_omega1", 0.0);
        config.params.delta_omega2 = number("delta_omega2", 0.0);
    } else {
        if (!has("lambda")) throw ConfigError("lambda", "required with the form-factor route");
        if (!has("form_factor")) throw ConfigError("form_factor", "required with the form-factor route");
        if (!has("omega_c")) throw ConfigError("omega_c", "required with the form-factor route");
        if (has("delta_omega1") || has("delta_omega2")) {
            throw ConfigError(has("delta_omega1") ? "delta_omega1" : "delta_omega2",
                              "shifts are derived from the form factor; do not set them here");
        }
        FormFactor ff;
        ff.coupling = detail::parse_double("lambda", raw["lambda"]);
        ff.cutoff = detail::parse_double("omega_c", raw["omega_c"]);
        if (!(ff.cutoff > 0.0)) throw ConfigError("omega_c", "must be positive");
        if (raw["form_factor"] == "exponential") ff.kind = FormFactor::Kind::exponential_cutoff;
        else if (raw["form_factor"] == "ohmic") ff.kind = FormFactor::Kind::ohmic_exponential;
        else throw ConfigError("form_factor", "expected 'exponential' or 'ohmic'");
        config.params.gamma = decay_rate(ff, config.params.omega0());
        if (!(config.params.gamma > 0.0)) throw ConfigError("lambda", "derived gamma must be positive");
        try {
            const auto [d1, d2] = renorm_shifts(ff, config.params);
            config.params.delta_omega1 = d1;
            config.params.delta_omega2 = d2;
        } catch (const std::domain_error& e) {
            throw ConfigError("form_factor", e.what());
        }
        config.form_factor = ff;
    }
    config.params.check();

    // scenario-specific keys
    if (config.scenario == "equilibrium" || config.scenario == "coherent") {
        if (!has("N")) throw ConfigError("N", "required for scenario " + config.scenario);
        config.subspace = detail::parse_int("N", raw["N"]);
        if (config.subspace < 0) throw ConfigError("N", "must be non-negative");
    }
    if (config.scenario == "coherent") {
        if (!has("theta")) throw ConfigError("theta", "required for scenario coherent");
        config.theta = detail::parse_double("theta", raw["theta"]);
        config.phi = number("phi", 0.0);
    }
    if (config.scenario == "example1" || config.scenario == "example2") {
        config.wavepacket.displacement = number("a", 2.0);
        config.wavepacket.ratio = number("ratio", 2.0);
        config.wavepacket.nmax = integer("nmax", 32);
        try {
            config.wavepacket.check();
        } catch (const std::domain_error& e) {
            throw ConfigError("a", e.what());
        }
    }
    config.tmax = number("tmax", 50.0);
    if (!(config.tmax >= 0.0)) throw ConfigError("tmax", "must be non-negative");
    config.nsteps = integer("nsteps", 200);
    if (config.nsteps < 1) throw ConfigError("nsteps", "must be positive");

    config.grid.xmin = number("xmin", -6.0);
    config.grid.xmax = number("xmax", 6.0);
    config.grid.steps = integer("steps", 241);
    try {
        config.grid.check();
    } catch (const std::domain_error& e) {
        throw ConfigError("xmin", e.what());
    }

    if (has("track")) config.tracked = detail::parse_track(raw["track"]);
    if (has("out")) config.out_dir = raw["out"];
    return config;
}

} // namespace su2bath
