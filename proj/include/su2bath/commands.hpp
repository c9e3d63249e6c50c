// commands.hpp — implementations behind the CLI subcommands; kept in the
// library so tests can drive them without spawning processes

#pragma once

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "su2bath/config.hpp"
#include "su2bath/equilibrium.hpp"
#include "su2bath/evolution.hpp"
#include "su2bath/io.hpp"
#include "su2bath/render.hpp"
#include "su2bath/states.hpp"
#include "su2bath/validate.hpp"

namespace su2bath {

// process exit codes shared with the CLI
enum ExitCode : int {
    exit_ok = 0,
    exit_config_error = 1,
    exit_validation_failure = 2,
    exit_resource_limit = 3,
};

namespace detail {

inline std::filesystem::path prepare_out_dir(const RunConfig& config,
                                             const std::string& out_override) {
    const std::filesystem::path dir = out_override.empty() ? config.out_dir : out_override;
    std::filesystem::create_directories(dir);
    return dir;
}

inline double kernel_residual(const ModelParams& params, const EquilibriumSpec& spec) {
    const Eigen::VectorXd w = spec.normalized();
    Eigen::VectorXd residual = Eigen::VectorXd::Zero(spec.total + 1);
    for (int j = 0; j <= spec.total; ++j) {
        const LevelCoeffs coeffs = uvw_coeffs(params, spec.total, spec.total - 2 * j);
        residual[j] += coeffs.stay * w[j];
        if (j > 0) residual[j - 1] += coeffs.up * w[j];
        if (j < spec.total) residual[j + 1] += coeffs.down * w[j];
    }
    return residual.cwiseAbs().maxCoeff();
}

} // namespace detail

inline int cmd_equilibrium(const RunConfig& config, const std::string& out_override = "") {
    const auto dir = detail::prepare_out_dir(config, out_override);
    const EquilibriumSpec spec = make_equilibrium_spec(config.subspace, config.params.nbar0());

    json record = equilibrium_to_json(spec);
    record["kernel_residual"] = detail::kernel_residual(config.params, spec);
    const Eigen::VectorXd r1 = equilibrium_reduced_distribution(spec, Oscillator::first);
    const Eigen::VectorXd r2 = equilibrium_reduced_distribution(spec, Oscillator::second);
    record["reduced_mode1"] = std::vector<double>(r1.begin(), r1.end());
    record["reduced_mode2"] = std::vector<double>(r2.begin(), r2.end());
    write_text_file((dir / "equilibrium.json").string(), record.dump(2) + "\n");
    return exit_ok;
}

inline DensityState build_initial_state(const RunConfig& config,
                                        const std::optional<std::string>& seed_json,
                                        json* extras = nullptr) {
    if (config.scenario == "evolve") {
        if (!seed_json) {
            throw ConfigError("seed-state", "scenario 'evolve' needs --seed-state <json>");
        }
        json parsed;
        try {
            parsed = json::parse(*seed_json);
        } catch (const std::exception& e) {
            throw ConfigError("seed-state", std::string("invalid JSON: ") + e.what());
        }
        try {
            return density_state_from_json(parsed);
        } catch (const std::exception& e) {
            throw ConfigError("seed-state", e.what());
        }
    }
    if (config.scenario == "example1" || config.scenario == "example2") {
        const WavepacketCoeffs coeffs = gaussian_superposition_coeffs(config.wavepacket);
        if (extras) {
            (*extras)["norm_deficit"] = coeffs.norm_deficit;
            (*extras)["truncation_warning"] = coeffs.truncation_warning;
            std::ostringstream csv;
            write_coefficients_csv(csv, coeffs.c);
            (*extras)["coefficients_csv"] = csv.str();
        }
        const Eigen::VectorXcd c =
            (coeffs.c / coeffs.c.norm()).cast<std::complex<double>>();
        return config.scenario == "example1" ? product_state(c) : correlated_state(c);
    }
    if (config.scenario == "coherent") {
        return coherent_density(config.subspace, config.theta, config.phi);
    }
    throw ConfigError("scenario", "scenario '" + config.scenario + "' does not define an evolution");
}

inline int cmd_evolve(const RunConfig& config, const std::string& out_override = "",
                      const std::optional<std::string>& seed_json = std::nullopt) {
    const auto dir = detail::prepare_out_dir(config, out_override);

    json extras;
    const DensityState initial = build_initial_state(config, seed_json, &extras);
    if (extras.contains("coefficients_csv")) {
        write_text_file((dir / "wavepacket_coeffs.csv").string(),
                        extras["coefficients_csv"].get<std::string>());
        extras.erase("coefficients_csv");
    }

    // config times are dimensionless gamma*t; the CSV keeps that unit
    const double tmax_absolute = config.tmax / config.params.gamma;
    TimeSeries series = sample_evolution(initial, config.params, tmax_absolute,
                                         config.nsteps, config.tracked);
    for (auto& row : series.rows) row[0] *= config.params.gamma;
    std::ostringstream csv;
    write_timeseries_csv(csv, series);
    write_text_file((dir / "timeseries.csv").string(), csv.str());

    const DensityState final_state = evolve(initial, config.params, tmax_absolute);
    write_text_file((dir / "final_state.json").string(),
                    density_state_to_json(final_state).dump() + "\n");

    json diagnostics = extras;
    diagnostics["trace_error"] = std::abs(final_state.trace() - 1.0);
    diagnostics["hermiticity_error"] = final_state.hermiticity_error();
    diagnostics["min_eigenvalue"] = min_eigenvalue(final_state);
    write_text_file((dir / "diagnostics.json").string(), diagnostics.dump(2) + "\n");
    return exit_ok;
}

inline int cmd_render(const RunConfig& config, const std::string& out_override,
                      const std::string& seed_json) {
    const auto dir = detail::prepare_out_dir(config, out_override);
    DensityState state;
    try {
        state = density_state_from_json(json::parse(seed_json));
    } catch (const std::exception& e) {
        throw ConfigError("seed-state", e.what());
    }
    const auto emit = [&](Oscillator keep, const std::string& name) {
        const Grid grid = density_grid(reduced_state(state, keep), config.grid);
        if (grid.narrow_warning) {
            std::cerr << "warning: " << name << " grid captures < 0.99 of the diagonal mass\n";
        }
        std::ostringstream csv;
        write_grid_csv(csv, grid);
        write_text_file((dir / name).string(), csv.str());
    };
    emit(Oscillator::first, "reduced1_grid.csv");
    emit(Oscillator::second, "reduced2_grid.csv");
    return exit_ok;
}

inline int cmd_validate(const ValidationOptions& options, std::ostream& out) {
    bool all_pass = true;
    for (const CheckResult& check : run_validation_suite(options)) {
        out << (check.pass ? "PASS " : "FAIL ") << check.name
            << "  residual=" << format_full(check.residual)
            << "  tol=" << format_full(check.tolerance) << "\n";
        all_pass = all_pass && check.pass;
    }
    out << (all_pass ? "all checks passed\n" : "validation FAILED\n");
    return all_pass ? exit_ok : exit_validation_failure;
}

} // namespace su2bath
