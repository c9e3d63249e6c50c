// su2bath command line: equilibrium solve, scenario evolution, coordinate
// grids and the validation suite for the two-oscillator collective-bath
// model

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "su2bath/su2bath.hpp"

namespace {

su2bath::RunConfig load_config(const std::string& path) {
    return su2bath::RunConfig::parse(su2bath::read_text_file(path));
}

std::optional<std::string> load_optional(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return su2bath::read_text_file(path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduced dynamics of two oscillators collectively coupled to a thermal bath"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string seed_path;
    bool inject_vr_sign_flip = false;

    auto* equilibrium = app.add_subcommand("equilibrium", "solve the stationary state of one subspace");
    equilibrium->add_option("--config", config_path, "run configuration file")->required();
    equilibrium->add_option("--out", out_dir, "output directory");

    auto* evolve = app.add_subcommand("evolve", "time-evolve a scenario and export observables");
    evolve->add_option("--config", config_path, "run configuration file")->required();
    evolve->add_option("--out", out_dir, "output directory");
    evolve->add_option("--seed-state", seed_path, "density state JSON (scenario = evolve)");

    auto* render = app.add_subcommand("render", "coordinate-space grids of the reduced modes");
    render->add_option("--config", config_path, "run configuration file")->required();
    render->add_option("--out", out_dir, "output directory");
    render->add_option("--seed-state", seed_path, "density state JSON to render")->required();

    auto* validate = app.add_subcommand("validate", "run the oracle suite and report residuals");
    validate->add_flag("--inject-vr-sign-flip", inject_vr_sign_flip)->group("");  // test harness

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? su2bath::exit_config_error : su2bath::exit_ok;
    }

    try {
        if (equilibrium->parsed()) {
            return su2bath::cmd_equilibrium(load_config(config_path), out_dir);
        }
        if (evolve->parsed()) {
            return su2bath::cmd_evolve(load_config(config_path), out_dir,
                                       load_optional(seed_path));
        }
        if (render->parsed()) {
            return su2bath::cmd_render(load_config(config_path), out_dir,
                                       su2bath::read_text_file(seed_path));
        }
        if (validate->parsed()) {
            su2bath::ValidationOptions options;
            options.flip_v_sign = inject_vr_sign_flip;
            return su2bath::cmd_validate(options, std::cout);
        }
    } catch (const su2bath::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return su2bath::exit_config_error;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return su2bath::exit_resource_limit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return su2bath::exit_config_error;
    }
    return su2bath::exit_ok;
}
