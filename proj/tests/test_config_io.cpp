#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "su2bath/commands.hpp"
#include "su2bath/config.hpp"
#include "su2bath/io.hpp"

#include "support/helpers.hpp"

using namespace su2bath;
using Catch::Matchers::WithinAbs;

namespace {

std::string config_error_key(const std::string& text) {
    try {
        (void)RunConfig::parse(text);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "";
}

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("su2bath_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("run configuration parsing") {
    SECTION("a complete equilibrium config") {
        const RunConfig config = RunConfig::parse(
            "# comment\n"
            "scenario = equilibrium\n"
            "omega1 = 2.5\n"
            "omega2 = 1.5\n"
            "nbar0 = 1\n"
            "gamma = 2\n"
            "N = 4\n");
        REQUIRE(config.scenario == "equilibrium");
        REQUIRE(config.params.omega1 == 2.5);
        REQUIRE_THAT(config.params.nbar0(), WithinAbs(1.0, 1e-12));
        REQUIRE(config.params.gamma == 2.0);
        REQUIRE(config.subspace == 4);
    }
    SECTION("microscopic route derives gamma and both shifts") {
        const RunConfig config = RunConfig::parse(
            "scenario = example1\n"
            "beta = 1\n"
            "lambda = 0.1\n"
            "form_factor = ohmic\n"
            "omega_c = 5\n");
        REQUIRE(config.form_factor.has_value());
        REQUIRE_THAT(config.params.gamma,
                     WithinAbs(2.0 * M_PI * 0.01 * 0.2 * std::exp(-0.2), 1e-12));
        REQUIRE_THAT(config.params.delta_omega1, WithinAbs(0.010093285929637876, 1e-9));
        REQUIRE_THAT(config.params.delta_omega2, WithinAbs(0.0012523154003283765, 1e-9));
    }
    SECTION("tracked coefficient addresses") {
        const RunConfig config = RunConfig::parse(
            "scenario = evolve\nnbar0 = 0\ngamma = 1\ntrack = 1,1,1,-1; 0,1,0,-1\n");
        REQUIRE(config.tracked.size() == 2);
        REQUIRE(config.tracked[0].ket_total == 1);
        REQUIRE(config.tracked[1].rt == -1);
    }
}

TEST_CASE("every invalid configuration names the offending key") {
    REQUIRE(config_error_key("nbar0 = 1\ngamma = 1\n") == "scenario");
    REQUIRE(config_error_key("scenario = fly\nnbar0 = 1\ngamma = 1\n") == "scenario");
    REQUIRE(config_error_key("scenario = evolve\ngamma = 1\n") == "beta");
    REQUIRE(config_error_key("scenario = evolve\nbeta = 1\nnbar0 = 1\ngamma = 1\n") == "nbar0");
    REQUIRE(config_error_key("scenario = evolve\nnbar0 = 1\n") == "gamma");
    REQUIRE(config_error_key("scenario = evolve\nnbar0 = 1\ngamma = 1\nlambda = 0.1\n") ==
            "gamma");
    REQUIRE(config_error_key("scenario = evolve\nnbar0 = 1\nlambda = 0.1\nomega_c = 5\n") ==
            "form_factor");
    REQUIRE(config_error_key(
                "scenario = evolve\nnbar0 = 1\nlambda = 0.1\nform_factor = ohmic\n") ==
            "omega_c");
    REQUIRE(config_error_key("scenario = evolve\nnbar0 = 1\ngamma = oops\n") == "gamma");
    REQUIRE(config_error_key("scenario = evolve\nnbar0 = 1\ngamma = -1\n") == "gamma");
    REQUIRE(config_error_key("scenario = evolve\nnbar0 = 1\ngamma = 1\nwhat = 3\n") == "what");
    REQUIRE(config_error_key("scenario = equilibrium\nnbar0 = 1\ngamma = 1\n") == "N");
    REQUIRE(config_error_key("scenario = coherent\nnbar0 = 1\ngamma = 1\nN = 2\n") == "theta");
    REQUIRE(config_error_key("scenario = evolve\nnbar0 = 1\ngamma = 1\nnsteps = 0\n") ==
            "nsteps");
    REQUIRE(config_error_key("scenario = evolve\nnbar0 = 1\ngamma = 1\ngamma = 2\n") == "gamma");
    REQUIRE(config_error_key("scenario = evolve\nnbar0 = 1\ngamma = 1\ntrack = 1,2\n") ==
            "track");
    REQUIRE(config_error_key("scenario = evolve\nnbar0 = 1\ngamma = 1\ntrack = 1,1,2,1\n") ==
            "track");
    REQUIRE(config_error_key("scenario = evolve\nomega1 = 1\nomega2 = 2\nnbar0 = 1\ngamma = 1\n") ==
            "omega1");
    REQUIRE(config_error_key(
                "scenario = evolve\nbeta = 1\nlambda = 0.1\nform_factor = exponential\n"
                "omega_c = 5\n") == "form_factor");  // infrared-divergent combination
    REQUIRE(config_error_key(
                "scenario = evolve\nbeta = 1\nlambda = 0.1\nform_factor = ohmic\nomega_c = 5\n"
                "delta_omega1 = 0.1\n") == "delta_omega1");
}

TEST_CASE("density states round-trip through JSON") {
    DensityState state;
    state.add(0, 0, 0, 0, 0.25);
    state.add(2, 2, 0, 0, std::complex<double>(0.75, 0.0));
    state.add(2, 0, 0, 0, std::complex<double>(0.1, -0.2));
    state.add(0, 2, 0, 0, std::complex<double>(0.1, 0.2));
    state.add(3, 1, 1, -1, std::complex<double>(-0.05, 0.15));
    state.add(1, 3, -1, 1, std::complex<double>(-0.05, -0.15));

    const json encoded = density_state_to_json(state);
    const DensityState decoded = density_state_from_json(encoded);
    REQUIRE(decoded.blocks.size() == state.blocks.size());
    for (const auto& [label, vec] : state.blocks) {
        REQUIRE((decoded.blocks.at(label) - vec).cwiseAbs().maxCoeff() == 0.0);
    }

    REQUIRE_THROWS_AS(density_state_from_json(json::parse("{}")), std::invalid_argument);
    REQUIRE_THROWS_AS(density_state_from_json(json::parse("[[1,2,3]]")), std::invalid_argument);
    REQUIRE_THROWS_AS(density_state_from_json(json::parse("[[1,1,2,1,0.5,0]]")),
                      std::domain_error);  // parity violation
}

TEST_CASE("time series and grid CSV formats") {
    TimeSeries series;
    series.columns = {"t", "trace"};
    series.rows = {{0.0, 1.0}, {0.5, 1.0}};
    std::ostringstream csv;
    write_timeseries_csv(csv, series);
    REQUIRE(csv.str() == "t,trace\n0,1\n0.5,1\n");

    Grid grid{-1.0, 1.0, 2, Eigen::MatrixXd::Zero(2, 2), false};
    grid.values << 0.125, 0.25, 0.5, 1.0;
    std::ostringstream gcsv;
    write_grid_csv(gcsv, grid);
    REQUIRE(gcsv.str() == "# -1 1 2\n0.125,0.25\n0.5,1\n");
}

TEST_CASE("full-precision formatting survives a round trip") {
    for (int i = 0; i < 200; ++i) {
        const double value = testsupport::uniform(-1e3, 1e3) * std::pow(10.0, i % 7 - 3);
        REQUIRE(std::stod(format_full(value)) == value);
    }
}

TEST_CASE("identical configs produce byte-identical outputs") {
    const RunConfig config = RunConfig::parse(
        "scenario = equilibrium\nnbar0 = 0.7\ngamma = 1.3\nN = 9\n");
    const auto dir1 = fresh_dir("det1");
    const auto dir2 = fresh_dir("det2");
    REQUIRE(cmd_equilibrium(config, dir1.string()) == exit_ok);
    REQUIRE(cmd_equilibrium(config, dir2.string()) == exit_ok);
    REQUIRE(read_text_file((dir1 / "equilibrium.json").string()) ==
            read_text_file((dir2 / "equilibrium.json").string()));

    const RunConfig evo = RunConfig::parse(
        "scenario = coherent\nnbar0 = 0.5\ngamma = 1\nN = 3\ntheta = 1.1\nphi = 0.3\n"
        "tmax = 5\nnsteps = 20\n");
    const auto dir3 = fresh_dir("det3");
    const auto dir4 = fresh_dir("det4");
    REQUIRE(cmd_evolve(evo, dir3.string()) == exit_ok);
    REQUIRE(cmd_evolve(evo, dir4.string()) == exit_ok);
    for (const char* name : {"timeseries.csv", "final_state.json", "diagnostics.json"}) {
        REQUIRE(read_text_file((dir3 / name).string()) == read_text_file((dir4 / name).string()));
    }
}

TEST_CASE("command helpers cover the documented outputs") {
    const auto dir = fresh_dir("cmd");
    const RunConfig config = RunConfig::parse(
        "scenario = example2\nnbar0 = 1\ngamma = 1\nnmax = 6\ntmax = 10\nnsteps = 10\n");
    REQUIRE(cmd_evolve(config, dir.string()) == exit_ok);
    REQUIRE(std::filesystem::exists(dir / "timeseries.csv"));
    REQUIRE(std::filesystem::exists(dir / "final_state.json"));
    REQUIRE(std::filesystem::exists(dir / "diagnostics.json"));
    REQUIRE(std::filesystem::exists(dir / "wavepacket_coeffs.csv"));

    const json diag = json::parse(read_text_file((dir / "diagnostics.json").string()));
    REQUIRE(diag["trace_error"].get<double>() < 1e-10);
    REQUIRE(diag["hermiticity_error"].get<double>() < 1e-10);
    REQUIRE(diag["min_eigenvalue"].get<double>() > -1e-10);

    // the final state feeds straight back into render
    const RunConfig rconf = RunConfig::parse(
        "scenario = example2\nnbar0 = 1\ngamma = 1\nsteps = 81\n");
    REQUIRE(cmd_render(rconf, dir.string(),
                       read_text_file((dir / "final_state.json").string())) == exit_ok);
    REQUIRE(std::filesystem::exists(dir / "reduced1_grid.csv"));
    const std::string grid_text = read_text_file((dir / "reduced2_grid.csv").string());
    REQUIRE(grid_text.rfind("# -6 6 81\n", 0) == 0);
}

TEST_CASE("validation suite passes and the harness hook breaks it") {
    std::ostringstream quiet;
    REQUIRE(cmd_validate({}, quiet) == exit_ok);
    std::ostringstream broken;
    REQUIRE(cmd_validate({true}, broken) == exit_validation_failure);
    REQUIRE(broken.str().find("FAIL equilibrium-kernel-residual") != std::string::npos);
}
