// io.hpp — serialization of states, equilibrium records, time series and
// grids; output is deterministic: fixed iteration order and 17-significant-
// digit number formatting

#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "su2bath/equilibrium.hpp"
#include "su2bath/evolution.hpp"
#include "su2bath/render.hpp"
#include "su2bath/state.hpp"

namespace su2bath {

using json = nlohmann::ordered_json;

inline std::string format_full(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

/// State as a JSON array of [N, Ntilde, r, rtilde, re, im] records, one per
/// stored coefficient, blocks ascending and r descending within a block.
inline json density_state_to_json(const DensityState& state) {
    json entries = json::array();
    for (const auto& [label, vec] : state.blocks) {
        for (int j = 0; j < label.dim(); ++j) {
            const int r = label.r_at(j);
            entries.push_back({label.ket_total, label.bra_total, r, r - label.coherence,
                               vec[j].real(), vec[j].imag()});
        }
    }
    return entries;
}

inline DensityState density_state_from_json(const json& entries) {
    if (!entries.is_array()) {
        throw std::invalid_argument("density state JSON must be an array of records");
    }
    DensityState state;
    for (const auto& entry : entries) {
        if (!entry.is_array() || entry.size() != 6) {
            throw std::invalid_argument(
                "density state record must be [N, Ntilde, r, rtilde, re, im]");
        }
        state.add(entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>(),
                  entry[3].get<int>(),
                  std::complex<double>(entry[4].get<double>(), entry[5].get<double>()));
    }
    return state;
}

inline json equilibrium_to_json(const EquilibriumSpec& spec) {
    json record;
    record["N"] = spec.total;
    record["nbar0"] = spec.nbar0;
    record["weights"] = std::vector<double>(spec.weights.begin(), spec.weights.end());
    record["Z"] = spec.Z;
    return record;
}

inline void write_timeseries_csv(std::ostream& out, const TimeSeries& series) {
    for (std::size_t i = 0; i < series.columns.size(); ++i) {
        out << (i ? "," : "") << series.columns[i];
    }
    out << "\n";
    for (const auto& row : series.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_full(row[i]);
        }
        out << "\n";
    }
}

/// Grid CSV: first row "# xmin xmax steps", then steps rows of steps values.
inline void write_grid_csv(std::ostream& out, const Grid& grid) {
    out << "# " << format_full(grid.xmin) << " " << format_full(grid.xmax) << " " << grid.steps
        << "\n";
    for (int i = 0; i < grid.steps; ++i) {
        for (int j = 0; j < grid.steps; ++j) {
            out << (j ? "," : "") << format_full(grid.values(i, j));
        }
        out << "\n";
    }
}

inline void write_coefficients_csv(std::ostream& out, const Eigen::VectorXd& c) {
    out << "n,c\n";
    for (int n = 0; n < c.size(); ++n) {
        out << n << "," << format_full(c[n]) << "\n";
    }
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace su2bath
