// render.hpp — coordinate-space representation of single-mode density
// matrices on (x, xt) grids, in dimensionless oscillator units

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "su2bath/hermite.hpp"

namespace su2bath {

struct GridSpec {
    double xmin = -6.0;
    double xmax = 6.0;
    int steps = 241;

    void check() const {
        if (!(xmin < xmax)) throw std::domain_error("GridSpec: require xmin < xmax");
        if (steps < 2) throw std::domain_error("GridSpec: require at least 2 steps");
    }

    double x_at(int i) const { return xmin + (xmax - xmin) * double(i) / double(steps - 1); }
};

struct Grid {
    double xmin;
    double xmax;
    int steps;
    Eigen::MatrixXd values;   // Re rho(x_i, xt_j)
    bool narrow_warning;      // diagonal mass below 0.99
};

/// rho(x, xt) = sum_{n,m} rho_{nm} psi_n(x) psi_m(xt) at one point.
inline std::complex<double> density_point(const Eigen::MatrixXcd& rho, double x, double xt) {
    const int nmax = int(rho.rows()) - 1;
    const Eigen::VectorXd px = oscillator_eigenfunctions(nmax, x);
    const Eigen::VectorXd pxt = oscillator_eigenfunctions(nmax, xt);
    return px.transpose().cast<std::complex<double>>() * rho * pxt.cast<std::complex<double>>();
}

/// Real part of rho(x, xt) on a square grid. Flags the grid as too narrow
/// when the trapezoidal mass along the diagonal falls below 0.99.
inline Grid density_grid(const Eigen::MatrixXcd& rho, const GridSpec& spec = {}) {
    spec.check();
    if (rho.rows() != rho.cols()) throw std::invalid_argument("density_grid: matrix must be square");
    const int nmax = int(rho.rows()) - 1;
    const int steps = spec.steps;

    Eigen::MatrixXd psi(steps, nmax + 1);
    for (int i = 0; i < steps; ++i) {
        psi.row(i) = oscillator_eigenfunctions(nmax, spec.x_at(i)).transpose();
    }
    // psi is real, so this is exactly Re rho(x, xt)
    const Eigen::MatrixXd values = psi * rho.real() * psi.transpose();
    Grid grid{spec.xmin, spec.xmax, steps, values, false};

    const double dx = (spec.xmax - spec.xmin) / double(steps - 1);
    double mass = 0.0;
    for (int i = 0; i < steps; ++i) {
        const double weight = (i == 0 || i == steps - 1) ? 0.5 : 1.0;
        mass += weight * grid.values(i, i) * dx;
    }
    grid.narrow_warning = mass < 0.99;
    return grid;
}

/// Count strict local maxima along the grid diagonal, ignoring values below
/// a small fraction of the peak.
inline int count_diagonal_maxima(const Grid& grid, double floor_fraction = 1e-3) {
    std::vector<double> diag(grid.steps);
    double peak = 0.0;
    for (int i = 0; i < grid.steps; ++i) {
        diag[i] = grid.values(i, i);
        peak = std::max(peak, std::abs(diag[i]));
    }
    const double floor = floor_fraction * peak;
    int count = 0;
    for (int i = 1; i + 1 < grid.steps; ++i) {
        if (diag[i] > floor && diag[i] > diag[i - 1] && diag[i] > diag[i + 1]) ++count;
    }
    return count;
}

} // namespace su2bath
