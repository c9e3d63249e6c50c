// states.hpp — initial-state constructions: two-peak wavepacket expansion,
// product and pair-correlated states, and SU(2) coherent densities

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "su2bath/hermite.hpp"
#include "su2bath/hilbert.hpp"
#include "su2bath/state.hpp"

namespace su2bath {

// Superposition of two Gaussians centered at +-a with relative height
// ratio, phi(x) = ratio*e^{-(x-a)^2} + e^{-(x+a)^2} up to normalization,
// expanded over oscillator eigenfunctions up to nmax.
struct WavepacketSpec {
    double displacement = 2.0;  // a
    double ratio = 2.0;         // height of the +a peak relative to the -a peak
    int nmax = 32;

    void check() const {
        if (nmax < 0) throw std::domain_error("WavepacketSpec: nmax must be non-negative");
        if (!(ratio > 0.0)) throw std::domain_error("WavepacketSpec: ratio must be positive");
        if (!(displacement >= 0.0)) {
            throw std::domain_error("WavepacketSpec: displacement must be non-negative");
        }
    }
};

struct WavepacketCoeffs {
    Eigen::VectorXd c;        // projection coefficients, n = 0..nmax
    double norm_deficit;      // 1 - sum c_n^2
    bool truncation_warning;  // nmax captured less than 1 - 1e-3 of the norm
};

/// Projection coefficients c_n = <n|phi> of the normalized two-peak
/// wavepacket, by adaptive quadrature over the real line.
inline WavepacketCoeffs gaussian_superposition_coeffs(const WavepacketSpec& spec) {
    spec.check();
    using quad = boost::math::quadrature::gauss_kronrod<double, 15>;
    const double inf = std::numeric_limits<double>::infinity();
    const double a = spec.displacement;
    const auto raw = [&](double x) {
        return spec.ratio * std::exp(-(x - a) * (x - a)) + std::exp(-(x + a) * (x + a));
    };
    const double norm =
        std::sqrt(quad::integrate([&](double x) { double p = raw(x); return p * p; }, -inf, inf,
                                  15, 1e-13));
    WavepacketCoeffs out{Eigen::VectorXd(spec.nmax + 1), 0.0, false};
    for (int n = 0; n <= spec.nmax; ++n) {
        out.c[n] = quad::integrate(
                       [&](double x) { return oscillator_eigenfunction(n, x) * raw(x); }, -inf,
                       inf, 15, 1e-13) /
                   norm;
    }
    out.norm_deficit = 1.0 - out.c.squaredNorm();
    out.truncation_warning = out.norm_deficit > 1e-3;
    return out;
}

namespace detail {

inline void require_normalized(const Eigen::VectorXcd& c, const char* who) {
    if (std::abs(c.squaredNorm() - 1.0) > 1e-8) {
        throw std::invalid_argument(std::string(who) + ": coefficient vector must have unit norm");
    }
}

} // namespace detail

/// Uncorrelated initial state (sum_n c_n |n>) (x) |0>: each (n, m) pair
/// lands at the top element of block (n, m, n - m).
inline DensityState product_state(const Eigen::VectorXcd& c) {
    detail::require_normalized(c, "product_state");
    DensityState state;
    for (int n = 0; n < c.size(); ++n) {
        for (int m = 0; m < c.size(); ++m) {
            const std::complex<double> value = c[n] * std::conj(c[m]);
            if (value != 0.0) state.add(n, m, n, m, value);
        }
    }
    state.prune();
    return state;
}

/// Pair-correlated state sum_n c_n |n,n>: populates only the even-total
/// subspaces, at r = rt = 0 of blocks (2n, 2m, 0).
inline DensityState correlated_state(const Eigen::VectorXcd& c) {
    detail::require_normalized(c, "correlated_state");
    DensityState state;
    for (int n = 0; n < c.size(); ++n) {
        for (int m = 0; m < c.size(); ++m) {
            const std::complex<double> value = c[n] * std::conj(c[m]);
            if (value != 0.0) state.add(2 * n, 2 * m, 0, 0, value);
        }
    }
    state.prune();
    return state;
}

/// Pure SU(2) coherent density |tau>_N <tau|, confined to the (N, N, nu)
/// blocks.
inline DensityState coherent_density(int total, double theta, double phi) {
    const Eigen::VectorXcd c = su2_coherent_coeffs(total, theta, phi);
    DensityState state;
    for (int n1 = 0; n1 <= total; ++n1) {
        for (int m1 = 0; m1 <= total; ++m1) {
            const std::complex<double> value = c[n1] * std::conj(c[m1]);
            if (value != 0.0) state.add(total, total, 2 * n1 - total, 2 * m1 - total, value);
        }
    }
    state.prune();
    return state;
}

} // namespace su2bath
