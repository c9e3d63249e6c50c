// hermite.hpp — harmonic-oscillator eigenfunctions psi_n(x) evaluated by the
// stable three-term recurrence on the weighted functions

#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace su2bath {

/// psi_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)) for n = 0..nmax.
/// The recurrence psi_{n+1} = sqrt(2/(n+1)) x psi_n - sqrt(n/(n+1)) psi_{n-1}
/// keeps magnitudes bounded where the raw polynomials overflow.
inline Eigen::VectorXd oscillator_eigenfunctions(int nmax, double x) {
    if (nmax < 0) throw std::domain_error("oscillator_eigenfunctions: nmax must be non-negative");
    Eigen::VectorXd psi(nmax + 1);
    psi[0] = std::exp(-0.5 * x * x) / std::pow(M_PI, 0.25);
    if (nmax >= 1) psi[1] = std::sqrt(2.0) * x * psi[0];
    for (int n = 1; n < nmax; ++n) {
        psi[n + 1] = std::sqrt(2.0 / (n + 1.0)) * x * psi[n] -
                     std::sqrt(n / (n + 1.0)) * psi[n - 1];
    }
    return psi;
}

inline double oscillator_eigenfunction(int n, double x) {
    return oscillator_eigenfunctions(n, x)[n];
}

} // namespace su2bath
