// hilbert.hpp — SU(2) ladder algebra on the two-oscillator Fock space:
// subspace labels, ladder coefficients, energies, generalized coherent
// states and the two-mode rotation

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "su2bath/bath.hpp"

namespace su2bath {

// Basis ket |r>_N of the irreducible subspace with total occupation
// N = n1 + n2 and occupation difference r = n1 - n2. The pair (N, r) is
// the canonical identity; the occupations are derived accessors.
struct KetLabel {
    int total;  // N
    int diff;   // r

    KetLabel(int total_, int diff_) : total(total_), diff(diff_) {
        if (total < 0) throw std::domain_error("KetLabel: total occupation must be non-negative");
        if (std::abs(diff) > total) {
            throw std::domain_error("KetLabel: require |r| <= N, got N=" + std::to_string(total) +
                                    " r=" + std::to_string(diff));
        }
        if ((total - diff) % 2 != 0) {
            throw std::domain_error("KetLabel: r and N must have equal parity, got N=" +
                                    std::to_string(total) + " r=" + std::to_string(diff));
        }
    }

    static KetLabel from_occupations(int n1, int n2) {
        if (n1 < 0 || n2 < 0) throw std::domain_error("KetLabel: occupations must be non-negative");
        return KetLabel(n1 + n2, n1 - n2);
    }

    int n1() const { return (total + diff) / 2; }
    int n2() const { return (total - diff) / 2; }
};

/// Coefficient in L+ |r>_N = c |r+2>_N; vanishes at the highest state r = N.
inline double ladder_plus_coeff(const KetLabel& s) {
    return 0.5 * std::sqrt(double(s.total + s.diff + 2) * double(s.total - s.diff));
}
inline double ladder_plus_coeff(int total, int diff) {
    return ladder_plus_coeff(KetLabel(total, diff));
}

/// Coefficient in L- |r>_N = c |r-2>_N; vanishes at the lowest state r = -N.
inline double ladder_minus_coeff(const KetLabel& s) {
    return 0.5 * std::sqrt(double(s.total + s.diff) * double(s.total - s.diff + 2));
}
inline double ladder_minus_coeff(int total, int diff) {
    return ladder_minus_coeff(KetLabel(total, diff));
}

// Squared ladder coefficients, computed without the square root so integer
// inputs stay exact.
inline double ladder_plus_sq(const KetLabel& s) {
    return 0.25 * double(s.total + s.diff + 2) * double(s.total - s.diff);
}
inline double ladder_minus_sq(const KetLabel& s) {
    return 0.25 * double(s.total + s.diff) * double(s.total - s.diff + 2);
}

/// Energy of |r>_N: (N*omega0' + r*omega0)/2 = omega1*n1 + omega2*n2.
inline double energy(const ModelParams& params, const KetLabel& s) {
    return 0.5 * (s.total * params.omega0_prime() + s.diff * params.omega0());
}

/// Eigenvalue of the Casimir operator L^2 on the N subspace, N(N+2)/4.
inline double casimir_eigenvalue(int total) {
    if (total < 0) throw std::domain_error("casimir_eigenvalue: total occupation must be non-negative");
    return 0.25 * double(total) * double(total + 2);
}

/// Eigenvalue of L0 on |r>_N, r/2.
inline double l0_eigenvalue(int diff) { return 0.5 * diff; }

/// Binomial coefficient as a double; exact products for small n, log-gamma
/// above n = 30 so coefficients up to n ~ 1000 stay finite.
inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= 30) {
        double result = 1.0;
        for (int i = 1; i <= k; ++i) result *= double(n - k + i) / double(i);
        return result;
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

/// Expansion coefficients of the SU(2) generalized coherent state |tau>_N
/// over n1 = 0..N, with tau = tan(theta/2) e^{-i phi}:
///   c_{n1} = sqrt(binom(N,n1)) sin^{n1}(theta/2) cos^{N-n1}(theta/2) e^{-i n1 phi}.
/// The pole theta = pi maps to the limit state concentrated on n1 = N.
inline Eigen::VectorXcd su2_coherent_coeffs(int total, double theta, double phi) {
    if (total < 0) throw std::domain_error("su2_coherent_coeffs: total occupation must be non-negative");
    const double s = std::sin(0.5 * theta);
    const double c = std::cos(0.5 * theta);
    Eigen::VectorXcd coeffs(total + 1);
    for (int n1 = 0; n1 <= total; ++n1) {
        double mag;
        if (s == 0.0) {
            mag = (n1 == 0) ? 1.0 : 0.0;
        } else if (c == 0.0) {
            mag = (n1 == total) ? 1.0 : 0.0;
        } else {
            mag = std::exp(0.5 * (std::lgamma(total + 1.0) - std::lgamma(n1 + 1.0) -
                                  std::lgamma(total - n1 + 1.0)) +
                           n1 * std::log(std::abs(s)) + (total - n1) * std::log(std::abs(c)));
            if (s < 0.0 && (n1 % 2)) mag = -mag;
            if (c < 0.0 && ((total - n1) % 2)) mag = -mag;
        }
        coeffs[n1] = mag * std::polar(1.0, -phi * n1);
    }
    return coeffs;
}

// Two-mode rotation (a1, a2)^T = U (b1, b2)^T relating the oscillator pair
// to an equivalent pair coupled through SU(2) interactions.
struct ModeTransform {
    double theta;
    double phi;
    Eigen::Matrix2cd matrix;
};

inline ModeTransform mode_transform(double theta, double phi) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const std::complex<double> ep = std::polar(1.0, 0.5 * phi);
    const std::complex<double> em = std::polar(1.0, -0.5 * phi);
    Eigen::Matrix2cd m;
    m << ep * c, em * s,
        -ep * s, em * c;
    return {theta, phi, m};
}

} // namespace su2bath
