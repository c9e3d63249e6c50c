// equilibrium.hpp — the analytic stationary family per irreducible
// subspace, its thermal-statistics checks, and the zero-temperature
// decoherence-free states

#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "su2bath/generator.hpp"
#include "su2bath/state.hpp"

namespace su2bath {

// Stationary weights of one subspace: p_{N-2n2} = nbar^{N-n2} (1+nbar)^{n2},
// indexed by n2 = 0..N (equivalently descending r), with normalization
// Z = (1+nbar)^{N+1} - nbar^{N+1}.
struct EquilibriumSpec {
    int total;
    double nbar0;
    Eigen::VectorXd weights;  // raw p, index n2
    double Z;

    /// p/Z evaluated in log space, safe where raw p would overflow.
    Eigen::VectorXd normalized() const {
        Eigen::VectorXd out(total + 1);
        if (nbar0 == 0.0) {
            out.setZero();
            out[total] = 1.0;
            return out;
        }
        const double la = std::log(nbar0);
        const double lb = std::log1p(nbar0);
        // log Z = (N+1)*lb + log(1 - (nbar/(1+nbar))^{N+1})
        const double logz = (total + 1) * lb + std::log1p(-std::exp((total + 1) * (la - lb)));
        for (int n2 = 0; n2 <= total; ++n2) {
            out[n2] = std::exp((total - n2) * la + n2 * lb - logz);
        }
        return out;
    }
};

inline EquilibriumSpec make_equilibrium_spec(int total, double nbar0) {
    if (total < 0) throw std::domain_error("make_equilibrium_spec: total must be non-negative");
    if (nbar0 < 0.0) throw std::domain_error("make_equilibrium_spec: occupancy must be non-negative");
    EquilibriumSpec spec{total, nbar0, Eigen::VectorXd(total + 1), 0.0};
    if (nbar0 == 0.0) {
        spec.weights.setZero();
        spec.weights[total] = 1.0;
        spec.Z = 1.0;
        return spec;
    }
    if (total <= 40) {
        for (int n2 = 0; n2 <= total; ++n2) {
            spec.weights[n2] = std::pow(nbar0, total - n2) * std::pow(1.0 + nbar0, n2);
        }
    } else {
        const double la = std::log(nbar0);
        const double lb = std::log1p(nbar0);
        for (int n2 = 0; n2 <= total; ++n2) {
            spec.weights[n2] = std::exp((total - n2) * la + n2 * lb);
        }
    }
    spec.Z = std::pow(1.0 + nbar0, total + 1) - std::pow(nbar0, total + 1);
    return spec;
}

/// Unit-trace stationary state of the subspace with total occupation N,
/// supported on the diagonal block (N, N, 0) and annihilated by the
/// generator.
inline DensityState equilibrium_state(const ModelParams& params, int total) {
    const EquilibriumSpec spec = make_equilibrium_spec(total, params.nbar0());
    DensityState state;
    const BlockLabel label{total, total, 0};
    state.block(label) = spec.normalized().cast<std::complex<double>>();
    return state;
}

/// Worst relative deviation of the weights from thermal statistics: the
/// detailed-balance ratio p_{r-2}/p_r = (1+nbar)/nbar between adjacent
/// levels, and the canonical form p = [e^{beta omega2}(1+nbar)]^N e^{-beta E}.
inline double canonical_check(const EquilibriumSpec& spec, const ModelParams& params) {
    if (spec.nbar0 <= 0.0) {
        throw std::domain_error("canonical_check: undefined weight ratio at nbar0 = 0");
    }
    const double expected = (1.0 + spec.nbar0) / spec.nbar0;
    double worst = 0.0;
    for (int n2 = 0; n2 + 1 <= spec.total; ++n2) {
        // weights[n2] = p_{N-2n2}; the next entry is two r-levels below
        const double ratio = spec.weights[n2 + 1] / spec.weights[n2];
        worst = std::max(worst, std::abs(ratio / expected - 1.0));
    }
    const double beta = beta_for_occupancy(spec.nbar0, params.omega0());
    const double prefactor =
        double(spec.total) * (beta * params.omega2 + std::log1p(spec.nbar0));
    for (int n2 = 0; n2 <= spec.total; ++n2) {
        const KetLabel level(spec.total, spec.total - 2 * n2);
        const double canonical = std::exp(prefactor - beta * energy(params, level));
        worst = std::max(worst, std::abs(spec.weights[n2] / canonical - 1.0));
    }
    return worst;
}

/// Zero-temperature stationary family built on the lowest basis elements:
///   f' = sum_N c_N f^(N)_{-N} + sum_{N != Nt} (c'_{N,Nt} f^(N,Nt)_{-N;-Nt} + h.c.).
/// Every term factorizes as |0><0| (x) |N><Nt| on mode 1, so the family is
/// the image of an arbitrary mode-2 density matrix; positivity of that
/// matrix is validated by explicit eigendecomposition.
inline DensityState zero_T_invariant_family(
    const std::vector<double>& diagonal_coeffs,
    const std::map<std::pair<int, int>, std::complex<double>>& offdiagonal_coeffs,
    const ModelParams& params) {
    if (params.nbar0() != 0.0) {
        throw std::domain_error("zero_T_invariant_family: requires nbar0 = 0 (beta = +inf)");
    }
    int top = int(diagonal_coeffs.size()) - 1;
    double sum = 0.0;
    for (double c : diagonal_coeffs) sum += c;
    if (std::abs(sum - 1.0) > 1e-10) {
        throw std::invalid_argument("zero_T_invariant_family: diagonal coefficients must sum to 1");
    }
    for (const auto& [pair, c] : offdiagonal_coeffs) {
        if (pair.first == pair.second) {
            throw std::invalid_argument("zero_T_invariant_family: off-diagonal entry with N = Nt");
        }
        if (pair.first < 0 || pair.second < 0) {
            throw std::domain_error("zero_T_invariant_family: negative subspace label");
        }
        top = std::max({top, pair.first, pair.second});
    }

    // positivity of the mode-2 matrix rho2[N,Nt]
    Eigen::MatrixXcd rho2 = Eigen::MatrixXcd::Zero(top + 1, top + 1);
    for (int n = 0; n < int(diagonal_coeffs.size()); ++n) rho2(n, n) = diagonal_coeffs[n];
    for (const auto& [pair, c] : offdiagonal_coeffs) {
        rho2(pair.first, pair.second) += c;
        rho2(pair.second, pair.first) += std::conj(c);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho2, Eigen::EigenvaluesOnly);
    const double lowest = solver.eigenvalues().minCoeff();
    if (lowest < -1e-12) {
        throw std::invalid_argument("zero_T_invariant_family: not positive semidefinite, eigenvalue " +
                                    std::to_string(lowest));
    }

    DensityState state;
    for (int n = 0; n < int(diagonal_coeffs.size()); ++n) {
        if (diagonal_coeffs[n] != 0.0) state.add(n, n, -n, -n, diagonal_coeffs[n]);
    }
    for (const auto& [pair, c] : offdiagonal_coeffs) {
        state.add(pair.first, pair.second, -pair.first, -pair.second, c);
        state.add(pair.second, pair.first, -pair.second, -pair.first, std::conj(c));
    }
    return state;
}

/// Level distribution of the equilibrium state reduced to one mode. For
/// mode 1: p(n1) proportional to e^{-n1 beta omega0}, n1 <= N; mode 2 is the
/// same sequence in reversed level order.
inline Eigen::VectorXd equilibrium_reduced_distribution(const EquilibriumSpec& spec,
                                                        Oscillator keep) {
    const Eigen::VectorXd w = spec.normalized();
    Eigen::VectorXd out(spec.total + 1);
    for (int n2 = 0; n2 <= spec.total; ++n2) {
        if (keep == Oscillator::first) out[spec.total - n2] = w[n2];
        else out[n2] = w[n2];
    }
    return out;
}

/// Geometric Gibbs distribution e^{-n x}(1 - e^{-x}) over n = 0..count-1.
inline Eigen::VectorXd gibbs_distribution(double beta_omega, int count) {
    Eigen::VectorXd out(count);
    for (int n = 0; n < count; ++n) {
        out[n] = std::exp(-n * beta_omega) * (-std::expm1(-beta_omega));
    }
    return out;
}

} // namespace su2bath
