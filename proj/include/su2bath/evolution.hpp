// evolution.hpp — time evolution of block-decomposed states, closed-form
// solutions of the lowest subspaces, and observable extraction

#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "su2bath/generator.hpp"
#include "su2bath/state.hpp"

namespace su2bath {

// Propagates one block by c(t) = exp(-M t) c(0). Diagonalized once so any
// time can be evaluated directly; falls back to scaling-and-squaring when
// the eigenbasis is ill conditioned.
class BlockPropagator {
  public:
    BlockPropagator(const ModelParams& params, const BlockLabel& label)
        : matrix_(build_block_generator(params, label).dense()) {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(matrix_);
        if (solver.info() == Eigen::Success) {
            const Eigen::MatrixXcd& vecs = solver.eigenvectors();
            Eigen::FullPivLU<Eigen::MatrixXcd> lu(vecs);
            if (lu.isInvertible()) {
                const Eigen::MatrixXcd inverse = lu.inverse();
                const double cond = vecs.cwiseAbs().maxCoeff() * inverse.cwiseAbs().maxCoeff() *
                                    double(matrix_.rows());
                if (cond < 1e8) {
                    values_ = solver.eigenvalues();
                    vectors_ = vecs;
                    inverse_ = inverse;
                    diagonalized_ = true;
                }
            }
        }
    }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& coeffs, double t) const {
        if (diagonalized_) {
            Eigen::VectorXcd modes = inverse_ * coeffs;
            for (int i = 0; i < modes.size(); ++i) {
                modes[i] *= std::exp(-values_[i] * t);
            }
            return vectors_ * modes;
        }
        return (-matrix_ * t).exp() * coeffs;
    }

    const Eigen::MatrixXcd& matrix() const { return matrix_; }

  private:
    Eigen::MatrixXcd matrix_;
    bool diagonalized_ = false;
    Eigen::VectorXcd values_;
    Eigen::MatrixXcd vectors_;
    Eigen::MatrixXcd inverse_;
};

constexpr int default_max_total = 64;

/// Schrodinger-picture evolution by time t >= 0; blocks evolve
/// independently. Rejects non-Hermitian input and states beyond the
/// occupation cap.
inline DensityState evolve(const DensityState& state, const ModelParams& params, double t,
                           int max_total = default_max_total) {
    if (t < 0.0) throw std::domain_error("evolve: time must be non-negative");
    if (state.hermiticity_error() > 1e-8) {
        throw std::invalid_argument("evolve: input state violates Hermiticity pairing");
    }
    if (state.max_total() > max_total) {
        throw std::length_error("evolve: state occupies subspaces above the cap of N = " +
                                std::to_string(max_total) + "; use a smaller initial state");
    }
    DensityState out;
    for (const auto& [label, vec] : state.blocks) {
        out.blocks.emplace(label, BlockPropagator(params, label).apply(vec, t));
    }
    return out;
}

// Coefficients of a state confined to the subspaces with N, Nt <= 1,
// written over the occupation basis: pop_ab multiplies |a,b><a,b| and
// coh terms multiply |a,b><c,d| as named.
struct LowSubspaceState {
    double pop00 = 0.0;
    double pop10 = 0.0;
    double pop01 = 0.0;
    std::complex<double> coh10_01;  // |1,0><0,1|
    std::complex<double> coh00_10;  // |0,0><1,0|
    std::complex<double> coh00_01;  // |0,0><0,1|
};

/// Exact interaction-picture solution of the N, Nt <= 1 subspaces:
/// the populations relax as a two-level amplitude-damping channel and each
/// coherence decays at its own rate, the |0,0><0,1| one freezing at zero
/// temperature.
inline LowSubspaceState closed_form_low_subspaces(const LowSubspaceState& initial,
                                                  const ModelParams& params, double t) {
    const double nb = params.nbar0();
    const double g = params.gamma;
    const double relax = std::exp(-g * (1.0 + 2.0 * nb) * t);
    LowSubspaceState out;
    out.pop00 = initial.pop00;
    out.pop10 = initial.pop10 * relax +
                nb * (1.0 - initial.pop00) / (1.0 + 2.0 * nb) * (1.0 - relax);
    out.pop01 = 1.0 - initial.pop00 - out.pop10;
    out.coh10_01 = initial.coh10_01 * std::exp(-(2.0 * nb + 1.0) * g * t / 2.0);
    out.coh00_10 = initial.coh00_10 * std::exp(-g * (nb + 1.0) * t / 2.0);
    out.coh00_01 = initial.coh00_01 * std::exp(-g * nb * t / 2.0);
    return out;
}

/// Assemble the block representation of a LowSubspaceState (plus Hermitian
/// conjugates of the coherences).
inline DensityState low_subspace_state(const LowSubspaceState& c) {
    DensityState state;
    state.add(0, 0, 0, 0, c.pop00);
    state.add(1, 1, 1, 1, c.pop10);
    state.add(1, 1, -1, -1, c.pop01);
    state.add(1, 1, 1, -1, c.coh10_01);
    state.add(1, 1, -1, 1, std::conj(c.coh10_01));
    state.add(0, 1, 0, 1, c.coh00_10);
    state.add(1, 0, 1, 0, std::conj(c.coh00_10));
    state.add(0, 1, 0, -1, c.coh00_01);
    state.add(1, 0, -1, 0, std::conj(c.coh00_01));
    return state;
}

inline LowSubspaceState extract_low_subspaces(const DensityState& state) {
    LowSubspaceState out;
    out.pop00 = state.coeff(BlockLabel{0, 0, 0}, 0).real();
    out.pop10 = state.coeff(BlockLabel{1, 1, 0}, 1).real();
    out.pop01 = state.coeff(BlockLabel{1, 1, 0}, -1).real();
    out.coh10_01 = state.coeff(BlockLabel{1, 1, 2}, 1);
    out.coh00_10 = state.coeff(BlockLabel{0, 1, -1}, 0);
    out.coh00_01 = state.coeff(BlockLabel{0, 1, 1}, 0);
    return out;
}

/// Interaction-picture coefficients at time t: every coefficient picks up
/// exp(i theta t); probability elements are unchanged. to_tilde(s, -t)
/// inverts the map.
inline DensityState to_tilde(const DensityState& state, const ModelParams& params, double t) {
    DensityState out;
    for (const auto& [label, vec] : state.blocks) {
        Eigen::VectorXcd rotated(vec.size());
        for (int j = 0; j < label.dim(); ++j) {
            const int r = label.r_at(j);
            const double theta =
                k0_phase(params, label.ket_total, label.bra_total, r, r - label.coherence);
            rotated[j] = vec[j] * std::polar(1.0, theta * t);
        }
        out.blocks.emplace(label, std::move(rotated));
    }
    return out;
}

struct Observables {
    double trace = 0.0;
    double purity = 0.0;
    double energy = 0.0;
    std::map<int, double> block_populations;                  // N -> weight
    std::vector<std::tuple<int, int, double>> level_populations;  // (N, r, weight)
};

inline Observables observables(const DensityState& state, const ModelParams& params) {
    Observables out;
    out.trace = state.trace();
    out.purity = state.purity();
    out.energy = state.mean_energy(params);
    out.block_populations = state.populations();
    for (const auto& [label, vec] : state.blocks) {
        if (!label.diagonal()) continue;
        for (int j = 0; j < label.dim(); ++j) {
            out.level_populations.emplace_back(label.ket_total, label.r_at(j), vec[j].real());
        }
    }
    return out;
}

// Address of one tracked coefficient for time-series output.
struct CoefficientAddress {
    int ket_total;
    int bra_total;
    int r;
    int rt;

    BlockLabel label() const { return {ket_total, bra_total, r - rt}; }

    std::string column_stub() const {
        return std::to_string(ket_total) + "_" + std::to_string(bra_total) + "_" +
               std::to_string(r) + "_" + std::to_string(rt);
    }
};

struct TimeSeries {
    std::vector<std::string> columns;        // including leading "t"
    std::vector<std::vector<double>> rows;   // one row per time
};

/// Evolve from t = 0 and record trace, purity, energy, diagonal-block
/// populations and any tracked coefficients at nsteps+1 uniform times.
inline TimeSeries sample_evolution(const DensityState& initial, const ModelParams& params,
                                   double tmax, int nsteps,
                                   const std::vector<CoefficientAddress>& tracked = {},
                                   int max_total = default_max_total) {
    if (tmax < 0.0) throw std::domain_error("sample_evolution: tmax must be non-negative");
    if (nsteps < 1) throw std::domain_error("sample_evolution: nsteps must be positive");
    if (initial.hermiticity_error() > 1e-8) {
        throw std::invalid_argument("sample_evolution: input violates Hermiticity pairing");
    }
    if (initial.max_total() > max_total) {
        throw std::length_error("sample_evolution: state occupies subspaces above the cap of N = " +
                                std::to_string(max_total) + "; use a smaller initial state");
    }

    std::map<BlockLabel, BlockPropagator> propagators;
    for (const auto& [label, vec] : initial.blocks) {
        propagators.emplace(label, BlockPropagator(params, label));
    }
    std::vector<int> diagonal_totals;
    for (const auto& [label, vec] : initial.blocks) {
        if (label.diagonal()) diagonal_totals.push_back(label.ket_total);
    }

    TimeSeries series;
    series.columns = {"t", "trace", "purity", "energy"};
    for (int total : diagonal_totals) series.columns.push_back("pop_N" + std::to_string(total));
    for (const auto& address : tracked) {
        series.columns.push_back("re_" + address.column_stub());
        series.columns.push_back("im_" + address.column_stub());
    }

    for (int step = 0; step <= nsteps; ++step) {
        const double t = tmax * double(step) / double(nsteps);
        DensityState now;
        for (const auto& [label, vec] : initial.blocks) {
            now.blocks.emplace(label, propagators.at(label).apply(vec, t));
        }
        std::vector<double> row = {t, now.trace(), now.purity(), now.mean_energy(params)};
        for (int total : diagonal_totals) row.push_back(now.population(total));
        for (const auto& address : tracked) {
            const std::complex<double> value = now.coeff(address.label(), address.r);
            row.push_back(value.real());
            row.push_back(value.imag());
        }
        series.rows.push_back(std::move(row));
    }
    return series;
}

/// Validation-only propagation in the interaction picture, where the
/// dissipator is explicitly time dependent: classical fourth-order stepping
/// of cdot = -M(t) c at fixed step gamma*dt.
inline DensityState evolve_interaction_picture(const DensityState& tilde_state,
                                               const ModelParams& params, double t,
                                               double gamma_dt = 1e-3) {
    if (t < 0.0) throw std::domain_error("evolve_interaction_picture: time must be non-negative");
    const double dt = gamma_dt / params.gamma;
    DensityState out;
    for (const auto& [label, vec] : tilde_state.blocks) {
        const auto rhs = [&](double time, const Eigen::VectorXcd& c) -> Eigen::VectorXcd {
            return -(interaction_picture_generator(params, label, time).dense() * c);
        };
        Eigen::VectorXcd c = vec;
        double now = 0.0;
        while (now < t) {
            const double h = std::min(dt, t - now);
            const Eigen::VectorXcd k1 = rhs(now, c);
            const Eigen::VectorXcd k2 = rhs(now + 0.5 * h, c + 0.5 * h * k1);
            const Eigen::VectorXcd k3 = rhs(now + 0.5 * h, c + 0.5 * h * k2);
            const Eigen::VectorXcd k4 = rhs(now + h, c + h * k3);
            c += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            now += h;
        }
        out.blocks.emplace(label, std::move(c));
    }
    return out;
}

} // namespace su2bath
