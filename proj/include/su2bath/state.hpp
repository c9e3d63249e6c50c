// state.hpp — density operators expressed over the block basis: sparse map
// from BlockLabel to a coefficient vector indexed by descending r

#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "su2bath/fock.hpp"
#include "su2bath/generator.hpp"
#include "su2bath/hilbert.hpp"

namespace su2bath {

enum class Oscillator { first, second };

struct DensityState {
    std::map<BlockLabel, Eigen::VectorXcd> blocks;

    Eigen::VectorXcd& block(const BlockLabel& label) {
        if (label.dim() == 0) throw std::domain_error("DensityState: empty block label");
        auto it = blocks.find(label);
        if (it == blocks.end()) {
            it = blocks.emplace(label, Eigen::VectorXcd::Zero(label.dim())).first;
        }
        return it->second;
    }

    std::complex<double> coeff(const BlockLabel& label, int r) const {
        auto it = blocks.find(label);
        if (it == blocks.end()) return {0.0, 0.0};
        return it->second[label.index_of(r)];
    }

    void add(int ket_total, int bra_total, int r, int rt, std::complex<double> value) {
        const KetLabel ket(ket_total, r);
        const KetLabel bra(bra_total, rt);
        const BlockLabel label{ket.total, bra.total, ket.diff - bra.diff};
        block(label)[label.index_of(r)] += value;
    }

    /// Largest total occupation appearing on either side of any block.
    int max_total() const {
        int m = 0;
        for (const auto& [label, vec] : blocks) {
            m = std::max({m, label.ket_total, label.bra_total});
        }
        return m;
    }

    /// Trace, summed over diagonal blocks in ascending label order.
    double trace() const {
        std::complex<double> sum = 0.0;
        for (const auto& [label, vec] : blocks) {
            if (label.diagonal()) sum += vec.sum();
        }
        return sum.real();
    }

    /// Purity Tr rho^2 = sum of |coefficient|^2 over all blocks, valid for
    /// Hermitian states.
    double purity() const {
        double sum = 0.0;
        for (const auto& [label, vec] : blocks) sum += vec.squaredNorm();
        return sum;
    }

    double mean_energy(const ModelParams& params) const {
        double sum = 0.0;
        for (const auto& [label, vec] : blocks) {
            if (!label.diagonal()) continue;
            for (int j = 0; j < label.dim(); ++j) {
                sum += vec[j].real() * energy(params, KetLabel(label.ket_total, label.r_at(j)));
            }
        }
        return sum;
    }

    /// Worst violation of the pairing c^(N,Nt)_{r;rt} = conj c^(Nt,N)_{rt;r}.
    double hermiticity_error() const {
        double worst = 0.0;
        for (const auto& [label, vec] : blocks) {
            const BlockLabel adj = label.adjoint();
            for (int j = 0; j < label.dim(); ++j) {
                const int r = label.r_at(j);
                const std::complex<double> partner = coeff(adj, r - label.coherence);
                worst = std::max(worst, std::abs(vec[j] - std::conj(partner)));
            }
        }
        return worst;
    }

    /// Population of the diagonal subspace with total occupation N.
    double population(int total) const {
        auto it = blocks.find(BlockLabel{total, total, 0});
        if (it == blocks.end()) return 0.0;
        return it->second.sum().real();
    }

    std::map<int, double> populations() const {
        std::map<int, double> out;
        for (const auto& [label, vec] : blocks) {
            if (label.diagonal()) out[label.ket_total] = vec.sum().real();
        }
        return out;
    }

    /// Drop blocks whose coefficients are all exactly zero.
    void prune() {
        for (auto it = blocks.begin(); it != blocks.end();) {
            if (it->second.isZero(0.0)) it = blocks.erase(it);
            else ++it;
        }
    }
};

/// Reassemble the state as a Hermitian matrix over the occupation sector
/// n1 + n2 <= max N present.
inline Eigen::MatrixXcd reconstruct_operator(const DensityState& state, const SectorBasis& basis) {
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(basis.dim(), basis.dim());
    for (const auto& [label, vec] : state.blocks) {
        for (int j = 0; j < label.dim(); ++j) {
            const KetLabel ket(label.ket_total, label.r_at(j));
            const KetLabel bra(label.bra_total, label.r_at(j) - label.coherence);
            op(basis.index(ket.n1(), ket.n2()), basis.index(bra.n1(), bra.n2())) += vec[j];
        }
    }
    return op;
}

inline Eigen::MatrixXcd reconstruct_operator(const DensityState& state) {
    return reconstruct_operator(state, SectorBasis(state.max_total()));
}

/// Smallest eigenvalue of the reconstructed operator; >= -tolerance for a
/// physical state.
inline double min_eigenvalue(const DensityState& state) {
    const Eigen::MatrixXcd op = reconstruct_operator(state);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        0.5 * (op + op.adjoint()), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

/// Partial trace onto a single mode: Tr_2 |n1,n2><m1,m2| = delta_{n2,m2} |n1><m1|
/// and symmetrically for Tr_1. Returned over occupations 0..max_total.
inline Eigen::MatrixXcd reduced_state(const DensityState& state, Oscillator keep) {
    const int n = state.max_total() + 1;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [label, vec] : state.blocks) {
        for (int j = 0; j < label.dim(); ++j) {
            const KetLabel ket(label.ket_total, label.r_at(j));
            const KetLabel bra(label.bra_total, label.r_at(j) - label.coherence);
            if (keep == Oscillator::first) {
                if (ket.n2() == bra.n2()) rho(ket.n1(), bra.n1()) += vec[j];
            } else {
                if (ket.n1() == bra.n1()) rho(ket.n2(), bra.n2()) += vec[j];
            }
        }
    }
    return rho;
}

} // namespace su2bath
