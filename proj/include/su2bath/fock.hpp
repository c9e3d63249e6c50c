// fock.hpp — truncated two-mode Fock space plumbing: index maps and dense
// mode operators used by the brute-force superoperator and by state
// reconstruction

#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "su2bath/bath.hpp"

namespace su2bath {

// Square truncation n1, n2 <= nmax with index n1*(nmax+1) + n2.
struct FockGrid {
    int nmax;

    explicit FockGrid(int nmax_) : nmax(nmax_) {
        if (nmax < 0) throw std::domain_error("FockGrid: nmax must be non-negative");
    }

    int dim() const { return (nmax + 1) * (nmax + 1); }
    int index(int n1, int n2) const { return n1 * (nmax + 1) + n2; }
    std::pair<int, int> occupations(int index) const {
        return {index / (nmax + 1), index % (nmax + 1)};
    }
};

/// Single-mode annihilation operator on occupations 0..nmax.
inline Eigen::MatrixXd mode_annihilation(int nmax) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nmax + 1, nmax + 1);
    for (int n = 1; n <= nmax; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

inline Eigen::MatrixXd annihilation_mode1(const FockGrid& grid) {
    const Eigen::MatrixXd a = mode_annihilation(grid.nmax);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(grid.nmax + 1, grid.nmax + 1);
    Eigen::MatrixXd out(grid.dim(), grid.dim());
    out = Eigen::kroneckerProduct(a, id);
    return out;
}

inline Eigen::MatrixXd annihilation_mode2(const FockGrid& grid) {
    const Eigen::MatrixXd a = mode_annihilation(grid.nmax);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(grid.nmax + 1, grid.nmax + 1);
    Eigen::MatrixXd out(grid.dim(), grid.dim());
    out = Eigen::kroneckerProduct(id, a);
    return out;
}

/// Collective raising operator L+ = a1^dag a2 on the truncated grid.
inline Eigen::MatrixXd collective_raising(const FockGrid& grid) {
    return annihilation_mode1(grid).transpose() * annihilation_mode2(grid);
}

/// Collective lowering operator L- = a1 a2^dag.
inline Eigen::MatrixXd collective_lowering(const FockGrid& grid) {
    return annihilation_mode1(grid) * annihilation_mode2(grid).transpose();
}

/// Renormalized free Hamiltonian
///   H0' = (omega1 - dw1) n1 + (omega2 - dw2) n2 - dw0' n1 n2,
/// diagonal in the occupation basis.
inline Eigen::MatrixXd renormalized_hamiltonian(const ModelParams& params, const FockGrid& grid) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(grid.dim(), grid.dim());
    for (int n1 = 0; n1 <= grid.nmax; ++n1) {
        for (int n2 = 0; n2 <= grid.nmax; ++n2) {
            h(grid.index(n1, n2), grid.index(n1, n2)) =
                (params.omega1 - params.delta_omega1) * n1 +
                (params.omega2 - params.delta_omega2) * n2 -
                params.delta_omega0_prime() * double(n1) * double(n2);
        }
    }
    return h;
}

// Triangular sector n1 + n2 <= max_total; the natural support of states
// built from a finite set of irreducible subspaces.
struct SectorBasis {
    int max_total;
    std::vector<std::pair<int, int>> states;  // (n1, n2), ordered by N then n1

    explicit SectorBasis(int max_total_) : max_total(max_total_) {
        if (max_total < 0) throw std::domain_error("SectorBasis: max_total must be non-negative");
        for (int total = 0; total <= max_total; ++total) {
            for (int n1 = 0; n1 <= total; ++n1) states.emplace_back(n1, total - n1);
        }
    }

    int dim() const { return int(states.size()); }

    int index(int n1, int n2) const {
        const int total = n1 + n2;
        if (n1 < 0 || n2 < 0 || total > max_total) {
            throw std::domain_error("SectorBasis: occupations outside sector");
        }
        return total * (total + 1) / 2 + n1;
    }
};

} // namespace su2bath
