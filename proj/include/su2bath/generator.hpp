// generator.hpp — action of the Lindblad generator K = K0 + Kd on the
// operator basis f^(N,Nt)_{r;rt}, block by block, plus the dense
// truncated-Fock realization used as a brute-force oracle

#pragma once

#include <array>
#include <compare>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "su2bath/bath.hpp"
#include "su2bath/fock.hpp"
#include "su2bath/hilbert.hpp"

namespace su2bath {

// Invariant subspace of the generator: basis elements |r>_N <r-nu|_Nt.
// Both totals and the coherence index nu = r - rt are conserved, so the
// dynamics never couples different blocks.
struct BlockLabel {
    int ket_total;  // N
    int bra_total;  // Nt
    int coherence;  // nu

    auto operator<=>(const BlockLabel&) const = default;

    bool parity_ok() const { return (ket_total - bra_total - coherence) % 2 == 0; }

    int r_max() const { return std::min(ket_total, coherence + bra_total); }
    int r_min() const { return std::max(-ket_total, coherence - bra_total); }

    int dim() const {
        if (ket_total < 0 || bra_total < 0 || !parity_ok()) return 0;
        const int span = r_max() - r_min();
        return span >= 0 ? span / 2 + 1 : 0;
    }

    /// r value at position i, ordered by descending r (i = 0 is r_max).
    int r_at(int i) const { return r_max() - 2 * i; }

    /// Position of r in the block vector.
    int index_of(int r) const {
        if (!contains(r)) throw std::domain_error("BlockLabel: r outside admissible range");
        return (r_max() - r) / 2;
    }

    bool contains(int r) const {
        return dim() > 0 && r <= r_max() && r >= r_min() && (r_max() - r) % 2 == 0;
    }

    bool diagonal() const { return ket_total == bra_total && coherence == 0; }

    /// Label of the Hermitian-conjugate block, carrying conj coefficients.
    BlockLabel adjoint() const { return {bra_total, ket_total, -coherence}; }
};

// One tridiagonal column of the diagonal-block generator,
//   K f^(N)_r = up*f^(N)_{r+2} + stay*f^(N)_r + down*f^(N)_{r-2}.
struct LevelCoeffs {
    double up;    // u_r
    double stay;  // v_r
    double down;  // w_r
};

/// Rate coefficients of Eq-of-motion columns in a diagonal subspace:
///   u_r = -(gamma/4) nbar [(N+1)^2 - (r+1)^2]
///   v_r =  (gamma/4)(2 nbar + 1)[(N+1)^2 - r^2 - 1] + (gamma/2) r
///   w_r = -(gamma/4)(nbar + 1)[(N+1)^2 - (r-1)^2]
/// with u_N = 0 and w_{-N} = 0 at the subspace edges.
inline LevelCoeffs uvw_coeffs(const ModelParams& params, int total, int diff) {
    const KetLabel s(total, diff);
    const double g = params.gamma;
    const double nb = params.nbar0();
    const double np1sq = double(total + 1) * double(total + 1);
    const double r = double(s.diff);
    return {
        -0.25 * g * nb * (np1sq - (r + 1.0) * (r + 1.0)),
        0.25 * g * (2.0 * nb + 1.0) * (np1sq - r * r - 1.0) + 0.5 * g * r,
        -0.25 * g * (nb + 1.0) * (np1sq - (r - 1.0) * (r - 1.0)),
    };
}

// Action of the dissipator on one basis element of a block: three
// (target r, coefficient) terms. Coefficients vanish automatically when a
// target would leave the admissible range, through the ladder factors.
struct BlockAction {
    struct Term {
        int target_r;
        std::complex<double> weight;
    };
    Term up;    // -> r + 2
    Term stay;  // -> r
    Term down;  // -> r - 2
};

inline BlockAction dissipator_block_action(const ModelParams& params, const BlockLabel& label,
                                           int r) {
    if (!label.contains(r)) {
        throw std::domain_error("dissipator_block_action: r not admissible in block");
    }
    const KetLabel ket(label.ket_total, r);
    const KetLabel bra(label.bra_total, r - label.coherence);
    const double g = params.gamma;
    const double nb = params.nbar0();

    // cross terms: sqrt of an exact integer product, so the diagonal-block
    // specialization reproduces the uvw rates
    const double up = -g * nb *
        0.25 * std::sqrt(double(ket.total + ket.diff + 2) * double(ket.total - ket.diff) *
                         double(bra.total + bra.diff + 2) * double(bra.total - bra.diff));
    const double down = -g * (nb + 1.0) *
        0.25 * std::sqrt(double(ket.total + ket.diff) * double(ket.total - ket.diff + 2) *
                         double(bra.total + bra.diff) * double(bra.total - bra.diff + 2));
    const double stay = 0.5 * g * (nb * (ladder_plus_sq(ket) + ladder_plus_sq(bra)) +
                                   (nb + 1.0) * (ladder_minus_sq(ket) + ladder_minus_sq(bra)));
    return {{r + 2, up}, {r, stay}, {r - 2, down}};
}

/// Phase rate theta of the unitary part on f^(N,Nt)_{r;rt}: the coefficient
/// picks up exp(i theta t) in the interaction picture. Equals the difference
/// of renormalized energies of ket and bra, antisymmetric under their swap,
/// and zero on every probability element (N = Nt, r = rt).
inline double k0_phase(const ModelParams& params, int ket_total, int bra_total, int r, int rt) {
    const KetLabel ket(ket_total, r);
    const KetLabel bra(bra_total, rt);
    const double dN = double(ket.total - bra.total);
    const double dr = double(ket.diff - bra.diff);
    return 0.5 * (params.omega0_prime() - params.delta_omega0_prime()) * dN +
           0.5 * (params.omega0() - params.delta_omega0()) * dr -
           0.25 * params.delta_omega0_prime() *
               (double(ket.total) * ket.total - double(bra.total) * bra.total) +
           0.25 * params.delta_omega0_prime() *
               (double(ket.diff) * ket.diff - double(bra.diff) * bra.diff);
}

// Generator restricted to one block: complex tridiagonal matrix M, ordered
// by descending r, acting as cdot = -M c. Diagonal entries carry i*theta
// plus the dissipative decay; off-diagonals are the cascade couplings.
struct BlockGenerator {
    BlockLabel label;
    Eigen::VectorXcd diag;   // dim
    Eigen::VectorXcd super;  // dim-1, M(i, i+1)
    Eigen::VectorXcd sub;    // dim-1, M(i+1, i)

    int dim() const { return int(diag.size()); }

    Eigen::MatrixXcd dense() const {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
        for (int i = 0; i < dim(); ++i) m(i, i) = diag[i];
        for (int i = 0; i + 1 < dim(); ++i) {
            m(i, i + 1) = super[i];
            m(i + 1, i) = sub[i];
        }
        return m;
    }
};

inline BlockGenerator build_block_generator(const ModelParams& params, const BlockLabel& label) {
    const int dim = label.dim();
    if (dim == 0) throw std::domain_error("build_block_generator: empty block");
    BlockGenerator gen{label, Eigen::VectorXcd::Zero(dim), Eigen::VectorXcd::Zero(std::max(dim - 1, 0)),
                       Eigen::VectorXcd::Zero(std::max(dim - 1, 0))};
    for (int j = 0; j < dim; ++j) {
        const int r = label.r_at(j);
        const BlockAction act = dissipator_block_action(params, label, r);
        gen.diag[j] = act.stay.weight +
                      std::complex<double>(0.0, k0_phase(params, label.ket_total, label.bra_total,
                                                         r, r - label.coherence));
        if (j > 0) gen.super[j - 1] = act.up.weight;
        if (j + 1 < dim) gen.sub[j] = act.down.weight;
    }
    return gen;
}

/// Dissipative part in the interaction picture at time t: identical to the
/// Schrodinger dissipator except the cascade couplings rotate with
/// exp(+-i dw0' nu t). Time independent on every nu = 0 block, and for
/// dw0' = 0 on all blocks.
inline BlockGenerator interaction_picture_generator(const ModelParams& params,
                                                    const BlockLabel& label, double t) {
    const int dim = label.dim();
    if (dim == 0) throw std::domain_error("interaction_picture_generator: empty block");
    const std::complex<double> phase =
        std::polar(1.0, params.delta_omega0_prime() * label.coherence * t);
    BlockGenerator gen{label, Eigen::VectorXcd::Zero(dim), Eigen::VectorXcd::Zero(std::max(dim - 1, 0)),
                       Eigen::VectorXcd::Zero(std::max(dim - 1, 0))};
    for (int j = 0; j < dim; ++j) {
        const BlockAction act = dissipator_block_action(params, label, label.r_at(j));
        gen.diag[j] = act.stay.weight;
        if (j > 0) gen.super[j - 1] = act.up.weight * phase;
        if (j + 1 < dim) gen.sub[j] = act.down.weight * std::conj(phase);
    }
    return gen;
}

enum class GeneratorPart { full, unitary, dissipative };

namespace detail {

// super += scale * (left (x) right^T) so that super * vec(f) = vec(left f right),
// with column-major vectorization.
inline void add_sandwich(Eigen::MatrixXcd& superop, std::complex<double> scale,
                         const Eigen::MatrixXd& left, const Eigen::MatrixXd& right) {
    const int d = int(left.rows());
    for (int j = 0; j < d; ++j) {          // bra column of f
        for (int l = 0; l < d; ++l) {      // bra column of result
            const double rjl = right(j, l);
            if (rjl == 0.0) continue;
            for (int i = 0; i < d; ++i) {  // ket row of f
                for (int k = 0; k < d; ++k) {
                    const double lki = left(k, i);
                    if (lki == 0.0) continue;
                    superop(k + d * l, i + d * j) += scale * lki * rjl;
                }
            }
        }
    }
}

} // namespace detail

/// Brute-force realization of K on the square truncation n1, n2 <= nmax,
/// assembled from raw mode operators. Matrix indices follow column-major
/// vectorization of FockGrid; every block with N, Nt <= nmax is represented
/// exactly since the collective operators conserve both totals.
inline Eigen::MatrixXcd dense_oracle(const ModelParams& params, int nmax,
                                     GeneratorPart part = GeneratorPart::full) {
    if (nmax < 0) throw std::domain_error("dense_oracle: nmax must be non-negative");
    if (nmax > 10) {
        throw std::length_error("dense_oracle: nmax > 10 would need > (11^4)^2 complex entries");
    }
    const FockGrid grid(nmax);
    const int d = grid.dim();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
    Eigen::MatrixXcd superop = Eigen::MatrixXcd::Zero(d * d, d * d);
    const std::complex<double> i1(0.0, 1.0);

    if (part != GeneratorPart::dissipative) {
        const Eigen::MatrixXd h = renormalized_hamiltonian(params, grid);
        detail::add_sandwich(superop, i1, h, id);
        detail::add_sandwich(superop, -i1, id, h);
    }
    if (part != GeneratorPart::unitary) {
        const Eigen::MatrixXd lp = collective_raising(grid);
        const Eigen::MatrixXd lm = collective_lowering(grid);
        const Eigen::MatrixXd lmlp = lm * lp;
        const Eigen::MatrixXd lplm = lp * lm;
        const double up_rate = params.gamma * params.nbar0();
        const double down_rate = params.gamma * (params.nbar0() + 1.0);
        detail::add_sandwich(superop, -up_rate, lp, lm);
        detail::add_sandwich(superop, 0.5 * up_rate, lmlp, id);
        detail::add_sandwich(superop, 0.5 * up_rate, id, lmlp);
        detail::add_sandwich(superop, -down_rate, lm, lp);
        detail::add_sandwich(superop, 0.5 * down_rate, lplm, id);
        detail::add_sandwich(superop, 0.5 * down_rate, id, lplm);
    }
    return superop;
}

/// Column-major vectorized index of the basis element |n1,n2><m1,m2| in the
/// dense oracle.
inline int oracle_index(const FockGrid& grid, int n1, int n2, int m1, int m2) {
    return grid.index(n1, n2) + grid.dim() * grid.index(m1, m2);
}

} // namespace su2bath
