#include <catch2/catch_amalgamated.hpp>

#include "su2bath/hilbert.hpp"

#include "support/helpers.hpp"

using namespace su2bath;
using Catch::Matchers::WithinAbs;

TEST_CASE("ket labels round-trip occupations and enforce parity and range") {
    for (int n1 = 0; n1 <= 12; ++n1) {
        for (int n2 = 0; n2 <= 12; ++n2) {
            const KetLabel s = KetLabel::from_occupations(n1, n2);
            REQUIRE(s.total == n1 + n2);
            REQUIRE(s.diff == n1 - n2);
            REQUIRE(s.n1() == n1);
            REQUIRE(s.n2() == n2);
        }
    }
    REQUIRE_THROWS_AS(KetLabel(2, 1), std::domain_error);   // parity
    REQUIRE_THROWS_AS(KetLabel(2, 4), std::domain_error);   // range
    REQUIRE_THROWS_AS(KetLabel(-1, 1), std::domain_error);
    REQUIRE_THROWS_AS(KetLabel::from_occupations(-1, 0), std::domain_error);
}

TEST_CASE("each subspace holds exactly N+1 substates") {
    for (int total = 0; total <= 12; ++total) {
        int count = 0;
        for (int r = -total; r <= total; ++r) {
            try {
                KetLabel s(total, r);
                ++count;
            } catch (const std::domain_error&) {
            }
        }
        REQUIRE(count == total + 1);
    }
}

TEST_CASE("ladder coefficients reproduce the worked values") {
    REQUIRE(ladder_plus_coeff(1, 1) == 0.0);
    REQUIRE_THAT(ladder_plus_coeff(2, 0), WithinAbs(std::sqrt(2.0), 1e-15));
    REQUIRE_THAT(ladder_plus_coeff(2, -2), WithinAbs(std::sqrt(2.0), 1e-15));
    REQUIRE(ladder_minus_coeff(3, -3) == 0.0);
    REQUIRE_THAT(ladder_minus_coeff(2, 2), WithinAbs(std::sqrt(2.0), 1e-15));
    REQUIRE_THAT(ladder_minus_coeff(1, 1), WithinAbs(1.0, 1e-15));
    REQUIRE_THROWS_AS(ladder_plus_coeff(2, 1), std::domain_error);
    REQUIRE_THROWS_AS(ladder_minus_coeff(1, 3), std::domain_error);
}

TEST_CASE("ladder coefficients agree with raw Fock matrix elements up to N = 8") {
    const testsupport::RawFock fock(8);
    const Eigen::MatrixXd raising = fock.raising();
    const Eigen::MatrixXd lowering = fock.lowering();
    for (int total = 0; total <= 8; ++total) {
        for (int r = -total; r <= total; r += 2) {
            const KetLabel s(total, r);
            if (r + 2 <= total) {
                const double element =
                    raising(fock.index(s.n1() + 1, s.n2() - 1), fock.index(s.n1(), s.n2()));
                REQUIRE_THAT(ladder_plus_coeff(s), WithinAbs(element, 1e-12));
            } else {
                REQUIRE(ladder_plus_coeff(s) == 0.0);
            }
            if (r - 2 >= -total) {
                const double element =
                    lowering(fock.index(s.n1() - 1, s.n2() + 1), fock.index(s.n1(), s.n2()));
                REQUIRE_THAT(ladder_minus_coeff(s), WithinAbs(element, 1e-12));
            } else {
                REQUIRE(ladder_minus_coeff(s) == 0.0);
            }
        }
    }
}

TEST_CASE("raising and lowering coefficients are adjoint partners") {
    for (int total = 0; total <= 12; ++total) {
        for (int r = -total; r + 2 <= total; r += 2) {
            REQUIRE(ladder_minus_coeff(total, r + 2) == ladder_plus_coeff(total, r));
        }
    }
}

TEST_CASE("level energies") {
    const ModelParams params = ModelParams::with_occupancy(2.0, 1.0, 0.0, 1.0);
    REQUIRE(energy(params, KetLabel(1, 1)) == 2.0);
    REQUIRE(energy(params, KetLabel(2, 0)) == 3.0);
    REQUIRE(energy(params, KetLabel(4, -2)) == 5.0);

    ModelParams odd = params;
    odd.omega1 = 1.7231;
    odd.omega2 = 0.4117;
    for (int n1 = 0; n1 <= 9; ++n1) {
        for (int n2 = 0; n2 <= 9; ++n2) {
            const KetLabel s = KetLabel::from_occupations(n1, n2);
            REQUIRE_THAT(energy(odd, s), WithinAbs(odd.omega1 * n1 + odd.omega2 * n2, 1e-12));
        }
    }
}

TEST_CASE("Casimir and L0 eigenvalues") {
    REQUIRE(casimir_eigenvalue(0) == 0.0);
    REQUIRE(casimir_eigenvalue(2) == 2.0);
    REQUIRE(l0_eigenvalue(-4) == -2.0);

    // cross-check on |2,0>: L+L- + L0(L0 - 1) applied in the raw Fock basis
    const testsupport::RawFock fock(4);
    Eigen::MatrixXd l0 = Eigen::MatrixXd::Zero(fock.dim(), fock.dim());
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n2 <= 4; ++n2)
            l0(fock.index(n1, n2), fock.index(n1, n2)) = 0.5 * (n1 - n2);
    const Eigen::MatrixXd casimir =
        fock.raising() * fock.lowering() +
        l0 * (l0 - Eigen::MatrixXd::Identity(fock.dim(), fock.dim()));
    REQUIRE_THAT(casimir(fock.index(2, 0), fock.index(2, 0)),
                 WithinAbs(casimir_eigenvalue(2), 1e-12));
}

TEST_CASE("coherent state coefficients") {
    SECTION("theta = 0 concentrates on |0, N>") {
        const Eigen::VectorXcd c = su2_coherent_coeffs(5, 0.0, 1.3);
        REQUIRE_THAT(std::abs(c[0]), WithinAbs(1.0, 1e-15));
        REQUIRE_THAT(c.tail(5).norm(), WithinAbs(0.0, 1e-15));
    }
    SECTION("equator of the N = 1 sphere") {
        const Eigen::VectorXcd c = su2_coherent_coeffs(1, M_PI / 2, 0.0);
        REQUIRE_THAT(std::abs(c[0] - 1.0 / std::sqrt(2.0)), WithinAbs(0.0, 1e-14));
        REQUIRE_THAT(std::abs(c[1] - 1.0 / std::sqrt(2.0)), WithinAbs(0.0, 1e-14));
    }
    SECTION("theta = pi maps to the limit state on n1 = N") {
        const Eigen::VectorXcd c = su2_coherent_coeffs(7, M_PI, 0.4);
        REQUIRE_THAT(std::abs(c[7]), WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(c.head(7).norm(), WithinAbs(0.0, 1e-12));
    }
    SECTION("unit norm across the sphere, including large N") {
        for (int total : {0, 1, 5, 40, 100}) {
            for (double theta : {0.0, 0.3, M_PI / 2, 2.8, M_PI}) {
                for (double phi : {0.0, 1.3, -2.0}) {
                    REQUIRE_THAT(su2_coherent_coeffs(total, theta, phi).norm(),
                                 WithinAbs(1.0, 1e-12));
                }
            }
        }
    }
}

TEST_CASE("mode transform") {
    SECTION("identity at theta = 0") {
        REQUIRE((mode_transform(0.0, 0.0).matrix - Eigen::Matrix2cd::Identity()).norm() < 1e-15);
    }
    SECTION("balanced splitter at theta = pi/2") {
        Eigen::Matrix2cd expected;
        expected << 1, 1, -1, 1;
        expected /= std::sqrt(2.0);
        REQUIRE((mode_transform(M_PI / 2, 0.0).matrix - expected).norm() < 1e-14);
    }
    SECTION("unitary for arbitrary angles") {
        for (double theta : {0.2, 1.1, 2.9}) {
            for (double phi : {-1.0, 0.7, 3.0}) {
                const Eigen::Matrix2cd u = mode_transform(theta, phi).matrix;
                REQUIRE((u * u.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <
                        1e-12);
                REQUIRE_THAT(std::abs(u.determinant()), WithinAbs(1.0, 1e-12));
            }
        }
    }
    SECTION("induced Fock map preserves the total occupation") {
        // b_i = sum_j (U^dag)_{ij} a_j keeps b1^dag b1 + b2^dag b2 = n1 + n2
        const testsupport::RawFock fock(4);
        const Eigen::Matrix2cd u = mode_transform(1.1, 0.7).matrix;
        const Eigen::MatrixXcd a1 = fock.a1.cast<std::complex<double>>();
        const Eigen::MatrixXcd a2 = fock.a2.cast<std::complex<double>>();
        const Eigen::MatrixXcd b1 = std::conj(u(0, 0)) * a1 + std::conj(u(1, 0)) * a2;
        const Eigen::MatrixXcd b2 = std::conj(u(0, 1)) * a1 + std::conj(u(1, 1)) * a2;
        const Eigen::MatrixXcd number = b1.adjoint() * b1 + b2.adjoint() * b2;
        const Eigen::MatrixXcd direct =
            (fock.a1.transpose() * fock.a1 + fock.a2.transpose() * fock.a2)
                .cast<std::complex<double>>();
        REQUIRE((number - direct).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("binomial coefficients stay accurate through the log-gamma branch") {
    REQUIRE(binomial(4, 2) == 6.0);
    REQUIRE(binomial(30, 15) == 155117520.0);
    REQUIRE_THAT(binomial(40, 20) / 137846528820.0, WithinAbs(1.0, 1e-12));
    REQUIRE(binomial(5, 7) == 0.0);
}
