// helpers.hpp — test-side oracles kept independent of the library paths
// they check: raw two-mode ladder matrices and a tiny deterministic RNG

#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

namespace testsupport {

// Raw two-mode truncation with index n1*(nmax+1)+n2, built from scratch.
struct RawFock {
    int nmax;
    Eigen::MatrixXd a1;
    Eigen::MatrixXd a2;

    explicit RawFock(int nmax_) : nmax(nmax_) {
        const int d = (nmax + 1) * (nmax + 1);
        a1 = Eigen::MatrixXd::Zero(d, d);
        a2 = Eigen::MatrixXd::Zero(d, d);
        for (int n1 = 0; n1 <= nmax; ++n1) {
            for (int n2 = 0; n2 <= nmax; ++n2) {
                if (n1 > 0) a1(index(n1 - 1, n2), index(n1, n2)) = std::sqrt(double(n1));
                if (n2 > 0) a2(index(n1, n2 - 1), index(n1, n2)) = std::sqrt(double(n2));
            }
        }
    }

    int index(int n1, int n2) const { return n1 * (nmax + 1) + n2; }
    int dim() const { return (nmax + 1) * (nmax + 1); }

    Eigen::MatrixXd raising() const { return a1.transpose() * a2; }    // a1^dag a2
    Eigen::MatrixXd lowering() const { return a1 * a2.transpose(); }   // a1 a2^dag
};

inline std::mt19937& rng() {
    static std::mt19937 gen(20240811u);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

} // namespace testsupport
