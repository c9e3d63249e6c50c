// bath.hpp — thermal bath parameters: Bose-Einstein occupancies, decay
// constant, and principal-value frequency renormalizations

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace su2bath {

/// Mean occupation of a bosonic bath mode, 1/(e^{omega*beta} - 1).
/// beta = +inf denotes zero temperature and yields 0.
inline double occupancy(double omega, double beta) {
    if (omega <= 0.0) {
        throw std::domain_error("occupancy: frequency must be positive (infrared divergence at omega <= 0)");
    }
    if (std::isinf(beta)) return 0.0;
    if (beta <= 0.0) {
        throw std::domain_error("occupancy: inverse temperature must be positive or +inf");
    }
    return 1.0 / std::expm1(omega * beta);
}

/// Inverse temperature that reproduces a given occupancy at frequency omega.
inline double beta_for_occupancy(double nbar, double omega) {
    if (nbar < 0.0) throw std::domain_error("beta_for_occupancy: occupancy must be non-negative");
    if (omega <= 0.0) throw std::domain_error("beta_for_occupancy: frequency must be positive");
    if (nbar == 0.0) return std::numeric_limits<double>::infinity();
    return std::log1p(1.0 / nbar) / omega;
}

// Physical constants of the two-oscillator model. The reduced dynamics
// depends on the bath only through gamma, nbar0 and the two shifts, so all
// of them may be set directly without choosing a microscopic form factor.
struct ModelParams {
    double omega1 = 2.0;
    double omega2 = 1.0;
    double beta = std::numeric_limits<double>::infinity();
    double gamma = 1.0;
    double delta_omega1 = 0.0;
    double delta_omega2 = 0.0;

    double omega0() const { return omega1 - omega2; }
    double omega0_prime() const { return omega1 + omega2; }
    double delta_omega0() const { return delta_omega1 - delta_omega2; }
    double delta_omega0_prime() const { return delta_omega1 + delta_omega2; }
    double nbar0() const { return occupancy(omega0(), beta); }

    void check() const {
        if (!(omega2 > 0.0) || !(omega1 > omega2)) {
            throw std::domain_error("ModelParams: require omega1 > omega2 > 0");
        }
        if (!(gamma > 0.0)) throw std::domain_error("ModelParams: require gamma > 0");
        if (!(beta > 0.0)) throw std::domain_error("ModelParams: require beta > 0 (or +inf)");
    }

    static ModelParams with_beta(double omega1, double omega2, double beta, double gamma) {
        ModelParams p{omega1, omega2, beta, gamma, 0.0, 0.0};
        p.check();
        return p;
    }

    /// Same, with the temperature fixed through the resonant occupancy
    /// nbar0 = 1/(e^{omega0*beta} - 1).
    static ModelParams with_occupancy(double omega1, double omega2, double nbar0, double gamma) {
        ModelParams p{omega1, omega2, 1.0, gamma, 0.0, 0.0};
        p.beta = beta_for_occupancy(nbar0, omega1 - omega2);
        p.check();
        return p;
    }
};

// Bath coupling form factor |v(omega)|^2. The exponential kind is infrared
// flat and only valid for vacuum (zero temperature) integrals; the ohmic
// kind vanishes linearly at omega = 0 and is safe at finite temperature.
struct FormFactor {
    enum class Kind { exponential_cutoff, ohmic_exponential };

    Kind kind = Kind::ohmic_exponential;
    double coupling = 0.1;   // dimensionless lambda
    double cutoff = 5.0;     // omega_c

    double spectral_density(double omega) const {
        switch (kind) {
            case Kind::exponential_cutoff: return std::exp(-omega / cutoff);
            case Kind::ohmic_exponential: return (omega / cutoff) * std::exp(-omega / cutoff);
        }
        return 0.0;
    }

    void check() const {
        if (!(cutoff > 0.0)) throw std::domain_error("FormFactor: cutoff must be positive");
    }
};

/// Golden-rule decay constant gamma = 2*pi*lambda^2*|v(omega0)|^2.
inline double decay_rate(const FormFactor& ff, double omega0) {
    if (omega0 <= 0.0) throw std::domain_error("decay_rate: resonance frequency must be positive");
    ff.check();
    return 2.0 * M_PI * ff.coupling * ff.coupling * ff.spectral_density(omega0);
}

/// Cauchy principal value of integral_0^inf g(omega)/(omega - pole) d omega.
/// The singularity is removed by folding a symmetric window [pole - h, pole + h]
/// into integral_0^h [g(pole+u) - g(pole-u)]/u du; the remainder is integrated
/// adaptively. Requires 0 < h < pole.
template <typename F>
double principal_value_integral(F&& g, double pole, double window_halfwidth) {
    if (!(pole > 0.0)) throw std::domain_error("principal_value_integral: pole must be positive");
    if (!(window_halfwidth > 0.0) || window_halfwidth >= pole) {
        throw std::domain_error("principal_value_integral: window must satisfy 0 < h < pole");
    }
    using quad = boost::math::quadrature::gauss_kronrod<double, 15>;
    const double h = window_halfwidth;
    const double inf = std::numeric_limits<double>::infinity();
    const double folded = quad::integrate(
        [&](double u) { return (g(pole + u) - g(pole - u)) / u; }, 0.0, h, 15, 1e-12);
    const double left = quad::integrate(
        [&](double w) { return g(w) / (w - pole); }, 0.0, pole - h, 15, 1e-12);
    const double right = quad::integrate(
        [&](double w) { return g(w) / (w - pole); }, pole + h, inf, 15, 1e-12);
    return folded + left + right;
}

/// Frequency renormalizations of the two oscillators,
///   delta_omega1 =  lambda^2 P int |v|^2 (nbar(omega)+1)/(omega - omega0),
///   delta_omega2 = -lambda^2 P int |v|^2  nbar(omega)   /(omega - omega0).
/// The thermal parts of the two shifts are exact negatives of each other;
/// at zero temperature delta_omega2 vanishes identically.
inline std::pair<double, double> renorm_shifts(const FormFactor& ff, const ModelParams& params) {
    ff.check();
    params.check();
    const double w0 = params.omega0();
    const double lam2 = ff.coupling * ff.coupling;
    const double window = 0.5 * std::min(w0, ff.cutoff);

    const double vacuum = lam2 * principal_value_integral(
        [&](double w) { return ff.spectral_density(w); }, w0, window);

    if (std::isinf(params.beta)) {
        return {vacuum, 0.0};
    }
    if (ff.kind == FormFactor::Kind::exponential_cutoff) {
        throw std::domain_error(
            "renorm_shifts: thermal shift diverges at omega -> 0 for the exponential-cutoff "
            "form factor; use kind = ohmic_exponential at finite temperature");
    }
    const double thermal = lam2 * principal_value_integral(
        [&](double w) { return ff.spectral_density(w) * occupancy(w, params.beta); }, w0, window);
    return {vacuum + thermal, -thermal};
}

} // namespace su2bath
