// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

#include "saginqos/geometry.hpp"
#include "saginqos/math/quadrature.hpp"
#include "saginqos/math/rng.hpp"
#include "saginqos/math/special.hpp"

namespace saginqos {

inline constexpr double kSpeedOfLight = 299792458.0;

// Shadowed-Rician power-gain law for the satellite link. The paper's
// beta_S doubles as rate of this density and as the satellite pathloss
// exponent; here the rate is fade_rate and the exponent lives in the
// LinkBudget.
struct ShadowedRicianParams {
    double omega_s = 1.0;  // mean LOS power
    double b_s = 0.25;     // half multipath power
    int gamma_s = 3;       // Nakagami shadowing order

    ShadowedRicianParams() = default;
    ShadowedRicianParams(double omega, double b, int gamma)
        : omega_s(omega), b_s(b), gamma_s(gamma) {
        validate();
    }

    void validate() const {
        if (!(omega_s > 0.0 && b_s > 0.0 && gamma_s >= 1)) {
            throw std::invalid_argument("shadowed-Rician parameters out of range");
        }
    }

    double fade_rate() const { return 1.0 / (2.0 * b_s); }
    double alpha() const {
        const double t = 2.0 * b_s * gamma_s / (2.0 * b_s * gamma_s + omega_s);
        return fade_rate() * std::pow(t, gamma_s);
    }
    double delta() const {
        return omega_s / (2.0 * b_s * (2.0 * b_s * gamma_s + omega_s));
    }
    double mean_power() const { return omega_s + 2.0 * b_s; }
};

struct NakagamiParams {
    int m = 1;

    void validate() const {
        if (m < 1) throw std::invalid_argument("Nakagami m must be a positive integer");
    }
};

// Per-tier deterministic link description. Dual-slope entries (NLOS
// exponent, excess losses) apply to the aerial tier only; single-slope
// links leave pathloss_exponent_nlos at zero. near_field_m clamps the
// power-law distance so that aggregate-interference moments stay finite
// on a disk that contains the origin.
struct LinkBudget {
    double tx_power_w = 1.0;
    double antenna_gain = 1.0;
    double bias = 1.0;
    double carrier_hz = 2.4e9;
    double noise_power_w = 1e-13;
    double pathloss_exponent = 3.5;       // beta (LOS slope on dual-slope links)
    double pathloss_exponent_nlos = 0.0;  // 0 = single slope
    double excess_loss_los = 1.0;
    double excess_loss_nlos = 1.0;
    double near_field_m = 100.0;

    bool dual_slope() const { return pathloss_exponent_nlos > 0.0; }

    void validate() const {
        if (!(tx_power_w > 0.0 && antenna_gain > 0.0 && bias > 0.0 && carrier_hz > 0.0 &&
              noise_power_w > 0.0 && excess_loss_los > 0.0 && excess_loss_nlos > 0.0 &&
              near_field_m >= 0.0)) {
            throw std::invalid_argument("link budget fields must be positive");
        }
        auto ok = [](double beta) { return beta >= 2.0 && beta <= 6.0; };
        if (!ok(pathloss_exponent)) throw std::invalid_argument("pathloss exponent outside [2,6]");
        if (dual_slope() && !ok(pathloss_exponent_nlos)) {
            throw std::invalid_argument("NLOS pathloss exponent outside [2,6]");
        }
    }

    // (c / 4 pi f)^2
    double freq_factor() const {
        const double t = kSpeedOfLight / (4.0 * M_PI * carrier_hz);
        return t * t;
    }
};

struct CapacityDispersion {
    double capacity_bits = 0.0;
    double dispersion = 0.0;
};

// f(x) = alpha e^{-fade_rate x} 1F1(gamma_s, 1, delta x), evaluated with the
// exponents combined so large x cannot overflow the Kummer factor.
inline double shadowed_rician_pdf(double x, const ShadowedRicianParams& p) {
    if (x < 0.0) throw std::invalid_argument("shadowed_rician_pdf: x must be >= 0");
    p.validate();
    const double delta = p.delta();
    // 1F1(a,1,z) = e^z sum_{l<a} C(a-1,l) z^l / l!
    double sum = 0.0;
    double term = 1.0;
    const double z = delta * x;
    for (int l = 0; l < p.gamma_s; ++l) {
        sum += term;
        term *= z * static_cast<double>(p.gamma_s - 1 - l) /
                (static_cast<double>(l + 1) * (l + 1));
    }
    return p.alpha() * std::exp(-(p.fade_rate() - delta) * x) * sum;
}

// CDF series over regularized incomplete gammas, truncated when the
// geometric tail bound drops under tol. Terms are positive and the ratio
// tends to delta/fade_rate < 1.
inline double shadowed_rician_cdf(double x, const ShadowedRicianParams& p, double tol = 1e-10) {
    if (x < 0.0) throw std::invalid_argument("shadowed_rician_cdf: x must be >= 0");
    if (!(tol > 0.0 && tol < 1e-3)) throw std::invalid_argument("shadowed_rician_cdf: bad tol");
    p.validate();
    if (x == 0.0) return 0.0;
    const double beta = p.fade_rate();
    const double delta = p.delta();
    const double w = beta * x;
    const int cap = 200;
    double coeff = p.alpha() / beta;  // alpha (Gamma_s)_i (delta/beta)^i / (i! beta), i = 0
    double sum = 0.0;
    for (int i = 0; i < cap; ++i) {
        const double term = coeff * gamma_p(i + 1.0, w);
        sum += term;
        const double ratio = (p.gamma_s + i) * delta / ((i + 1.0) * beta);
        if (ratio < 1.0 && i > 2) {
            // remaining terms are below coeff*ratio/(1-ratio) since P(.) <= 1
            const double tail = coeff * ratio / (1.0 - ratio);
            if (tail <= tol * sum) return std::min(sum, 1.0);
        }
        coeff *= ratio;
    }
    throw std::runtime_error("shadowed_rician_cdf: series cap exceeded");
}

// Free-space power law (c/4 pi f)^2 d^-beta with the near-field clamp.
inline double pathloss_free_space(const LinkBudget& budget, double distance_m) {
    if (!(distance_m > 0.0)) throw std::invalid_argument("pathloss: distance must be > 0");
    const double d = std::max(distance_m, budget.near_field_m);
    return budget.freq_factor() * std::pow(d, -budget.pathloss_exponent);
}

inline double pathloss_with_exponent(const LinkBudget& budget, double distance_m, double beta) {
    if (!(distance_m > 0.0)) throw std::invalid_argument("pathloss: distance must be > 0");
    const double d = std::max(distance_m, budget.near_field_m);
    return budget.freq_factor() * std::pow(d, -beta);
}

// LOS-probability-weighted total pathloss of an air-to-ground link.
inline double pathloss_uav(const LinkBudget& budget, double distance_m, double altitude_m,
                           const LosModelParams& los) {
    if (!budget.dual_slope()) throw std::invalid_argument("pathloss_uav: budget is single-slope");
    const double p = los_probability(distance_m, altitude_m, los);
    const double pl_los =
        budget.excess_loss_los * pathloss_with_exponent(budget, distance_m, budget.pathloss_exponent);
    const double pl_nlos = budget.excess_loss_nlos *
                           pathloss_with_exponent(budget, distance_m, budget.pathloss_exponent_nlos);
    return p * pl_los + (1.0 - p) * pl_nlos;
}

// gamma = bias gain P fading PL / (I + sigma^2)
inline double sinr(const LinkBudget& budget, double fading_gain, double pathloss,
                   double interference_w) {
    if (fading_gain < 0.0 || pathloss < 0.0 || interference_w < 0.0) {
        throw std::invalid_argument("sinr: inputs must be >= 0");
    }
    return budget.bias * budget.antenna_gain * budget.tx_power_w * fading_gain * pathloss /
           (interference_w + budget.noise_power_w);
}

inline CapacityDispersion capacity_dispersion(double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("capacity_dispersion: gamma must be >= 0");
    const double inv = 1.0 / (1.0 + gamma);
    return {std::log2(1.0 + gamma), 1.0 - inv * inv};
}

// Exact shadowed-Rician power-gain draw: Gamma-distributed LOS power plus
// circular Gaussian multipath.
inline double sample_shadowed_rician(const ShadowedRicianParams& p, RandomStream& rng) {
    const double w = rng.gamma(static_cast<double>(p.gamma_s), p.omega_s / p.gamma_s);
    const double a = std::sqrt(w);
    const double sig = std::sqrt(p.b_s);
    const double re = a + sig * rng.normal();
    const double im = sig * rng.normal();
    return re * re + im * im;
}

}  // namespace saginqos
