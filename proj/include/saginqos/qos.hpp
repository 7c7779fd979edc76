// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "saginqos/fbc.hpp"
#include "saginqos/interference.hpp"
#include "saginqos/math/kahan.hpp"
#include "saginqos/math/rng.hpp"

namespace saginqos {

struct QosSpec {
    double qos_exponent = 0.01;       // theta, per bit
    double delay_bound = 100.0;       // D_th, channel uses
    double nonempty_prob = 1.0;       // delta
    double overflow_threshold = 0.0;  // Q_th, reporting only

    void validate() const {
        if (!(qos_exponent > 0.0)) throw std::invalid_argument("qos: theta must be > 0");
        if (!(delay_bound > 0.0)) throw std::invalid_argument("qos: delay bound must be > 0");
        if (!(nonempty_prob > 0.0 && nonempty_prob <= 1.0)) {
            throw std::invalid_argument("qos: nonempty probability outside (0,1]");
        }
    }
};

enum class EcMethod { exact_mc, exact_deterministic, asymptotic_series, asymptotic_quadrature };

inline const char* to_string(EcMethod m) {
    switch (m) {
        case EcMethod::exact_mc: return "exact-mc";
        case EcMethod::exact_deterministic: return "exact-deterministic";
        case EcMethod::asymptotic_series: return "asymptotic-series";
        case EcMethod::asymptotic_quadrature: return "asymptotic-quadrature";
    }
    return "unknown";
}

// Effective capacity value in bits per block of n channel uses.
struct EffectiveCapacityResult {
    double value = 0.0;
    double theta_tilde = 0.0;  // theta n / ln 2
    EcMethod method = EcMethod::exact_deterministic;
};

inline double theta_tilde(double theta, const FbcSpec& spec) {
    return theta * spec.blocklength / std::log(2.0);
}

namespace detail {

inline EffectiveCapacityResult ec_from_expectation(double theta, const FbcSpec& spec,
                                                   double epsilon, double expectation,
                                                   EcMethod method) {
    const double arg = epsilon + (1.0 - epsilon) * expectation;
    const double value = -std::log(arg) / theta;
    return {std::max(0.0, value), theta_tilde(theta, spec), method};
}

}  // namespace detail

// -(1/theta) ln{eps + (1-eps) E[exp(-theta n R)]} over a sampled rate law.
inline EffectiveCapacityResult effective_capacity(double theta, const FbcSpec& spec,
                                                  const std::function<double(RandomStream&)>& rate_sampler,
                                                  double epsilon, std::size_t draws,
                                                  std::uint64_t seed) {
    if (!(theta > 0.0)) throw std::invalid_argument("effective_capacity: theta must be > 0");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon outside [0,1]");
    if (draws == 0) throw std::invalid_argument("effective_capacity: draws must be >= 1");
    spec.validate();
    RandomStream rng(seed);
    CompensatedSum acc;
    const double tn = theta * spec.blocklength;
    for (std::size_t i = 0; i < draws; ++i) {
        const double rate = rate_sampler(rng);
        if (rate < 0.0) throw std::domain_error("effective_capacity: sampled rate < 0");
        acc.add(std::exp(-tn * rate));
    }
    return detail::ec_from_expectation(theta, spec, epsilon, acc.value() / draws,
                                       EcMethod::exact_mc);
}

inline EffectiveCapacityResult effective_capacity_deterministic(double theta, const FbcSpec& spec,
                                                                double rate, double epsilon) {
    if (!(theta > 0.0)) throw std::invalid_argument("effective_capacity: theta must be > 0");
    if (rate < 0.0) throw std::invalid_argument("effective_capacity: rate must be >= 0");
    spec.validate();
    return detail::ec_from_expectation(theta, spec, epsilon,
                                       std::exp(-theta * spec.blocklength * rate),
                                       EcMethod::exact_deterministic);
}

// Satellite high-SNR epsilon-effective capacity: the outage-capacity rate
// log2(1 + eps D / (alpha I)) averaged over the Gamma surrogate.
inline EffectiveCapacityResult effective_capacity_satellite_asymptotic(
    double theta, const FbcSpec& spec, const ShadowedRicianParams& fading,
    const GammaInterferenceModel& gm, double signal_coeff_w, double epsilon, double tol = 1e-9) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon outside (0,1)");
    spec.validate();
    fading.validate();
    const double tt = theta_tilde(theta, spec);
    const double c = epsilon * signal_coeff_w / fading.alpha();
    auto g = [&](double y) { return std::pow(1.0 + c / y, -tt); };
    const double expectation = gamma_surrogate_expectation(gm, g, tol);
    auto r = detail::ec_from_expectation(theta, spec, epsilon, expectation,
                                         EcMethod::asymptotic_quadrature);
    return r;
}

// Direct quadrature of the UAV epsilon-EC expectation
// E_I[{1 + K/(I+sigma^2)}^{-theta_tilde}] with K = -D ln(1-eps^{1/m})/eta_m.
inline EffectiveCapacityResult effective_capacity_uav_quadrature(
    double theta, const FbcSpec& spec, double signal_coeff_w, double noise_w, double epsilon,
    const NakagamiParams& fading, const GammaInterferenceModel& gm, double tol = 1e-9) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon outside (0,1)");
    spec.validate();
    fading.validate();
    const double tt = theta_tilde(theta, spec);
    const double kfac = -signal_coeff_w * std::log(1.0 - std::pow(epsilon, 1.0 / fading.m)) /
                        eta_alzer(fading.m);
    auto g = [&](double y) { return std::pow(1.0 + kfac / (y + noise_w), -tt); };
    const double expectation = gamma_surrogate_expectation(gm, g, tol);
    return detail::ec_from_expectation(theta, spec, epsilon, expectation,
                                       EcMethod::asymptotic_quadrature);
}

// Binomial-series form over interference moments E[(I/sigma^2)^l]. The
// series is the exact finite binomial identity when theta_tilde is a
// positive integer; otherwise it converges only when the interference stays
// below the noise floor, so detected divergence reports failure for the
// caller to fall back on the quadrature path.
struct UavEcSeriesOutcome {
    EffectiveCapacityResult result;
    bool series_converged = true;
    int terms_used = 0;
};

inline UavEcSeriesOutcome effective_capacity_uav_series(double theta, const FbcSpec& spec,
                                                        double signal_coeff_w, double noise_w,
                                                        double epsilon,
                                                        const NakagamiParams& fading,
                                                        const std::vector<double>& raw_moments,
                                                        int series_cap = 32) {
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon outside (0,1)");
    if (!(noise_w > 0.0)) throw std::invalid_argument("noise power must be > 0");
    spec.validate();
    fading.validate();
    const double tt = theta_tilde(theta, spec);
    const bool integer_tt = std::abs(tt - std::round(tt)) < 1e-12 && tt >= 1.0;
    const int terminal = integer_tt ? static_cast<int>(std::round(tt)) : series_cap;
    const int lmax = std::min<int>(terminal, series_cap);

    double sum = 1.0;  // l = 0 term
    double prev_mag = 1.0;
    bool diverging = false;
    int used = 0;
    for (int l = 1; l <= lmax; ++l) {
        if (static_cast<std::size_t>(l) > raw_moments.size()) {
            throw std::invalid_argument("effective_capacity_uav_series: not enough moments");
        }
        const double term =
            binomial_real(tt, l) * raw_moments[l - 1] / std::pow(noise_w, l);
        sum += term;
        used = l;
        const double mag = std::abs(term);
        if (!integer_tt && l >= 2 && mag >= prev_mag) {
            diverging = true;
            break;
        }
        prev_mag = mag;
    }
    UavEcSeriesOutcome out;
    out.terms_used = used;
    if (diverging || (!integer_tt && used == series_cap && prev_mag > 1e-12 * std::abs(sum))) {
        out.series_converged = false;
        out.result = {0.0, tt, EcMethod::asymptotic_series};
        return out;
    }
    const double kfac = -signal_coeff_w * std::log(1.0 - std::pow(epsilon, 1.0 / fading.m)) /
                        eta_alzer(fading.m);
    const double expectation = std::pow(noise_w / kfac, tt) * sum;
    out.result =
        detail::ec_from_expectation(theta, spec, epsilon, expectation, EcMethod::asymptotic_series);
    return out;
}

// Environment-driven UAV epsilon-EC: binomial series over the exact Campbell
// moments, with the documented fallback to direct quadrature of the exact
// expectation over the fitted Gamma surrogate when the series has no
// convergence radius.
inline EffectiveCapacityResult effective_capacity_uav(double theta, const FbcSpec& spec,
                                                      double signal_coeff_w, double noise_w,
                                                      double epsilon,
                                                      const UavInterferenceModel& env,
                                                      int series_cap = 16,
                                                      bool* used_fallback = nullptr) {
    if (env.tier.density == 0.0) {
        // no interference: the exact expectation needs no averaging
        const double tt = theta_tilde(theta, spec);
        const double kfac = -signal_coeff_w *
                            std::log(1.0 - std::pow(epsilon, 1.0 / env.fading.m)) /
                            eta_alzer(env.fading.m);
        if (used_fallback) *used_fallback = false;
        return detail::ec_from_expectation(theta, spec, epsilon,
                                           std::pow(1.0 + kfac / noise_w, -tt),
                                           EcMethod::asymptotic_quadrature);
    }
    const auto moments = interference_raw_moments(env, series_cap);
    const auto series = effective_capacity_uav_series(theta, spec, signal_coeff_w, noise_w,
                                                      epsilon, env.fading, moments, series_cap);
    if (series.series_converged) {
        if (used_fallback) *used_fallback = false;
        return series.result;
    }
    if (used_fallback) *used_fallback = true;
    const auto gm = gamma_fit(interference_moments(env));
    return effective_capacity_uav_quadrature(theta, spec, signal_coeff_w, noise_w, epsilon,
                                             env.fading, gm);
}

// p_dv = delta exp(-theta R* D_th), clamped to a probability.
inline double delay_violation_probability(const QosSpec& qos, const FbcSpec& spec) {
    qos.validate();
    spec.validate();
    const double p =
        qos.nonempty_prob * std::exp(-qos.qos_exponent * spec.rate * qos.delay_bound);
    return std::min(1.0, p);
}

}  // namespace saginqos
