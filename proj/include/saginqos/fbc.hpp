// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "saginqos/channel.hpp"
#include "saginqos/interference.hpp"
#include "saginqos/math/quadrature.hpp"
#include "saginqos/math/special.hpp"

namespace saginqos {

struct FbcSpec {
    int blocklength = 200;      // n, channel uses
    double rate = 0.5;          // R*, bits per channel use
    double target_error = 1e-3; // epsilon

    void validate() const {
        if (blocklength < 1) throw std::invalid_argument("fbc: blocklength must be >= 1");
        if (!(rate > 0.0)) throw std::invalid_argument("fbc: rate must be > 0");
        if (!(target_error > 0.0 && target_error < 1.0)) {
            throw std::invalid_argument("fbc: target error must lie in (0,1)");
        }
    }

    double sinr_threshold() const { return std::exp2(rate) - 1.0; }
};

// Ramp constants of the piecewise-linear Q-function surrogate. Everything
// centers at gamma0 = 2^R - 1; the lower knot is clamped at zero.
struct LinearizationConstants {
    double theta = 0.0;     // per-unit slope factor
    double zeta_low = 0.0;
    double zeta_up = 0.0;
    double gamma0 = 0.0;
};

inline LinearizationConstants linearization_constants(const FbcSpec& spec) {
    spec.validate();
    const double gamma0 = spec.sinr_threshold();
    const double theta = 1.0 / (2.0 * M_PI * std::sqrt(std::exp2(2.0 * spec.rate) - 1.0));
    const double half_width = 0.5 / (theta * std::sqrt(static_cast<double>(spec.blocklength)));
    return {theta, std::max(0.0, gamma0 - half_width), gamma0 + half_width, gamma0};
}

// Psi(gamma): 1 below the ramp, 0 above it, linear in between.
inline double psi(double gamma, const LinearizationConstants& c, const FbcSpec& spec) {
    if (gamma < 0.0) throw std::invalid_argument("psi: gamma must be >= 0");
    const double v =
        0.5 - c.theta * std::sqrt(static_cast<double>(spec.blocklength)) * (gamma - c.gamma0);
    return std::min(1.0, std::max(0.0, v));
}

// Normal-approximation decoding error averaged over SINR samples. A zero
// SINR sample has zero dispersion and contributes a sure error.
inline double epsilon_normal(const FbcSpec& spec, std::span<const double> sinr_samples) {
    spec.validate();
    if (sinr_samples.empty()) throw std::invalid_argument("epsilon_normal: no samples");
    const double sqrt_n = std::sqrt(static_cast<double>(spec.blocklength));
    CompensatedSum acc;
    for (double g : sinr_samples) {
        if (g <= 0.0) {
            acc.add(1.0);
            continue;
        }
        const auto cd = capacity_dispersion(g);
        acc.add(q_function(sqrt_n * (cd.capacity_bits - spec.rate) / std::sqrt(cd.dispersion)));
    }
    return acc.value() / static_cast<double>(sinr_samples.size());
}

// E[Psi(gamma)] against an arbitrary SINR CDF. The Stieltjes integral over
// the ramp is reduced by parts to CDF evaluations, which keeps point masses
// exact.
template <typename Cdf>
double epsilon_linearized(const Cdf& cdf, const FbcSpec& spec, double tol = 1e-9) {
    spec.validate();
    const auto c = linearization_constants(spec);
    const double sn = c.theta * std::sqrt(static_cast<double>(spec.blocklength));
    const double f_low = cdf(c.zeta_low);
    const double f_up = cdf(c.zeta_up);
    // int_{low}^{up} x dF = [x F] - int F dx
    const double int_f = integrate(cdf, c.zeta_low, c.zeta_up, tol, 1e-300);
    const double stieltjes = c.zeta_up * f_up - c.zeta_low * f_low - int_f;
    return f_low + (0.5 + sn * c.gamma0) * (f_up - f_low) - sn * stieltjes;
}

// Deterministic conditioning of one link: the fading gain multiplier
// P*phi*G*PL, the interference level, and the noise power.
struct LinkCondition {
    double signal_coeff_w = 1.0;
    double interference_w = 0.0;
    double noise_w = 0.0;

    double threshold_scale() const { return (interference_w + noise_w) / signal_coeff_w; }
};

// Gamma-mixture SINR law of the interference-dominated satellite link:
// gamma = D X / I with X shadowed-Rician and I ~ Gamma(k, eta).
struct SatelliteSinrModel {
    ShadowedRicianParams fading;
    GammaInterferenceModel interference;
    double signal_coeff_w = 1.0;  // D = P phi G PL

    void validate() const {
        fading.validate();
        interference.validate();
        if (!(signal_coeff_w > 0.0)) throw std::invalid_argument("signal coefficient must be > 0");
    }
};

// Closed-form CDF of the mixture: the double (i, j) series evaluated with
// overflow-free term recurrences (all terms positive, ratios < 1 in the
// tail). Series caps follow the 500-term policy.
inline double satellite_sinr_cdf_series(double x, const SatelliteSinrModel& model,
                                        double tol = 1e-10) {
    model.validate();
    if (x < 0.0) throw std::invalid_argument("cdf: x must be >= 0");
    if (x == 0.0) return 0.0;
    const double beta = model.fading.fade_rate();
    const double delta = model.fading.delta();
    const double k = model.interference.shape;
    const double eta = model.interference.scale;
    const double w = beta * x / model.signal_coeff_w;
    const double u = eta * w / (1.0 + eta * w);
    constexpr int cap = 500;

    double total = 0.0;
    // t_{i,0} = alpha a_i Gamma(i+1) u^{i+1} (1+eta w)^{-k} (k)_{i+1} / Gamma(i+2)
    double t_row = model.fading.alpha() / beta * u * std::pow(1.0 + eta * w, -k) * k;
    for (int i = 0; i < cap; ++i) {
        double term = t_row;
        double row_sum = term;
        bool row_done = false;
        for (int j = 0; j < cap; ++j) {
            const double ratio = u * (k + i + j + 1) / (i + j + 2.0);
            term *= ratio;
            row_sum += term;
            if (ratio < 1.0) {
                const double tail = term * ratio / (1.0 - ratio);
                if (tail <= 0.25 * tol * (total + row_sum)) {
                    row_done = true;
                    break;
                }
            }
        }
        if (!row_done) throw std::runtime_error("satellite_sinr_cdf_series: j-series cap exceeded");
        total += row_sum;
        // every term of row i+1 is at most bound_ratio times its row-i peer
        const double bracket = delta * (model.fading.gamma_s + i) / (beta * (i + 1.0));
        const double bound_ratio = u * bracket * std::max(1.0, (k + i + 1) / (i + 2.0));
        if (bound_ratio < 1.0 && i >= 2) {
            const double rows_tail = row_sum * bound_ratio / (1.0 - bound_ratio);
            if (rows_tail <= 0.5 * tol * total) return std::min(total, 1.0);
        }
        t_row *= u * bracket * (k + i + 1) / (i + 2.0);
    }
    throw std::runtime_error("satellite_sinr_cdf_series: i-series cap exceeded");
}

// Same CDF by direct quadrature of E_I[F_{|h|^2}(x (I + sigma^2) / D)];
// the independent route used to cross-check the closed form.
inline double satellite_sinr_cdf_quadrature(double x, const SatelliteSinrModel& model,
                                            double noise_w = 0.0, double tol = 1e-9) {
    model.validate();
    if (x < 0.0) throw std::invalid_argument("cdf: x must be >= 0");
    if (x == 0.0) return 0.0;
    auto h_cdf = [&](double y) {
        return shadowed_rician_cdf(x * (y + noise_w) / model.signal_coeff_w, model.fading,
                                   std::min(1e-4, tol));
    };
    return std::min(1.0, gamma_surrogate_expectation(model.interference, h_cdf, tol));
}

// Finite-l mixture density (the Kummer sum against the Gamma surrogate).
inline double satellite_sinr_pdf_series(double x, const SatelliteSinrModel& model) {
    model.validate();
    if (x < 0.0) throw std::invalid_argument("pdf: x must be >= 0");
    const double beta = model.fading.fade_rate();
    const double delta = model.fading.delta();
    const double k = model.interference.shape;
    const double eta = model.interference.scale;
    const double D = model.signal_coeff_w;
    const double v = (beta - delta) * x / D;
    double sum = 0.0;
    double comb = 1.0;  // C(gamma_s - 1, l) / l!
    double dx_pow = 1.0;
    for (int l = 0; l < model.fading.gamma_s; ++l) {
        const double term = comb * dx_pow * pochhammer(k, l + 1) * std::pow(eta, l + 1) *
                            std::pow(1.0 + eta * v, -(l + k + 1));
        sum += term;
        comb *= static_cast<double>(model.fading.gamma_s - 1 - l) /
                (static_cast<double>(l + 1) * (l + 1));
        dx_pow *= delta * x / D;
    }
    return model.fading.alpha() / D * sum;
}

// Closed-form decoding error of the satellite link (interference-dominated
// Gamma surrogate): CDF series at both knots plus the ramp integral via the
// 2F1 auxiliary term.
inline double epsilon_satellite_theorem1(const SatelliteSinrModel& model, const FbcSpec& spec,
                                         double tol = 1e-8) {
    model.validate();
    spec.validate();
    const auto c = linearization_constants(spec);
    const double sn = c.theta * std::sqrt(static_cast<double>(spec.blocklength));
    const double f_low = c.zeta_low > 0.0 ? satellite_sinr_cdf_series(c.zeta_low, model, tol) : 0.0;
    const double f_up = satellite_sinr_cdf_series(c.zeta_up, model, tol);

    // Lambda = int_{low}^{up} x f(x) dx in closed form (G-R 3.194.1)
    const double beta = model.fading.fade_rate();
    const double delta = model.fading.delta();
    const double k = model.interference.shape;
    const double eta = model.interference.scale;
    const double D = model.signal_coeff_w;
    const double q = (beta - delta) / D;
    auto ramp_primitive = [&](double zeta) {
        if (zeta <= 0.0) return 0.0;
        double sum = 0.0;
        double comb = 1.0;
        double dpow = 1.0;  // (delta/D)^l
        for (int l = 0; l < model.fading.gamma_s; ++l) {
            const double f21 = hyp2f1(l + k + 1, l + 2.0, l + 3.0, -eta * q * zeta);
            sum += comb * dpow * pochhammer(k, l + 1) * std::pow(eta, l + 1) /
                   (l + 2.0) * std::pow(zeta, l + 2) * f21;
            comb *= static_cast<double>(model.fading.gamma_s - 1 - l) /
                    (static_cast<double>(l + 1) * (l + 1));
            dpow *= delta / D;
        }
        return model.fading.alpha() / D * sum;
    };
    const double lambda = ramp_primitive(c.zeta_up) - ramp_primitive(c.zeta_low);
    const double eps = f_low + (0.5 + sn * c.gamma0) * (f_up - f_low) - sn * lambda;
    return std::min(1.0, std::max(0.0, eps));
}

// High-SNR closed form: the ramp expectation against the linear asymptotic
// CDF F(x) = alpha k eta x / D. Falls back to the generic ramp formula when
// the linear CDF saturates inside the ramp.
inline double epsilon_satellite_asymptotic(const SatelliteSinrModel& model, const FbcSpec& spec) {
    model.validate();
    spec.validate();
    const auto c = linearization_constants(spec);
    const double sn = c.theta * std::sqrt(static_cast<double>(spec.blocklength));
    const double a = model.fading.alpha() * model.interference.shape * model.interference.scale /
                     model.signal_coeff_w;
    if (a * c.zeta_up <= 1.0) {
        const double term_low = a * c.zeta_low;
        const double term_ramp = (0.5 + sn * c.gamma0) * a * (c.zeta_up - c.zeta_low);
        const double term_int = sn * 0.5 * a * (c.zeta_up * c.zeta_up - c.zeta_low * c.zeta_low);
        return std::min(1.0, std::max(0.0, term_low + term_ramp - term_int));
    }
    auto cdf = [&](double x) { return std::min(1.0, a * x); };
    return std::min(1.0, std::max(0.0, epsilon_linearized(cdf, spec, 1e-12)));
}

// eta_m = m (m!)^{-1/m}, the tightest exponential CDF bound constant.
inline double eta_alzer(int m) {
    if (m < 1) throw std::invalid_argument("eta_alzer: m must be a positive integer");
    return m * std::pow(std::tgamma(m + 1.0), -1.0 / m);
}

// UAV-link decoding error via the alternating Laplace sum. signal_coeff_w is
// the serving link's P phi G PL_total; the interferer field is the whole
// co-tier process (the serving node is modeled as an extra point, so no
// exclusion correction applies).
inline double epsilon_uav(const FbcSpec& spec, double signal_coeff_w, double noise_w,
                          const UavInterferenceModel& env, double tol = 1e-9) {
    spec.validate();
    if (!(signal_coeff_w > 0.0)) throw std::invalid_argument("epsilon_uav: bad signal coefficient");
    if (noise_w < 0.0) throw std::invalid_argument("epsilon_uav: bad noise power");
    const int m = env.fading.m;
    const double eta = eta_alzer(m);
    const double gamma0 = spec.sinr_threshold();
    CompensatedSum acc;
    for (int l = 0; l <= m; ++l) {
        const double s = l * eta * gamma0 / signal_coeff_w;
        const double sign = (l % 2 == 0) ? 1.0 : -1.0;
        acc.add(sign * binomial_real(m, l) * std::exp(-s * noise_w) * laplace_uav(s, env, tol));
    }
    return std::min(1.0, std::max(0.0, acc.value()));
}

// Satellite outage probability at a deterministic link condition.
inline double outage_probability_satellite(const ShadowedRicianParams& fading, double rate,
                                           const LinkCondition& link, double tol = 1e-10) {
    if (!(rate > 0.0)) throw std::invalid_argument("outage: rate must be > 0");
    const double threshold = (std::exp2(rate) - 1.0) * link.threshold_scale();
    return shadowed_rician_cdf(threshold, fading, tol);
}

// UAV outage probability via the exponential-bound CDF.
inline double outage_probability_uav(const NakagamiParams& fading, double rate,
                                     const LinkCondition& link) {
    if (!(rate > 0.0)) throw std::invalid_argument("outage: rate must be > 0");
    const double z = eta_alzer(fading.m) * (std::exp2(rate) - 1.0) * link.threshold_scale();
    return std::pow(1.0 - std::exp(-z), fading.m);
}

// High-SNR satellite outage capacity (interference-dominated inversion).
inline double outage_capacity_satellite(const ShadowedRicianParams& fading, double epsilon,
                                        const LinkCondition& link) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon outside (0,1)");
    if (!(link.interference_w > 0.0)) {
        throw std::invalid_argument("satellite outage capacity needs interference > 0");
    }
    return std::log2(1.0 + epsilon * link.signal_coeff_w /
                               (fading.alpha() * link.interference_w));
}

// UAV outage capacity from the exponential-bound inversion.
inline double outage_capacity_uav(const NakagamiParams& fading, double epsilon,
                                  const LinkCondition& link) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon outside (0,1)");
    const double l = -std::log(1.0 - std::pow(epsilon, 1.0 / fading.m));
    return std::log2(1.0 + link.signal_coeff_w * l /
                               (eta_alzer(fading.m) * (link.interference_w + link.noise_w)));
}

// Generic inversion C = log2(1 + F^{-1}(epsilon)) for a strictly increasing
// SINR CDF, by bisection on an expanding bracket.
template <typename Cdf>
double outage_capacity_from_cdf(const Cdf& cdf, double epsilon, double hint = 1.0) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon outside (0,1)");
    double lo = 0.0;
    double hi = std::max(hint, 1e-12);
    int guard = 0;
    while (cdf(hi) < epsilon) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 2000) throw std::runtime_error("outage_capacity: CDF never reaches epsilon");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < epsilon ? lo : hi) = mid;
    }
    return std::log2(1.0 + 0.5 * (lo + hi));
}

// Normal-approximation maximal rate R*(n, eps) at a given SINR.
inline double fbc_max_rate(double gamma, int blocklength, double epsilon) {
    if (gamma < 0.0) throw std::invalid_argument("fbc_max_rate: gamma must be >= 0");
    if (blocklength < 1) throw std::invalid_argument("fbc_max_rate: blocklength must be >= 1");
    if (gamma == 0.0) return 0.0;
    const auto cd = capacity_dispersion(gamma);
    const double penalty =
        std::sqrt(cd.dispersion / blocklength) * q_function_inv(epsilon);
    return std::max(0.0, cd.capacity_bits - penalty);
}

}  // namespace saginqos
