// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "saginqos/channel.hpp"
#include "saginqos/geometry.hpp"
#include "saginqos/math/kahan.hpp"
#include "saginqos/math/quadrature.hpp"
#include "saginqos/math/special.hpp"

namespace saginqos {

// Moment-matched Gamma surrogate for an aggregate interference power.
struct GammaInterferenceModel {
    double shape = 1.0;  // k_I
    double scale = 1.0;  // eta_I, watts

    void validate() const {
        if (!(shape > 0.0 && scale > 0.0)) {
            throw std::invalid_argument("Gamma surrogate requires positive shape and scale");
        }
    }
    double mean() const { return shape * scale; }
    double variance() const { return shape * scale * scale; }
    double laplace(double s) const {
        if (s < 0.0) throw std::invalid_argument("laplace: s must be >= 0");
        return std::pow(1.0 + s * scale, -shape);
    }
    // E[I^l]
    double raw_moment(int l) const { return pochhammer(shape, l) * std::pow(scale, l); }
};

struct InterferenceMoments {
    double mean_w = 0.0;
    double variance_w2 = 0.0;
};

// Interferer field seen by the satellite link: the ground tier, single-slope
// pathloss, every GBS weighted by the serving tier's bias (the graph the
// SINR definition prescribes).
struct GroundInterferenceModel {
    TierProcess tier;
    LinkBudget budget;
    NakagamiParams fading;
    Region region;

    double coefficient() const {
        return budget.tx_power_w * budget.bias * budget.antenna_gain * budget.freq_factor();
    }
};

// Co-tier interferers of the UAV link: thinned LOS/NLOS point fields with
// per-state slopes and excess losses, altitudes averaged per the tier policy.
struct UavInterferenceModel {
    TierProcess tier;
    LinkBudget budget;
    LosModelParams los;
    NakagamiParams fading;
    Region region;

    double coefficient() const {
        return budget.tx_power_w * budget.bias * budget.antenna_gain * budget.freq_factor();
    }
};

namespace detail {

// 1 - E[e^{-s K g X}] for unit-mean Nakagami power X, stable for tiny
// arguments where 1 - (1+z)^{-m} would cancel
inline double nakagami_mgf_complement(double s_times_power, int m) {
    return -std::expm1(-static_cast<double>(m) * std::log1p(s_times_power / m));
}

template <typename F>
double altitude_average(const TierProcess& tier, const F& f, double tol) {
    if (!tier.aerial()) return f(0.0);
    if (tier.fixed_altitude()) return f(tier.altitude_min_m);
    const double lo = tier.altitude_min_m, hi = tier.altitude_max_m;
    return integrate(f, lo, hi, tol, 1e-300) / (hi - lo);
}

}  // namespace detail

// PGFL Laplace transform of the ground-tier aggregate interference,
// truncated at the operating-region radius.
inline double laplace_satellite(double s, const GroundInterferenceModel& model,
                                double tol = 1e-9) {
    if (s < 0.0) throw std::invalid_argument("laplace_satellite: s must be >= 0");
    model.tier.validate();
    model.budget.validate();
    model.fading.validate();
    if (s == 0.0 || model.tier.density == 0.0) return 1.0;
    const double K = model.coefficient();
    const int m = model.fading.m;
    const double beta = model.budget.pathloss_exponent;
    const double d0 = model.budget.near_field_m;
    auto integrand = [&](double r) {
        const double d = std::max(r, d0);
        return detail::nakagami_mgf_complement(s * K * std::pow(d, -beta), m) * r;
    };
    const double val = integrate(integrand, 0.0, model.region.radius_m, tol, 1e-300);
    return std::exp(-2.0 * M_PI * model.tier.density * val);
}

// One LOS/NLOS factor of the UAV-tier transform: PGFL over the thinned
// intensity lambda * p_state(r), altitude-averaged.
inline double laplace_uav_state(double s, const UavInterferenceModel& model, LinkState state,
                                double tol = 1e-9) {
    if (s < 0.0) throw std::invalid_argument("laplace_uav: s must be >= 0");
    model.tier.validate();
    model.budget.validate();
    model.fading.validate();
    model.los.validate();
    if (!model.budget.dual_slope()) {
        throw std::invalid_argument("laplace_uav: UAV budget must be dual-slope");
    }
    if (s == 0.0 || model.tier.density == 0.0) return 1.0;
    const double K = model.coefficient();
    const int m = model.fading.m;
    const bool is_los = (state == LinkState::los);
    const double beta =
        is_los ? model.budget.pathloss_exponent : model.budget.pathloss_exponent_nlos;
    const double xi = is_los ? model.budget.excess_loss_los : model.budget.excess_loss_nlos;
    const double d0 = model.budget.near_field_m;
    auto integrand = [&](double r) {
        auto over_altitude = [&](double z) {
            const double d = std::sqrt(r * r + z * z);
            const double p = los_probability(d, z, model.los);
            const double weight = is_los ? p : 1.0 - p;
            const double g = xi * std::pow(std::max(d, d0), -beta);
            return weight * detail::nakagami_mgf_complement(s * K * g, m);
        };
        return detail::altitude_average(model.tier, over_altitude, tol) * r;
    };
    const double val = integrate(integrand, 0.0, model.region.radius_m, tol, 1e-300);
    return std::exp(-2.0 * M_PI * model.tier.density * val);
}

inline double laplace_uav(double s, const UavInterferenceModel& model, double tol = 1e-9) {
    return laplace_uav_state(s, model, LinkState::los, tol) *
           laplace_uav_state(s, model, LinkState::nlos, tol);
}

// j-th Campbell cumulant kappa(j) = 2 pi lambda E[X^j] int (K PL(r))^j r dr.
inline double interference_cumulant(const GroundInterferenceModel& model, int j,
                                    double tol = 1e-10) {
    if (j < 1) throw std::invalid_argument("cumulant order must be >= 1");
    model.tier.validate();
    model.budget.validate();
    if (model.tier.density == 0.0) return 0.0;
    const double K = model.coefficient();
    const double beta = model.budget.pathloss_exponent;
    const double d0 = model.budget.near_field_m;
    if (!(d0 > 0.0) && beta * j >= 2.0) {
        throw std::domain_error(
            "interference cumulant diverges at the origin for beta*j >= 2 without a near-field "
            "clamp");
    }
    const double fad = pochhammer(model.fading.m, j) / std::pow(model.fading.m, j);
    auto integrand = [&](double r) {
        const double d = std::max(r, d0);
        return std::pow(K * std::pow(d, -beta), j) * r;
    };
    const double val = integrate(integrand, 0.0, model.region.radius_m, tol, 1e-300);
    return 2.0 * M_PI * model.tier.density * fad * val;
}

inline double interference_cumulant(const UavInterferenceModel& model, int j,
                                    double tol = 1e-10) {
    if (j < 1) throw std::invalid_argument("cumulant order must be >= 1");
    model.tier.validate();
    model.budget.validate();
    model.los.validate();
    if (model.tier.density == 0.0) return 0.0;
    const double K = model.coefficient();
    const double d0 = model.budget.near_field_m;
    const double fad = pochhammer(model.fading.m, j) / std::pow(model.fading.m, j);
    auto integrand = [&](double r) {
        auto over_altitude = [&](double z) {
            const double d = std::sqrt(r * r + z * z);
            const double p = los_probability(d, z, model.los);
            const double de = std::max(d, d0);
            const double g_los =
                model.budget.excess_loss_los * std::pow(de, -model.budget.pathloss_exponent);
            const double g_nlos =
                model.budget.excess_loss_nlos * std::pow(de, -model.budget.pathloss_exponent_nlos);
            return p * std::pow(K * g_los, j) + (1.0 - p) * std::pow(K * g_nlos, j);
        };
        return detail::altitude_average(model.tier, over_altitude, tol) * r;
    };
    const double val = integrate(integrand, 0.0, model.region.radius_m, tol, 1e-300);
    return 2.0 * M_PI * model.tier.density * fad * val;
}

template <typename Model>
InterferenceMoments interference_moments(const Model& model, double tol = 1e-10) {
    return {interference_cumulant(model, 1, tol), interference_cumulant(model, 2, tol)};
}

// Raw moments E[I^l], l = 1..order, from cumulants via the standard
// recursion m_n = sum_k C(n-1,k-1) kappa_k m_{n-k}.
template <typename Model>
std::vector<double> interference_raw_moments(const Model& model, int order, double tol = 1e-10) {
    std::vector<double> kappa(order + 1, 0.0);
    for (int j = 1; j <= order; ++j) kappa[j] = interference_cumulant(model, j, tol);
    std::vector<double> m(order + 1, 0.0);
    m[0] = 1.0;
    for (int n = 1; n <= order; ++n) {
        double acc = 0.0;
        for (int k = 1; k <= n; ++k) {
            acc += binomial_real(n - 1.0, k - 1) * kappa[k] * m[n - k];
        }
        m[n] = acc;
    }
    return {m.begin() + 1, m.end()};
}

// E[g(I)] over a Gamma surrogate. Shapes below one take the power
// substitution v = (y/eta)^k, which removes the origin singularity and
// sharpens the tail; shapes of one and above integrate the plain density
// through a scaled rational map, where the exponential factor already
// controls the tail.
template <typename G>
double gamma_surrogate_expectation(const GammaInterferenceModel& gm, const G& g,
                                   double tol = 1e-9) {
    gm.validate();
    const double k = gm.shape;
    if (k < 1.0) {
        auto integrand = [&](double v) {
            const double p = std::pow(v, 1.0 / k);
            if (!(p < 745.0)) return 0.0;  // weight underflows for bounded-growth g
            return g(gm.scale * p) * std::exp(-p);
        };
        return integrate_semi_infinite(integrand, 0.0, tol, 1e-300) / std::tgamma(k + 1.0);
    }
    const double spread = gm.scale * (k + 1.0);
    const double lg = std::lgamma(k);
    auto integrand = [&](double t) {
        const double om = 1.0 - t;
        const double y = spread * t / om;
        const double lw = (k - 1.0) * std::log(y / gm.scale) - y / gm.scale - lg;
        if (lw < -745.0) return 0.0;
        return g(y) * std::exp(lw) * spread / (gm.scale * om * om);
    };
    return integrate(integrand, 0.0, 1.0, tol, 1e-300);
}

// Second-order moment match.
inline GammaInterferenceModel gamma_fit(const InterferenceMoments& m) {
    if (!(m.variance_w2 > 0.0)) {
        throw std::invalid_argument("gamma_fit: zero variance is degenerate, use a point mass");
    }
    if (!(m.mean_w > 0.0)) throw std::invalid_argument("gamma_fit: mean must be positive");
    return {m.mean_w * m.mean_w / m.variance_w2, m.variance_w2 / m.mean_w};
}

struct SplitInterference {
    double los_w = 0.0;
    double nlos_w = 0.0;

    double total() const { return los_w + nlos_w; }
};

// Aggregate interference of one sampled field split by link state: per-point
// Nakagami fading, LOS/NLOS pathloss per the field marks on dual-slope
// budgets. Single-slope tiers accumulate everything in the LOS bucket.
inline SplitInterference mc_interference_split(const PointFieldRealization& field,
                                               const LinkBudget& budget,
                                               const NakagamiParams& fading, std::uint64_t seed) {
    budget.validate();
    fading.validate();
    if (budget.dual_slope() && field.marks.size() != field.points.size()) {
        throw std::invalid_argument("mc_interference: dual-slope field must be LOS-thinned first");
    }
    RandomStream rng(seed);
    const double K = budget.tx_power_w * budget.bias * budget.antenna_gain * budget.freq_factor();
    const double d0 = budget.near_field_m;
    CompensatedSum los, nlos;
    for (std::size_t i = 0; i < field.points.size(); ++i) {
        const double d = std::max(field.points[i].range(), d0);
        const double x = K * rng.nakagami_power(fading.m);
        if (budget.dual_slope() && field.marks[i] == LinkState::nlos) {
            nlos.add(x * budget.excess_loss_nlos * std::pow(d, -budget.pathloss_exponent_nlos));
        } else if (budget.dual_slope()) {
            los.add(x * budget.excess_loss_los * std::pow(d, -budget.pathloss_exponent));
        } else {
            los.add(x * std::pow(d, -budget.pathloss_exponent));
        }
    }
    return {los.value(), nlos.value()};
}

inline double mc_interference(const PointFieldRealization& field, const LinkBudget& budget,
                              const NakagamiParams& fading, std::uint64_t seed) {
    return mc_interference_split(field, budget, fading, seed).total();
}

}  // namespace saginqos
