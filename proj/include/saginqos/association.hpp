// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "saginqos/channel.hpp"
#include "saginqos/geometry.hpp"
#include "saginqos/parallel.hpp"

namespace saginqos {

enum class Tier : int { satellite = 0, uav = 1 };

struct SatelliteTier {
    LinkBudget budget;
    double distance_m = 600e3;
    bool enabled = true;
};

struct UavTier {
    LinkBudget budget;
    LosModelParams los;
    TierProcess process;
    bool enabled = true;
};

// Maximum biased-received-power association. The optional gate keeps the
// satellite admissible only while the candidate UAV link is NLOS.
struct AssociationConfig {
    SatelliteTier satellite;
    UavTier uav;
    bool uav_los_gate = false;
};

inline double satellite_bias_metric(const SatelliteTier& sat) {
    return sat.budget.tx_power_w * sat.budget.bias * sat.budget.antenna_gain *
           pathloss_free_space(sat.budget, sat.distance_m);
}

// UAV candidate metric with the LOS-probability-weighted total pathloss.
inline double uav_bias_metric(const UavTier& uav, double distance_m, double altitude_m) {
    return uav.budget.tx_power_w * uav.budget.bias * uav.budget.antenna_gain *
           pathloss_uav(uav.budget, distance_m, altitude_m, uav.los);
}

struct UavCandidate {
    double distance_m = 0.0;
    double altitude_m = 0.0;
    bool los = false;
};

// argmax of the biased received power; ties break toward the smaller tier
// id (satellite).
inline Tier associate(const AssociationConfig& cfg, const std::optional<UavCandidate>& candidate) {
    const bool sat_gated =
        cfg.uav_los_gate && candidate.has_value() && candidate->los;
    const bool sat_ok = cfg.satellite.enabled && !sat_gated;
    const bool uav_ok = cfg.uav.enabled && candidate.has_value();
    if (!sat_ok && !uav_ok) throw std::runtime_error("associate: no admissible tier");
    if (!uav_ok) return Tier::satellite;
    if (!sat_ok) return Tier::uav;
    const double ms = satellite_bias_metric(cfg.satellite);
    const double mu = uav_bias_metric(cfg.uav, candidate->distance_m, candidate->altitude_m);
    return mu > ms ? Tier::uav : Tier::satellite;
}

struct AssociationProbability {
    double satellite = 0.0;
    double uav = 0.0;
};

namespace detail {

inline std::optional<UavCandidate> nearest_uav(const PointFieldRealization& field) {
    if (field.points.empty()) return std::nullopt;
    double best = std::numeric_limits<double>::infinity();
    const Point3* best_pt = nullptr;
    for (const auto& pt : field.points) {
        const double d = pt.range();
        if (d < best) {
            best = d;
            best_pt = &pt;
        }
    }
    return UavCandidate{best, best_pt->z, false};
}

}  // namespace detail

// Monte Carlo tier frequencies over sampled UAV fields. The serving UAV is
// the 3D-nearest point; its LOS state is drawn only when the gate needs it.
inline AssociationProbability association_probability(const AssociationConfig& cfg,
                                                      const Region& region, std::size_t trials,
                                                      std::uint64_t seed, int threads = 1) {
    if (trials < 1) throw std::invalid_argument("association_probability: trials must be >= 1");
    std::vector<std::uint8_t> chose_uav(trials, 0);
    parallel_for(trials, threads, [&](std::size_t t) {
        const auto field = sample_field(cfg.uav.process, region, derive_seed(seed, t, 1));
        auto cand = detail::nearest_uav(field);
        if (cand && cfg.uav_los_gate) {
            RandomStream rng(derive_seed(seed, t, 2));
            const double p = los_probability(cand->distance_m, cand->altitude_m, cfg.uav.los);
            cand->los = rng.uniform01() < p;
        }
        chose_uav[t] = associate(cfg, cand) == Tier::uav ? 1 : 0;
    });
    std::size_t uav_count = 0;
    for (auto v : chose_uav) uav_count += v;
    const double pu = static_cast<double>(uav_count) / static_cast<double>(trials);
    return {1.0 - pu, pu};
}

// Density sweep with superposition coupling: one field at the largest
// density per trial, with per-point uniform marks deciding membership at
// each thinner density. Per-trial metrics are then monotone in density,
// which keeps the estimated curve strictly increasing without extra trials.
inline std::vector<AssociationProbability> association_probability_sweep(
    const AssociationConfig& cfg, const Region& region, const std::vector<double>& densities,
    std::size_t trials, std::uint64_t seed, int threads = 1) {
    if (densities.empty()) throw std::invalid_argument("sweep: density list is empty");
    double lambda_max = 0.0;
    for (double l : densities) {
        if (!(l >= 0.0)) throw std::invalid_argument("sweep: densities must be >= 0");
        lambda_max = std::max(lambda_max, l);
    }
    std::vector<std::uint8_t> votes(trials * densities.size(), 0);
    TierProcess full = cfg.uav.process;
    full.density = lambda_max;
    parallel_for(trials, threads, [&](std::size_t t) {
        const auto field = sample_field(full, region, derive_seed(seed, t, 1));
        RandomStream marks(derive_seed(seed, t, 3));
        std::vector<double> keep(field.points.size());
        for (auto& k : keep) k = marks.uniform01();
        for (std::size_t di = 0; di < densities.size(); ++di) {
            const double frac = lambda_max > 0.0 ? densities[di] / lambda_max : 0.0;
            std::optional<UavCandidate> cand;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < field.points.size(); ++i) {
                if (keep[i] >= frac) continue;
                const double d = field.points[i].range();
                if (d < best) {
                    best = d;
                    cand = UavCandidate{d, field.points[i].z, false};
                }
            }
            if (cand && cfg.uav_los_gate) {
                RandomStream rng(derive_seed(seed, t, 4 + di));
                const double p = los_probability(cand->distance_m, cand->altitude_m, cfg.uav.los);
                cand->los = rng.uniform01() < p;
            }
            votes[t * densities.size() + di] = associate(cfg, cand) == Tier::uav ? 1 : 0;
        }
    });
    std::vector<AssociationProbability> out(densities.size());
    for (std::size_t di = 0; di < densities.size(); ++di) {
        std::size_t count = 0;
        for (std::size_t t = 0; t < trials; ++t) count += votes[t * densities.size() + di];
        const double pu = static_cast<double>(count) / static_cast<double>(trials);
        out[di] = {1.0 - pu, pu};
    }
    return out;
}

}  // namespace saginqos
