// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "saginqos/math/rng.hpp"

namespace saginqos {

// Disk of radius R_c centered on the typical user at the origin. The
// nominally infinite point processes are truncated here so that analytic
// integrals and Monte Carlo fields cover the same region.
struct Region {
    double radius_m = 10e3;

    void validate() const {
        if (!(radius_m > 0.0)) throw std::invalid_argument("region.radius_m must be > 0");
    }
};

// One network tier's homogeneous PPP. Ground tiers have no altitude range;
// aerial tiers draw altitude uniformly in [min, max], or pin it by setting
// min == max.
struct TierProcess {
    double density = 0.0;  // points per m^2
    double altitude_min_m = 0.0;
    double altitude_max_m = 0.0;

    bool aerial() const { return altitude_max_m > 0.0; }
    bool fixed_altitude() const { return aerial() && altitude_min_m == altitude_max_m; }

    void validate() const {
        if (!(density >= 0.0)) throw std::invalid_argument("tier density must be >= 0");
        if (altitude_max_m > 0.0 &&
            !(altitude_min_m > 0.0 && altitude_min_m <= altitude_max_m)) {
            throw std::invalid_argument("tier altitude range requires 0 < min <= max");
        }
    }
};

// Environment constants of the elevation-angle LOS model, calibrated in
// degrees.
struct LosModelParams {
    double nu1 = 9.61;
    double nu2 = 0.16;

    void validate() const {
        if (!(nu1 > 0.0 && nu2 > 0.0)) throw std::invalid_argument("LOS constants must be > 0");
    }
};

struct Point3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double horizontal_range() const { return std::hypot(x, y); }
    double range() const { return std::sqrt(x * x + y * y + z * z); }
};

enum class LinkState : std::uint8_t { los, nlos };

// One sampled interferer field. marks is empty until thin_by_los runs (and
// stays empty for ground tiers).
struct PointFieldRealization {
    std::vector<Point3> points;
    std::vector<LinkState> marks;
    std::uint64_t seed = 0;
};

// LOS probability of a link of 3D length distance_m to a platform at
// altitude_m: p = 1 / (1 + nu1 exp{-nu2 (theta_deg - nu1)}) with the
// elevation angle in degrees.
inline double los_probability(double distance_m, double altitude_m, const LosModelParams& p) {
    if (!(altitude_m > 0.0)) throw std::invalid_argument("los_probability: altitude must be > 0");
    if (altitude_m > distance_m) {
        throw std::invalid_argument("los_probability: altitude exceeds link distance");
    }
    const double elev_deg = std::asin(std::min(1.0, altitude_m / distance_m)) * (180.0 / M_PI);
    return 1.0 / (1.0 + p.nu1 * std::exp(-p.nu2 * (elev_deg - p.nu1)));
}

// Samples one field realization: Poisson count on the disk, uniform
// positions, altitude per the tier policy. Identical (tier, region, seed)
// yields an identical realization.
inline PointFieldRealization sample_field(const TierProcess& tier, const Region& region,
                                          std::uint64_t seed) {
    tier.validate();
    region.validate();
    PointFieldRealization field;
    field.seed = seed;
    RandomStream rng(seed);
    const double mean = tier.density * M_PI * region.radius_m * region.radius_m;
    const std::uint64_t n = rng.poisson(mean);
    field.points.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double r = region.radius_m * std::sqrt(rng.uniform01());
        const double phi = 2.0 * M_PI * rng.uniform01();
        Point3 pt{r * std::cos(phi), r * std::sin(phi), 0.0};
        if (tier.aerial()) {
            pt.z = tier.fixed_altitude() ? tier.altitude_min_m
                                         : rng.uniform(tier.altitude_min_m, tier.altitude_max_m);
        }
        field.points.push_back(pt);
    }
    return field;
}

// Independent thinning: each aerial point is marked LOS with its
// elevation-dependent probability. The LOS sub-field realizes the thinned
// intensity lambda * p_los(d).
inline PointFieldRealization thin_by_los(const PointFieldRealization& field,
                                         const LosModelParams& params, std::uint64_t seed) {
    PointFieldRealization out = field;
    out.marks.resize(field.points.size());
    RandomStream rng(seed);
    for (std::size_t i = 0; i < field.points.size(); ++i) {
        const Point3& pt = field.points[i];
        if (!(pt.z > 0.0)) throw std::invalid_argument("thin_by_los: field is not aerial");
        const double p = los_probability(pt.range(), pt.z, params);
        out.marks[i] = (rng.uniform01() < p) ? LinkState::los : LinkState::nlos;
    }
    return out;
}

// Mean horizontal distance to the nearest point of a planar PPP.
inline double mean_nearest_horizontal_distance(double density) {
    if (!(density > 0.0)) throw std::invalid_argument("density must be > 0");
    return 0.5 / std::sqrt(density);
}

}  // namespace saginqos
