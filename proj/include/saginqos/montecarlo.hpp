// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "saginqos/interference.hpp"
#include "saginqos/math/kahan.hpp"
#include "saginqos/parallel.hpp"

namespace saginqos {

// Aggregate-interference samples over independent fields, one deterministic
// stream per field index. Reductions over these vectors run in index order.
inline std::vector<double> mc_interference_samples(const GroundInterferenceModel& model,
                                                   std::size_t n_fields, std::uint64_t seed,
                                                   int threads) {
    std::vector<double> out(n_fields);
    parallel_for(n_fields, threads, [&](std::size_t i) {
        const auto field = sample_field(model.tier, model.region, derive_seed(seed, i, 10));
        out[i] = mc_interference(field, model.budget, model.fading, derive_seed(seed, i, 11));
    });
    return out;
}

inline std::vector<double> mc_interference_samples(const UavInterferenceModel& model,
                                                   std::size_t n_fields, std::uint64_t seed,
                                                   int threads) {
    std::vector<double> out(n_fields);
    parallel_for(n_fields, threads, [&](std::size_t i) {
        auto field = sample_field(model.tier, model.region, derive_seed(seed, i, 10));
        field = thin_by_los(field, model.los, derive_seed(seed, i, 12));
        out[i] = mc_interference(field, model.budget, model.fading, derive_seed(seed, i, 11));
    });
    return out;
}

struct SampleStats {
    double mean = 0.0;
    double variance = 0.0;  // unbiased
};

inline SampleStats sample_stats(const std::vector<double>& xs) {
    SampleStats s;
    if (xs.empty()) return s;
    CompensatedSum sum;
    for (double x : xs) sum.add(x);
    s.mean = sum.value() / static_cast<double>(xs.size());
    if (xs.size() < 2) return s;
    CompensatedSum sq;
    for (double x : xs) sq.add((x - s.mean) * (x - s.mean));
    s.variance = sq.value() / static_cast<double>(xs.size() - 1);
    return s;
}

struct LaplaceEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

// \hat{L}(s) = mean of exp(-s I) over the sampled fields.
inline LaplaceEstimate mc_laplace_estimate(const std::vector<double>& interference_samples,
                                           double s) {
    LaplaceEstimate est;
    if (interference_samples.empty()) return est;
    CompensatedSum sum, sq;
    for (double x : interference_samples) {
        const double e = std::exp(-s * x);
        sum.add(e);
        sq.add(e * e);
    }
    const double n = static_cast<double>(interference_samples.size());
    est.value = sum.value() / n;
    const double var = std::max(0.0, sq.value() / n - est.value * est.value);
    est.std_error = std::sqrt(var / n);
    return est;
}

}  // namespace saginqos
