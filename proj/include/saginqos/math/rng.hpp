// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace saginqos {

// Counter-style seed expansion (Steele et al. splitmix64). Used both to
// initialize xoshiro state and to derive independent per-trial streams.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Independent stream id for (base seed, trial index, purpose). Streams are
// reproducible across platforms and thread counts.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                 std::uint64_t purpose = 0) {
    std::uint64_t s = base;
    std::uint64_t a = splitmix64_next(s);
    s ^= stream * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL;
    std::uint64_t b = splitmix64_next(s);
    s ^= purpose * 0xA24BAED4963EE407ULL + 1;
    return a ^ b ^ splitmix64_next(s);
}

// xoshiro256++ (Blackman/Vigna), plus the sampling routines the toolkit
// needs. All algorithms are fixed here rather than taken from <random> so
// that realizations are identical across standard libraries.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64_next(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform on (0,1), 53-bit resolution, never exactly 0
    double uniform01() {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    double exponential() { return -std::log(uniform01()); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // Marsaglia polar method
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    // Gamma(shape, scale), Marsaglia–Tsang squeeze
    double gamma(double shape, double scale) {
        if (shape < 1.0) {
            const double u = uniform01();
            return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
        }
    }

    // Nakagami-m power gain: Gamma(m, 1/m), unit mean
    double nakagami_power(int m) { return gamma(static_cast<double>(m), 1.0 / m); }

    std::uint64_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean < 30.0) return poisson_knuth(mean);
        return poisson_ptrs(mean);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t poisson_knuth(double mean) {
        const double limit = -mean;
        double sum = 0.0;
        std::uint64_t k = 0;
        for (;;) {
            sum -= exponential();
            if (sum < limit) return k;
            ++k;
        }
    }

    // Hörmann's PTRS transformed-rejection sampler (exact for mean >= 10)
    std::uint64_t poisson_ptrs(double mean) {
        const double slam = std::sqrt(mean);
        const double loglam = std::log(mean);
        const double b = 0.931 + 2.53 * slam;
        const double a = -0.059 + 0.02483 * b;
        const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
        const double vr = 0.9277 - 3.6224 / (b - 2.0);
        for (;;) {
            const double u = uniform01() - 0.5;
            const double v = uniform01();
            const double us = 0.5 - std::fabs(u);
            const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
            if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            if (std::log(v * invalpha / (a / (us * us) + b)) <=
                -mean + kf * loglam - std::lgamma(kf + 1.0)) {
                return static_cast<std::uint64_t>(kf);
            }
        }
    }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace saginqos
