// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace saginqos {

class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
inline constexpr double kGK15Nodes[8] = {
    0.0,
    0.2077849550078985,
    0.4058451513773972,
    0.5860872354676911,
    0.7415311855993945,
    0.8648644233597691,
    0.9491079123427585,
    0.9914553711208126,
};
inline constexpr double kGK15WeightsK[8] = {
    0.2094821410847278,
    0.2044329400752989,
    0.1903505780647854,
    0.1690047266392679,
    0.1406532597155259,
    0.1047900103222502,
    0.0630920926299786,
    0.0229353220105292,
};
inline constexpr double kGK15WeightsG[4] = {
    0.4179591836734694,
    0.3818300505051189,
    0.2797053914892767,
    0.1294849661688697,
};

template <typename F>
void gk15(const F& f, double a, double b, double& value, double& error) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kGK15WeightsK[0] * fc;
    double resg = kGK15WeightsG[0] * fc;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kGK15Nodes[i];
        const double fsum = f(c - dx) + f(c + dx);
        resk += kGK15WeightsK[i] * fsum;
        if (i % 2 == 0) resg += kGK15WeightsG[i / 2] * fsum;
    }
    value = resk * h;
    error = std::abs((resk - resg) * h);
}

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

}  // namespace detail

// Globally adaptive Gauss–Kronrod on [a, b]: the worst interval is split
// until the summed error estimate meets max(abs_floor, rel_tol * |value|).
// Handles bounded kinks and integrable endpoint spikes; a budget overrun
// reports non-convergence.
template <typename F>
double integrate(const F& f, double a, double b, double rel_tol = 1e-10,
                 double abs_floor = 1e-15, int max_intervals = 3000) {
    if (!(b > a)) return 0.0;
    std::vector<detail::Segment> segs;
    segs.reserve(256);
    detail::Segment whole{a, b, 0.0, 0.0};
    detail::gk15(f, a, b, whole.value, whole.error);
    segs.push_back(whole);
    double total_v = whole.value;
    double total_e = whole.error;
    while (total_e > std::max(abs_floor, rel_tol * std::abs(total_v))) {
        if (static_cast<int>(segs.size()) >= max_intervals) {
            throw QuadratureError("adaptive quadrature did not converge (" +
                                  std::to_string(segs.size()) + " intervals, error " +
                                  std::to_string(total_e) + ")");
        }
        std::pop_heap(segs.begin(), segs.end());
        detail::Segment worst = segs.back();
        segs.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // interval at roundoff resolution; keep its estimate as-is
            worst.error = 0.0;
            segs.push_back(worst);
            std::push_heap(segs.begin(), segs.end());
            continue;
        }
        detail::Segment left{worst.a, mid, 0.0, 0.0}, right{mid, worst.b, 0.0, 0.0};
        detail::gk15(f, left.a, left.b, left.value, left.error);
        detail::gk15(f, right.a, right.b, right.value, right.error);
        total_v += left.value + right.value - worst.value;
        total_e += left.error + right.error - worst.error;
        segs.push_back(left);
        std::push_heap(segs.begin(), segs.end());
        segs.push_back(right);
        std::push_heap(segs.begin(), segs.end());
    }
    // final pass in spatial order for a reproducible, well-conditioned sum
    std::sort(segs.begin(), segs.end(),
              [](const detail::Segment& x, const detail::Segment& y) { return x.a < y.a; });
    double sum = 0.0, comp = 0.0;
    for (const auto& s : segs) {
        const double t = sum + s.value;
        comp += std::abs(sum) >= std::abs(s.value) ? (sum - t) + s.value : (s.value - t) + sum;
        sum = t;
    }
    return sum + comp;
}

// \int_a^\infty f via the rational map x = a + t/(1-t).
template <typename F>
double integrate_semi_infinite(const F& f, double a, double rel_tol = 1e-10,
                               double abs_floor = 1e-15, int max_intervals = 3000) {
    auto g = [&](double t) {
        const double om = 1.0 - t;
        const double x = a + t / om;
        return f(x) / (om * om);
    };
    return integrate(g, 0.0, 1.0, rel_tol, abs_floor, max_intervals);
}

}  // namespace saginqos
