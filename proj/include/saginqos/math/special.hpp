// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "saginqos/math/quadrature.hpp"

namespace saginqos {

// Gaussian tail probability Q(x) = P[N(0,1) > x].
inline double q_function(double x) { return 0.5 * std::erfc(x * M_SQRT1_2); }

// Inverse of q_function. Acklam's rational approximation refined with one
// Halley step; relative error is at the erfc roundoff floor.
inline double q_function_inv(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("q_function_inv: p outside (0,1)");
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    const double pl = 1.0 - p;  // N(0,1) CDF argument
    double x;
    if (pl < 0.02425) {
        const double q = std::sqrt(-2.0 * std::log(pl));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (pl > 0.97575) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - pl));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else {
        const double q = pl - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    // Halley refinement on Q(x) - p
    for (int it = 0; it < 2; ++it) {
        const double e = q_function(x) - p;
        const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
        if (pdf <= 0.0) break;
        const double u = e / pdf;  // Q' = -pdf
        x += u / (1.0 - 0.5 * x * u);
    }
    return x;
}

inline double gamma_fn(double a) { return std::tgamma(a); }

// Regularized lower incomplete gamma P(a, x); series for x < a+1, Lentz
// continued fraction otherwise.
inline double gamma_p(double a, double x) {
    if (a <= 0.0) throw std::domain_error("gamma_p: a must be positive");
    if (x < 0.0) throw std::domain_error("gamma_p: x must be nonnegative");
    if (x == 0.0) return 0.0;
    const double lg = std::lgamma(a);
    const double lpref = -x + a * std::log(x) - lg;
    if (lpref < -745.0) return x < a ? 0.0 : 1.0;  // prefactor underflows
    if (x < a + 1.0) {
        double ap = a;
        double term = 1.0 / a;
        double sum = term;
        for (int i = 0; i < 2000; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-15) {
                return sum * std::exp(lpref);
            }
        }
        throw std::runtime_error("gamma_p: series did not converge");
    }
    // 1 - Q via continued fraction
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double cc = 1.0 / tiny;
    double dd = 1.0 / b;
    double h = dd;
    for (int i = 1; i <= 2000; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        dd = an * dd + b;
        if (std::abs(dd) < tiny) dd = tiny;
        cc = b + an / cc;
        if (std::abs(cc) < tiny) cc = tiny;
        dd = 1.0 / dd;
        const double del = dd * cc;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) {
            return 1.0 - std::exp(lpref) * h;
        }
    }
    throw std::runtime_error("gamma_p: continued fraction did not converge");
}

// Lower incomplete gamma \gamma(a, x).
inline double lower_incomplete_gamma(double a, double x) {
    return std::tgamma(a) * gamma_p(a, x);
}

// Pochhammer symbol (x)_n for integer n >= 0.
inline double pochhammer(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x + i;
    return r;
}

// Generalized binomial coefficient C(alpha, k) = (alpha)(alpha-1).../(k!).
// Exact zeros for integer alpha < k.
inline double binomial_real(double alpha, int k) {
    double r = 1.0;
    for (int m = 1; m <= k; ++m) r *= (alpha - m + 1) / m;
    return r;
}

// Confluent hypergeometric 1F1(a, 1, z) for positive integer a via the
// Kummer finite sum: e^z * sum_{l<a} C(a-1,l) z^l / l!.
inline double hyp1f1_integer(int a, double z) {
    if (a < 1) throw std::domain_error("hyp1f1_integer: a must be a positive integer");
    double sum = 0.0;
    double term = 1.0;  // C(a-1,0) z^0/0!
    for (int l = 0; l < a; ++l) {
        sum += term;
        term *= z * static_cast<double>(a - 1 - l) / (static_cast<double>(l + 1) * (l + 1));
    }
    return std::exp(z) * sum;
}

namespace detail {

inline double hyp2f1_series(double a, double b, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 100000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= std::abs(sum) * 1e-16) return sum;
    }
    throw std::runtime_error("hyp2f1: series did not converge");
}

// Euler integral, valid for c > b > 0 and z < 1.
inline double hyp2f1_euler(double a, double b, double c, double z) {
    const double lpref = std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b);
    auto f = [&](double t) {
        return std::pow(t, b - 1.0) * std::pow(1.0 - t, c - b - 1.0) *
               std::pow(1.0 - z * t, -a);
    };
    // endpoint behavior t^(b-1), (1-t)^(c-b-1) is integrable for b, c-b > 0
    const double val = integrate(f, 0.0, 1.0, 1e-13, 1e-300);
    return std::exp(lpref) * val;
}

}  // namespace detail

// Gauss hypergeometric 2F1(a, b; c; z) for z <= z_series < 1. Negative
// arguments route through the Pfaff transformation; deep-negative z with
// c > b > 0 (or c > a > 0) falls back to the Euler integral, which stays
// well conditioned as z -> -inf.
inline double hyp2f1(double a, double b, double c, double z) {
    if (c <= 0.0 && c == std::floor(c)) {
        throw std::domain_error("hyp2f1: c is a non-positive integer");
    }
    if (z == 0.0) return 1.0;
    if (z >= 1.0) throw std::domain_error("hyp2f1: z >= 1 not supported");
    if (z > 0.0) {
        if (z <= 0.925) return detail::hyp2f1_series(a, b, c, z);
        if (c > b && b > 0.0) return detail::hyp2f1_euler(a, b, c, z);
        if (c > a && a > 0.0) return detail::hyp2f1_euler(b, a, c, z);
        throw std::domain_error("hyp2f1: z too close to 1 for the series");
    }
    // z < 0: Pfaff maps to w in (0,1)
    const double w = z / (z - 1.0);
    if (w <= 0.7) {
        return std::pow(1.0 - z, -a) * detail::hyp2f1_series(a, c - b, c, w);
    }
    if (c > b && b > 0.0) return detail::hyp2f1_euler(a, b, c, z);
    if (c > a && a > 0.0) return detail::hyp2f1_euler(b, a, c, z);
    return std::pow(1.0 - z, -a) * detail::hyp2f1_series(a, c - b, c, w);
}

}  // namespace saginqos
