// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "saginqos/fbc.hpp"
#include "saginqos/montecarlo.hpp"
#include "saginqos/qos.hpp"
#include "saginqos/scenario.hpp"
#include "saginqos/table.hpp"

namespace saginqos {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

namespace detail {

inline void add_check(SuiteResult& suite, const std::string& name, double measured,
                      double tolerance) {
    suite.checks.push_back({name, measured, tolerance, measured <= tolerance});
}

inline std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(n);
    const double llo = std::log10(lo), lhi = std::log10(hi);
    for (int i = 0; i < n; ++i) {
        out.push_back(std::pow(10.0, llo + (lhi - llo) * i / (n - 1.0)));
    }
    return out;
}

}  // namespace detail

struct InterferenceEnsembles {
    std::vector<double> ground;
    std::vector<double> uav;
};

inline InterferenceEnsembles draw_interference_ensembles(const Scenario& sc, std::size_t n_fields,
                                                         int threads) {
    InterferenceEnsembles e;
    e.ground = mc_interference_samples(sc.ground_interference(), n_fields, sc.seed(), threads);
    e.uav = mc_interference_samples(sc.uav_interference(), n_fields, sc.seed() + 1, threads);
    return e;
}

// Analytic PGFL transforms vs the empirical mean of exp(-s I) on a
// log-spaced grid spanning three decades around 1/E[I], per tier.
inline SuiteResult laplace_checks(const Scenario& sc, const InterferenceEnsembles& ens,
                                  double rel_tol = 0.03) {
    SuiteResult suite{"laplace-vs-mc", {}};
    const auto ground = sc.ground_interference();
    const auto uav = sc.uav_interference();
    const double mean_g = interference_cumulant(ground, 1);
    const double mean_u = interference_cumulant(uav, 1);
    const auto scales = detail::log_spaced(1e-2, 1e1, 13);
    for (double scale : scales) {
        const double sg = scale / mean_g;
        const double analytic = laplace_satellite(sg, ground, 1e-9);
        const auto mc = mc_laplace_estimate(ens.ground, sg);
        detail::add_check(suite, "ground s=" + format_double(sg),
                          std::abs(analytic - mc.value) / analytic, rel_tol);
    }
    for (double scale : scales) {
        const double su = scale / mean_u;
        const double analytic = laplace_uav(su, uav, 1e-9);
        const auto mc = mc_laplace_estimate(ens.uav, su);
        detail::add_check(suite, "uav s=" + format_double(su),
                          std::abs(analytic - mc.value) / analytic, rel_tol);
    }
    return suite;
}

// Campbell-theorem mean/variance vs the field ensembles, both tiers.
inline SuiteResult moment_checks(const Scenario& sc, const InterferenceEnsembles& ens,
                                 double rel_tol = 0.02) {
    SuiteResult suite{"moments-vs-mc", {}};
    const auto mg = interference_moments(sc.ground_interference());
    const auto mu = interference_moments(sc.uav_interference());
    const auto sg = sample_stats(ens.ground);
    const auto su = sample_stats(ens.uav);
    detail::add_check(suite, "ground mean", std::abs(sg.mean - mg.mean_w) / mg.mean_w, rel_tol);
    detail::add_check(suite, "ground variance",
                      std::abs(sg.variance - mg.variance_w2) / mg.variance_w2, rel_tol);
    detail::add_check(suite, "uav mean", std::abs(su.mean - mu.mean_w) / mu.mean_w, rel_tol);
    detail::add_check(suite, "uav variance",
                      std::abs(su.variance - mu.variance_w2) / mu.variance_w2, rel_tol);
    return suite;
}

inline SuiteResult validate_laplace_vs_mc(const Scenario& sc, std::size_t n_fields, int threads) {
    return laplace_checks(sc, draw_interference_ensembles(sc, n_fields, threads));
}

inline SuiteResult validate_moments_vs_mc(const Scenario& sc, std::size_t n_fields, int threads) {
    return moment_checks(sc, draw_interference_ensembles(sc, n_fields, threads));
}

// Theorem-style closed form vs nested quadrature of the ramp expectation
// against the same Gamma-mixture SINR law, over a fixed 10-point grid that
// spans unit-scale and physical-scale magnitudes.
inline SuiteResult validate_theorem1_vs_quadrature(double abs_tol = 1e-3) {
    struct GridPoint {
        double omega, b;
        int gamma_s;
        double shape, scale, coeff, rate;
        int blocklength;
    };
    const GridPoint grid[10] = {
        {1.0, 0.25, 3, 2.0, 0.25, 1.0, 1.0, 200},
        {1.0, 0.25, 3, 0.8, 1.0, 1.0, 0.5, 400},
        {0.835, 0.126, 10, 1.2, 0.5, 1.0, 1.5, 200},
        {0.5, 0.1, 2, 3.0, 0.2, 2.0, 0.8, 100},
        {2.0, 0.5, 5, 1.0, 1.0, 5.0, 2.0, 800},
        {1.0, 0.125, 4, 5.0, 0.05, 1.0, 0.25, 200},
        {0.3, 0.05, 8, 0.5, 2.0, 3.0, 1.2, 300},
        {1.5, 0.75, 2, 2.5, 0.4, 1.0, 0.7, 150},
        {1.0, 0.25, 3, 1.23, 8.8e-12, 3.96e-11, 0.1, 200},
        {1.0, 0.25, 3, 10.0, 0.1, 4.0, 1.0, 500},
    };
    SuiteResult suite{"theorem1-vs-quadrature", {}};
    int idx = 0;
    for (const auto& g : grid) {
        ++idx;
        const SatelliteSinrModel model{ShadowedRicianParams(g.omega, g.b, g.gamma_s),
                                       {g.shape, g.scale},
                                       g.coeff};
        const FbcSpec spec{g.blocklength, g.rate, 1e-3};
        const double closed = epsilon_satellite_theorem1(model, spec, 1e-8);
        auto cdf = [&](double x) { return satellite_sinr_cdf_quadrature(x, model, 0.0, 1e-9); };
        const double quad = epsilon_linearized(cdf, spec, 1e-9);
        detail::add_check(suite, "grid point " + std::to_string(idx), std::abs(closed - quad),
                          abs_tol);
    }
    return suite;
}

// |P_out(C^eps(eps)) - eps| for both tiers' closed forms at the scenario's
// operating point.
inline SuiteResult validate_outage_roundtrip(const Scenario& sc, double abs_tol = 1e-3) {
    SuiteResult suite{"outage-roundtrip", {}};
    const auto sr = sc.sat_fading();
    const auto nak = sc.uav_nakagami();
    const LinkCondition sat_link{sc.satellite_signal_coeff(),
                                 interference_cumulant(sc.ground_interference(), 1),
                                 sc.sat_noise_w()};
    const LinkCondition uav_link{sc.uav_signal_coeff(),
                                 interference_cumulant(sc.uav_interference(), 1),
                                 sc.uav_budget().noise_power_w};
    for (double eps : {1e-4, 1e-3, 1e-2}) {
        const double rate_s = outage_capacity_satellite(sr, eps, sat_link);
        const double back_s = outage_probability_satellite(sr, rate_s, sat_link, 1e-12);
        detail::add_check(suite, "satellite eps=" + format_double(eps), std::abs(back_s - eps),
                          abs_tol);
        const double rate_u = outage_capacity_uav(nak, eps, uav_link);
        const double back_u = outage_probability_uav(nak, rate_u, uav_link);
        detail::add_check(suite, "uav eps=" + format_double(eps), std::abs(back_u - eps), abs_tol);
    }
    return suite;
}

// Effective-capacity limit and consistency checks: theta-monotonicity, the
// theta -> 0 first-order limit, and the binomial-series route against
// direct quadrature of the exact expectation over one Gamma surrogate.
inline SuiteResult validate_ec_limits(const Scenario& sc, int threads = 1) {
    (void)threads;
    SuiteResult suite{"ec-limits", {}};
    const auto sr = sc.sat_fading();
    const auto gm = gamma_fit(interference_moments(sc.ground_interference()));
    const double coeff = sc.satellite_signal_coeff();
    const FbcSpec spec = sc.fbc();
    const double eps = spec.target_error;

    // nonincreasing in theta
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (double theta : {1e-4, 1e-3, 1e-2, 1e-1, 1.0}) {
        const double v =
            effective_capacity_satellite_asymptotic(theta, spec, sr, gm, coeff, eps).value;
        if (v > prev * (1.0 + 1e-12)) monotone = false;
        prev = v;
    }
    suite.checks.push_back({"nonincreasing in theta", monotone ? 0.0 : 1.0, 0.5, monotone});

    // theta -> 0 diagnostic: EC(1e-6) within 1% of (1-eps) n E[R]
    const double theta0 = 1e-6;
    auto rate_of = [&](double y) { return std::log2(1.0 + eps * coeff / (sr.alpha() * y)); };
    const double mean_rate = gamma_surrogate_expectation(gm, rate_of, 1e-10);
    const double limit = (1.0 - eps) * spec.blocklength * mean_rate;
    const double ec0 =
        effective_capacity_satellite_asymptotic(theta0, spec, sr, gm, coeff, eps).value;
    detail::add_check(suite, "theta->0 limit", std::abs(ec0 - limit) / limit, 0.01);

    // binomial series vs direct quadrature at integer theta_tilde, over the
    // same noise-dominated surrogate (the moment series has no convergence
    // radius otherwise)
    const FbcSpec uspec{spec.blocklength, spec.rate, 1e-3};
    const NakagamiParams nak{1};
    const double noise_w = 1e-6;
    const GammaInterferenceModel surrogate{2.0, 2.5e-8};  // E[I] = noise/20
    const double theta_int = 3.0 * std::log(2.0) / uspec.blocklength;  // theta_tilde = 3
    std::vector<double> moments;
    for (int l = 1; l <= 4; ++l) moments.push_back(surrogate.raw_moment(l));
    const auto series = effective_capacity_uav_series(theta_int, uspec, 1.0, noise_w, 1e-3, nak,
                                                      moments, 16);
    const auto quad = effective_capacity_uav_quadrature(theta_int, uspec, 1.0, noise_w, 1e-3, nak,
                                                        surrogate, 1e-10);
    suite.checks.push_back({"series terminates at theta_tilde", series.terms_used == 3 ? 0.0 : 1.0,
                            0.5, series.terms_used == 3});
    detail::add_check(suite, "series vs quadrature",
                      std::abs(series.result.value - quad.value) / quad.value, 0.02);
    return suite;
}

inline SuiteResult run_validation_suite(const Scenario& sc, const std::string& id,
                                        std::size_t n_fields, int threads) {
    if (id == "laplace-vs-mc") return validate_laplace_vs_mc(sc, n_fields, threads);
    if (id == "moments-vs-mc") return validate_moments_vs_mc(sc, n_fields, threads);
    if (id == "theorem1-vs-quadrature") return validate_theorem1_vs_quadrature();
    if (id == "outage-roundtrip") return validate_outage_roundtrip(sc);
    if (id == "ec-limits") return validate_ec_limits(sc, threads);
    throw std::invalid_argument("unknown validation suite: " + id);
}

}  // namespace saginqos
