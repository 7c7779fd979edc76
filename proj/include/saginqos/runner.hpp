// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "saginqos/association.hpp"
#include "saginqos/fbc.hpp"
#include "saginqos/montecarlo.hpp"
#include "saginqos/qos.hpp"
#include "saginqos/scenario.hpp"
#include "saginqos/table.hpp"
#include "saginqos/validation.hpp"
#include "saginqos/version.hpp"

namespace saginqos {

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

inline const std::vector<std::string>& metric_ids() {
    static const std::vector<std::string> ids = {
        "association-prob", "epsilon-sat",        "epsilon-uav", "outage-prob",
        "outage-capacity",  "effective-capacity", "delay-violation", "laplace", "moments"};
    return ids;
}

inline const std::vector<std::string>& validation_ids() {
    static const std::vector<std::string> ids = {"laplace-vs-mc", "moments-vs-mc",
                                                 "theorem1-vs-quadrature", "outage-roundtrip",
                                                 "ec-limits"};
    return ids;
}

namespace detail {

inline void stamp_meta(ResultTable& t, const Scenario& sc, const std::string& metric) {
    t.set_meta("tool", std::string("saginqos ") + kVersion);
    t.set_meta("metric", metric);
    t.set_meta("scenario_hash", sc.hash_hex());
    t.set_meta("seed", std::to_string(sc.seed()));
}

inline std::vector<double> sweep_values(const Scenario& sc) {
    if (sc.get("sweep.parameter").empty()) return {};
    return sc.get_list("sweep.values");
}

// Evaluates row(point_scenario) for every sweep value (or once when no
// sweep axis is set). The sweep value is prepended to each row.
inline ResultTable sweep_table(const Scenario& sc, const std::string& metric,
                               std::vector<std::string> value_columns,
                               const std::function<std::vector<double>(const Scenario&)>& row) {
    const auto values = sweep_values(sc);
    std::vector<std::string> cols;
    cols.push_back(values.empty() ? "point" : sc.get("sweep.parameter"));
    for (auto& c : value_columns) cols.push_back(std::move(c));
    ResultTable table(cols);
    stamp_meta(table, sc, metric);
    if (values.empty()) {
        std::vector<double> r{0.0};
        const auto vals = row(sc);
        r.insert(r.end(), vals.begin(), vals.end());
        table.add_row(r);
        return table;
    }
    for (double v : values) {
        Scenario point = sc;
        point.set(sc.get("sweep.parameter"), v);
        point.validate();
        std::vector<double> r{v};
        const auto vals = row(point);
        r.insert(r.end(), vals.begin(), vals.end());
        table.add_row(r);
    }
    return table;
}

// Mean-interference SINR proxy of the satellite link.
inline double satellite_mean_sinr(const Scenario& sc) {
    const double mean_i = interference_cumulant(sc.ground_interference(), 1);
    return sc.satellite_signal_coeff() * sc.sat_fading().mean_power() /
           (mean_i + sc.sat_noise_w());
}

inline SatelliteSinrModel satellite_sinr_model(const Scenario& sc) {
    return {sc.sat_fading(), gamma_fit(interference_moments(sc.ground_interference())),
            sc.satellite_signal_coeff()};
}

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

// Definition-1 decoding error by simulation: fields + fadings -> SINR
// samples -> mean Q(...). Used when mc.oracle is enabled.
inline McEstimate mc_epsilon_satellite(const Scenario& sc, int threads) {
    const auto model = sc.ground_interference();
    const auto sr = sc.sat_fading();
    const auto spec = sc.fbc();
    const double coeff = sc.satellite_signal_coeff();
    const double noise = sc.sat_noise_w();
    const std::size_t n = sc.trials();
    std::vector<double> q(n);
    parallel_for(n, threads, [&](std::size_t i) {
        const auto field = sample_field(model.tier, model.region, derive_seed(sc.seed(), i, 10));
        const double interference =
            mc_interference(field, model.budget, model.fading, derive_seed(sc.seed(), i, 11));
        RandomStream rng(derive_seed(sc.seed(), i, 13));
        const double gamma = coeff * sample_shadowed_rician(sr, rng) / (interference + noise);
        const double sample[1] = {gamma};
        q[i] = epsilon_normal(spec, sample);
    });
    const auto stats = sample_stats(q);
    return {stats.mean, std::sqrt(stats.variance / static_cast<double>(n))};
}

// Outage-event frequency of the UAV link at the serving condition.
inline McEstimate mc_epsilon_uav(const Scenario& sc, int threads) {
    const auto env = sc.uav_interference();
    const auto spec = sc.fbc();
    const double coeff = sc.uav_signal_coeff();
    const double noise = env.budget.noise_power_w;
    const double threshold = spec.sinr_threshold();
    const std::size_t n = sc.trials();
    std::vector<std::uint8_t> outage(n, 0);
    parallel_for(n, threads, [&](std::size_t i) {
        auto field = sample_field(env.tier, env.region, derive_seed(sc.seed(), i, 10));
        field = thin_by_los(field, env.los, derive_seed(sc.seed(), i, 12));
        const double interference =
            mc_interference(field, env.budget, env.fading, derive_seed(sc.seed(), i, 11));
        RandomStream rng(derive_seed(sc.seed(), i, 13));
        const double gamma = coeff * rng.nakagami_power(env.fading.m) / (interference + noise);
        outage[i] = gamma < threshold ? 1 : 0;
    });
    std::size_t count = 0;
    for (auto v : outage) count += v;
    const double p = static_cast<double>(count) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

}  // namespace detail

inline ResultTable run_metric(const Scenario& sc, const std::string& metric, int threads = 1) {
    sc.validate();
    const bool with_mc = sc.get_bool("mc.oracle");

    if (metric == "association-prob") {
        // density sweeps run coupled so the estimated curve is monotone
        if (sc.get("sweep.parameter") == "uav.density") {
            const auto densities = sc.get_list("sweep.values");
            const auto probs = association_probability_sweep(sc.association(), sc.region(),
                                                             densities, sc.trials(), sc.seed(),
                                                             threads);
            ResultTable table({"uav.density", "p_satellite", "p_uav"});
            detail::stamp_meta(table, sc, metric);
            for (std::size_t i = 0; i < densities.size(); ++i) {
                table.add_row({densities[i], probs[i].satellite, probs[i].uav});
            }
            return table;
        }
        return detail::sweep_table(sc, metric, {"p_satellite", "p_uav"},
                                   [&](const Scenario& point) -> std::vector<double> {
                                       const auto p = association_probability(
                                           point.association(), point.region(), point.trials(),
                                           point.seed(), threads);
                                       return {p.satellite, p.uav};
                                   });
    }
    if (metric == "epsilon-sat") {
        std::vector<std::string> cols = {"epsilon_theorem1", "epsilon_asymptotic"};
        if (with_mc) {
            cols.push_back("epsilon_mc");
            cols.push_back("mc_stderr");
        }
        return detail::sweep_table(sc, metric, cols,
                                   [&](const Scenario& point) -> std::vector<double> {
                                       const auto model = detail::satellite_sinr_model(point);
                                       const auto spec = point.fbc();
                                       std::vector<double> out = {
                                           epsilon_satellite_theorem1(model, spec, point.tol()),
                                           epsilon_satellite_asymptotic(model, spec)};
                                       if (with_mc) {
                                           const auto mc = detail::mc_epsilon_satellite(point, threads);
                                           out.push_back(mc.value);
                                           out.push_back(mc.std_error);
                                       }
                                       return out;
                                   });
    }
    if (metric == "epsilon-uav") {
        std::vector<std::string> cols = {"epsilon"};
        if (with_mc) {
            cols.push_back("epsilon_mc");
            cols.push_back("mc_stderr");
        }
        return detail::sweep_table(
            sc, metric, cols, [&](const Scenario& point) -> std::vector<double> {
                std::vector<double> out = {epsilon_uav(point.fbc(), point.uav_signal_coeff(),
                                                       point.uav_budget().noise_power_w,
                                                       point.uav_interference(), 1e-9)};
                if (with_mc) {
                    const auto mc = detail::mc_epsilon_uav(point, threads);
                    out.push_back(mc.value);
                    out.push_back(mc.std_error);
                }
                return out;
            });
    }
    if (metric == "outage-prob") {
        return detail::sweep_table(
            sc, metric, {"p_out_satellite", "p_out_uav"},
            [&](const Scenario& point) -> std::vector<double> {
                const LinkCondition sat{point.satellite_signal_coeff(),
                                        interference_cumulant(point.ground_interference(), 1),
                                        point.sat_noise_w()};
                const LinkCondition uav{point.uav_signal_coeff(),
                                        interference_cumulant(point.uav_interference(), 1),
                                        point.uav_budget().noise_power_w};
                const double rate = point.fbc().rate;
                return {outage_probability_satellite(point.sat_fading(), rate, sat),
                        outage_probability_uav(point.uav_nakagami(), rate, uav)};
            });
    }
    if (metric == "outage-capacity") {
        return detail::sweep_table(
            sc, metric, {"c_eps_satellite", "c_eps_uav"},
            [&](const Scenario& point) -> std::vector<double> {
                const LinkCondition sat{point.satellite_signal_coeff(),
                                        interference_cumulant(point.ground_interference(), 1),
                                        point.sat_noise_w()};
                const LinkCondition uav{point.uav_signal_coeff(),
                                        interference_cumulant(point.uav_interference(), 1),
                                        point.uav_budget().noise_power_w};
                const double eps = point.fbc().target_error;
                return {outage_capacity_satellite(point.sat_fading(), eps, sat),
                        outage_capacity_uav(point.uav_nakagami(), eps, uav)};
            });
    }
    if (metric == "effective-capacity") {
        return detail::sweep_table(
            sc, metric, {"ec_satellite", "ec_uav", "ec_best"},
            [&](const Scenario& point) -> std::vector<double> {
                const auto spec = point.fbc();
                const double eps = spec.target_error;
                const double theta = point.qos().qos_exponent;
                const auto gm = gamma_fit(interference_moments(point.ground_interference()));
                const double ec_sat =
                    effective_capacity_satellite_asymptotic(theta, spec, point.sat_fading(), gm,
                                                            point.satellite_signal_coeff(), eps)
                        .value;
                const double ec_uav =
                    effective_capacity_uav(theta, spec, point.uav_signal_coeff(),
                                           point.uav_budget().noise_power_w, eps,
                                           point.uav_interference())
                        .value;
                return {ec_sat, ec_uav, std::max(ec_sat, ec_uav)};
            });
    }
    if (metric == "delay-violation") {
        return detail::sweep_table(
            sc, metric, {"rate_bits", "p_dv"},
            [&](const Scenario& point) -> std::vector<double> {
                const auto spec = point.fbc();
                const double rate = fbc_max_rate(detail::satellite_mean_sinr(point),
                                                 spec.blocklength, spec.target_error);
                FbcSpec at_rate = spec;
                at_rate.rate = std::max(rate, 1e-12);
                return {rate, delay_violation_probability(point.qos(), at_rate)};
            });
    }
    if (metric == "laplace") {
        std::vector<std::string> cols = {"s_scale",     "s_ground", "laplace_ground",
                                         "s_uav",       "laplace_uav"};
        if (with_mc) {
            cols.insert(cols.end(),
                        {"mc_ground", "mc_ground_stderr", "mc_uav", "mc_uav_stderr"});
        }
        ResultTable table(cols);
        detail::stamp_meta(table, sc, metric);
        const auto ground = sc.ground_interference();
        const auto uav = sc.uav_interference();
        const double mean_g = interference_cumulant(ground, 1);
        const double mean_u = interference_cumulant(uav, 1);
        InterferenceEnsembles ens;
        if (with_mc) ens = draw_interference_ensembles(sc, sc.trials(), threads);
        for (double scale : detail::log_spaced(1e-2, 1e1, 13)) {
            const double sg = scale / mean_g;
            const double su = scale / mean_u;
            std::vector<double> row = {scale, sg, laplace_satellite(sg, ground, 1e-9), su,
                                       laplace_uav(su, uav, 1e-9)};
            if (with_mc) {
                const auto eg = mc_laplace_estimate(ens.ground, sg);
                const auto eu = mc_laplace_estimate(ens.uav, su);
                row.insert(row.end(), {eg.value, eg.std_error, eu.value, eu.std_error});
            }
            table.add_row(row);
        }
        return table;
    }
    if (metric == "moments") {
        std::vector<std::string> cols = {"tier", "mean_w", "variance_w2"};
        if (with_mc) cols.insert(cols.end(), {"mc_mean_w", "mc_variance_w2"});
        ResultTable table(cols);
        detail::stamp_meta(table, sc, metric);
        const auto mg = interference_moments(sc.ground_interference());
        const auto mu = interference_moments(sc.uav_interference());
        std::vector<double> row_g = {0.0, mg.mean_w, mg.variance_w2};
        std::vector<double> row_u = {1.0, mu.mean_w, mu.variance_w2};
        if (with_mc) {
            const auto ens = draw_interference_ensembles(sc, sc.trials(), threads);
            const auto sg = sample_stats(ens.ground);
            const auto su = sample_stats(ens.uav);
            row_g.insert(row_g.end(), {sg.mean, sg.variance});
            row_u.insert(row_u.end(), {su.mean, su.variance});
        }
        table.add_row(row_g);
        table.add_row(row_u);
        return table;
    }
    throw UsageError("unknown metric id: " + metric);
}

inline ResultTable run_validation(const Scenario& sc, const std::string& suite_id,
                                  int threads = 1) {
    sc.validate();
    const auto suite = run_validation_suite(sc, suite_id, sc.trials(), threads);
    ResultTable table({"check", "measured", "tolerance", "pass"});
    detail::stamp_meta(table, sc, std::string("validate:") + suite_id);
    for (std::size_t i = 0; i < suite.checks.size(); ++i) {
        const auto& c = suite.checks[i];
        table.add_row({static_cast<double>(i), c.measured, c.tolerance, c.pass ? 1.0 : 0.0});
    }
    table.set_meta("all_pass", suite.all_pass() ? "1" : "0");
    return table;
}

// ---- canned figure scenarios ---------------------------------------------

struct FigureResult {
    std::string name;
    ResultTable table;
};

namespace detail {

inline Scenario figure_base(std::uint64_t seed) {
    Scenario sc;
    sc.set("mc.seed", static_cast<double>(seed));
    return sc;
}

}  // namespace detail

// Figure datasets regenerate the simulation-section scenarios: association
// probability vs density, UAV decoding error vs density/gain/altitude,
// outage capacities, delay-violation sweeps, and epsilon-effective capacity
// with and without the UAV tier.
inline FigureResult run_figure(const std::string& fig, std::uint64_t seed, int threads = 1) {
    if (fig == "fig2") {
        Scenario sc = detail::figure_base(seed);
        sc.set("region.radius_m", 3000.0);
        sc.set("sweep.parameter", std::string("uav.density"));
        sc.set("sweep.values", std::string("1e-6,2.5e-6,5e-6,1e-5,1.5e-5,2e-5"));
        return {fig, run_metric(sc, "association-prob", threads)};
    }
    if (fig == "fig3") {
        // decoding error vs density and antenna gain; the serving link is the
        // mean nearest neighbor at the pinned flight altitude, so densifying
        // the tier shortens the serving link faster than it adds interference
        Scenario sc = detail::figure_base(seed);
        sc.set("fbc.rate", 0.1);
        sc.set("uav.altitude_fixed_m", 100.0);
        ResultTable table({"altitude_m", "uav.density", "antenna_gain", "epsilon"});
        detail::stamp_meta(table, sc, "figure:fig3");
        for (double gain : {10.0, 100.0, 1000.0}) {
            for (double lambda : {1e-6, 2.5e-6, 5e-6, 7.5e-6, 1e-5}) {
                Scenario point = sc;
                point.set("uav.antenna_gain", gain);
                point.set("uav.density", lambda);
                const double eps =
                    epsilon_uav(point.fbc(), point.uav_signal_coeff(),
                                point.uav_budget().noise_power_w, point.uav_interference());
                table.add_row({100.0, lambda, gain, eps});
            }
        }
        return {fig, table};
    }
    if (fig == "fig4") {
        Scenario sc = detail::figure_base(seed);
        ResultTable table({"altitude_m", "epsilon_target", "c_eps_uav"});
        detail::stamp_meta(table, sc, "figure:fig4");
        for (double z : {100.0, 200.0, 300.0, 400.0, 500.0}) {
            for (double eps : {1e-4, 1e-3}) {
                Scenario point = sc;
                point.set("uav.altitude_fixed_m", z);
                const LinkCondition link{point.uav_signal_coeff(),
                                         interference_cumulant(point.uav_interference(), 1),
                                         point.uav_budget().noise_power_w};
                table.add_row({z, eps, outage_capacity_uav(point.uav_nakagami(), eps, link)});
            }
        }
        return {fig, table};
    }
    if (fig == "fig5") {
        Scenario sc = detail::figure_base(seed);
        sc.set("sweep.parameter", std::string("fbc.target_error"));
        sc.set("sweep.values", std::string("1e-4,3e-4,1e-3,3e-3,1e-2,3e-2,1e-1"));
        return {fig, run_metric(sc, "outage-capacity", threads)};
    }
    if (fig == "fig6") {
        Scenario sc = detail::figure_base(seed);
        ResultTable table({"ground.density", "blocklength", "rate_bits", "p_dv"});
        detail::stamp_meta(table, sc, "figure:fig6");
        for (double lambda : {5e-6, 1e-5, 1.5e-5, 2e-5, 2.5e-5}) {
            for (int n : {100, 200, 400}) {
                Scenario point = sc;
                point.set("ground.density", lambda);
                point.set("fbc.blocklength", static_cast<double>(n));
                const auto spec = point.fbc();
                const double rate = fbc_max_rate(detail::satellite_mean_sinr(point), n,
                                                 spec.target_error);
                FbcSpec at_rate = spec;
                at_rate.rate = std::max(rate, 1e-12);
                table.add_row({lambda, static_cast<double>(n), rate,
                               delay_violation_probability(point.qos(), at_rate)});
            }
        }
        return {fig, table};
    }
    if (fig == "fig7") {
        Scenario sc = detail::figure_base(seed);
        sc.set("sweep.parameter", std::string("qos.exponent"));
        sc.set("sweep.values", std::string("1e-3,2e-3,5e-3,1e-2,2e-2,5e-2,1e-1"));
        return {fig, run_metric(sc, "delay-violation", threads)};
    }
    if (fig == "fig8") {
        // sparse tier with the serving UAV hovering overhead
        Scenario sc = detail::figure_base(seed);
        sc.set("uav.density", 1e-7);
        sc.set("uav.altitude_fixed_m", 100.0);
        sc.set("serving.uav_distance_m", 100.0);
        ResultTable table({"blocklength", "theta", "epsilon_target", "ec_uav"});
        detail::stamp_meta(table, sc, "figure:fig8");
        for (int n : {100, 200, 400, 600, 800, 1000}) {
            for (double theta : {0.01, 0.001}) {
                for (double eps : {1e-4, 1e-3}) {
                    Scenario point = sc;
                    point.set("fbc.blocklength", static_cast<double>(n));
                    point.set("fbc.target_error", eps);
                    point.set("qos.exponent", theta);
                    const double ec =
                        effective_capacity_uav(theta, point.fbc(), point.uav_signal_coeff(),
                                               point.uav_budget().noise_power_w, eps,
                                               point.uav_interference())
                            .value;
                    table.add_row({static_cast<double>(n), theta, eps, ec});
                }
            }
        }
        return {fig, table};
    }
    if (fig == "fig9") {
        // epsilon-EC with and without the UAV tier: sparse overhead UAV
        // deployment against a low-elevation satellite slant range
        Scenario sc = detail::figure_base(seed);
        sc.set("uav.density", 1e-7);
        sc.set("uav.altitude_fixed_m", 100.0);
        sc.set("serving.uav_distance_m", 100.0);
        sc.set("sat.distance_m", 1500e3);
        ResultTable table({"blocklength", "theta", "ec_without_uav", "ec_with_uav", "ratio"});
        detail::stamp_meta(table, sc, "figure:fig9");
        for (int n : {100, 200, 400, 600, 800, 1000}) {
            for (double theta : {0.01, 0.001}) {
                Scenario point = sc;
                point.set("fbc.blocklength", static_cast<double>(n));
                point.set("qos.exponent", theta);
                const auto spec = point.fbc();
                const double eps = spec.target_error;
                const auto gm = gamma_fit(interference_moments(point.ground_interference()));
                const double ec_sat =
                    effective_capacity_satellite_asymptotic(theta, spec, point.sat_fading(), gm,
                                                            point.satellite_signal_coeff(), eps)
                        .value;
                const double ec_uav =
                    effective_capacity_uav(theta, spec, point.uav_signal_coeff(),
                                           point.uav_budget().noise_power_w, eps,
                                           point.uav_interference())
                        .value;
                const double with_uav = std::max(ec_sat, ec_uav);
                table.add_row({static_cast<double>(n), theta, ec_sat, with_uav,
                               with_uav / ec_sat});
            }
        }
        return {fig, table};
    }
    throw UsageError("unknown figure id: " + fig + " (expected fig2..fig9)");
}

inline const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"fig2", "fig3", "fig4", "fig5",
                                                 "fig6", "fig7", "fig8", "fig9"};
    return ids;
}

}  // namespace saginqos
