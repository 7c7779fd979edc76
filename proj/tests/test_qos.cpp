#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "saginqos/qos.hpp"
#include "saginqos/scenario.hpp"

using namespace saginqos;

TEST_CASE("delay-bound violation probability") {
    const FbcSpec spec{200, 2.0, 1e-3};
    // vanishing exponent leaves the nonempty-queue probability
    CHECK(delay_violation_probability({1e-15, 5.0, 0.7, 0.0}, spec) ==
          Catch::Approx(0.7).epsilon(1e-10));
    // delta=1, theta=0.01, R=2, D = 100 ln 10 -> 1e-2
    CHECK(delay_violation_probability({0.01, 100.0 * std::log(10.0), 1.0, 0.0}, spec) ==
          Catch::Approx(1e-2).epsilon(1e-12));
    // strictly decreasing in theta, rate and delay bound
    double prev = 2.0;
    for (double theta : {1e-3, 3e-3, 1e-2, 3e-2}) {
        const double p = delay_violation_probability({theta, 100.0, 1.0, 0.0}, spec);
        CHECK(p < prev);
        prev = p;
    }
    prev = 2.0;
    for (double rate : {0.5, 1.0, 2.0, 4.0}) {
        FbcSpec s2 = spec;
        s2.rate = rate;
        const double p = delay_violation_probability({0.01, 100.0, 1.0, 0.0}, s2);
        CHECK(p < prev);
        prev = p;
    }
    prev = 2.0;
    for (double bound : {50.0, 100.0, 200.0, 400.0}) {
        const double p = delay_violation_probability({0.01, bound, 1.0, 0.0}, spec);
        CHECK(p < prev);
        prev = p;
    }
    CHECK_THROWS_AS(delay_violation_probability({0.0, 100.0, 1.0, 0.0}, spec),
                    std::invalid_argument);
}

TEST_CASE("effective capacity closed cases") {
    const FbcSpec spec{200, 1.5, 1e-3};
    // epsilon = 1 zeroes the value
    CHECK(effective_capacity_deterministic(0.01, spec, 3.0, 1.0).value ==
          Catch::Approx(0.0).margin(1e-12));
    // deterministic rate and epsilon = 0: exactly n R
    const auto ec = effective_capacity_deterministic(0.01, spec, 1.5, 0.0);
    CHECK(ec.value == Catch::Approx(200.0 * 1.5).epsilon(1e-12));
    CHECK(ec.theta_tilde == Catch::Approx(0.01 * 200.0 / std::log(2.0)).epsilon(1e-14));
    // the sampled path agrees with the deterministic one
    const auto mc = effective_capacity(
        0.01, spec, [](RandomStream&) { return 1.5; }, 0.0, 1000, 7);
    CHECK(mc.value == Catch::Approx(ec.value).epsilon(1e-12));
    CHECK(mc.method == EcMethod::exact_mc);
}

TEST_CASE("effective capacity is nonincreasing in theta and Jensen-bounded") {
    const FbcSpec spec{200, 1.0, 1e-3};
    auto sampler = [](RandomStream& rng) { return 0.5 + rng.uniform01(); };
    double prev = std::numeric_limits<double>::infinity();
    for (double theta : {1e-4, 1e-3, 1e-2, 1e-1, 1.0}) {
        const auto ec = effective_capacity(theta, spec, sampler, 1e-3, 50000, 11);
        CHECK(ec.value <= prev + 1e-9);
        CHECK(ec.value <= 200.0 * 1.5 * (1.0 + 1e-12));  // n E[R]
        prev = ec.value;
    }
}

TEST_CASE("theta -> 0 first-order limit") {
    const FbcSpec spec{200, 1.0, 1e-3};
    const double eps = 1e-3;
    auto sampler = [](RandomStream& rng) { return 0.5 + rng.uniform01(); };
    const auto ec = effective_capacity(1e-6, spec, sampler, eps, 400000, 13);
    const double limit = (1.0 - eps) * 200.0 * 1.0;  // E[R] = 1 for 0.5 + U(0,1)
    CHECK(std::abs(ec.value - limit) / limit < 0.01);
}

TEST_CASE("satellite asymptotic EC matches sampling over the same surrogate") {
    Scenario sc;
    const auto sr = sc.sat_fading();
    const auto gm = gamma_fit(interference_moments(sc.ground_interference()));
    const double coeff = sc.satellite_signal_coeff();
    const FbcSpec spec{200, 0.5, 1e-3};
    const double theta = 0.01;
    const double eps = 1e-3;
    const auto by_quad =
        effective_capacity_satellite_asymptotic(theta, spec, sr, gm, coeff, eps);
    auto sampler = [&](RandomStream& rng) {
        const double y = rng.gamma(gm.shape, gm.scale);
        return std::log2(1.0 + eps * coeff / (sr.alpha() * y));
    };
    const auto by_mc = effective_capacity(theta, spec, sampler, eps, 1000000, 17);
    CHECK(std::abs(by_quad.value - by_mc.value) / by_mc.value < 0.02);
    CHECK(by_quad.method == EcMethod::asymptotic_quadrature);
}

TEST_CASE("uav EC series termination and collapse") {
    const FbcSpec spec{200, 0.5, 1e-3};
    const NakagamiParams nak{1};
    const GammaInterferenceModel gm{2.0, 2.5e-8};
    std::vector<double> moments;
    for (int l = 1; l <= 6; ++l) moments.push_back(gm.raw_moment(l));
    // integer theta_tilde terminates exactly
    const double theta3 = 3.0 * std::log(2.0) / spec.blocklength;
    const auto series =
        effective_capacity_uav_series(theta3, spec, 1.0, 1e-6, 1e-3, nak, moments, 16);
    CHECK(series.series_converged);
    CHECK(series.terms_used == 3);
    // zero moments collapse the series to the l = 0 term
    const std::vector<double> no_interference(6, 0.0);
    const double eps = 1e-3, noise = 1e-6;
    const auto collapsed = effective_capacity_uav_series(theta3, spec, 1.0, noise, eps, nak,
                                                         no_interference, 16);
    const double kfac = -std::log(1.0 - eps) / eta_alzer(1);
    const double tt = theta_tilde(theta3, spec);
    const double scalar =
        -std::log(eps + (1.0 - eps) * std::pow(noise / kfac, tt)) / theta3;
    CHECK(collapsed.result.value == Catch::Approx(scalar).epsilon(1e-12));
    // lambda = 0 in the environment path gives the exact no-averaging value
    Scenario sc;
    sc.set("uav.density", 0.0);
    const double coeff = 2e-9, unoise = 4e-11;
    const auto ec0 = effective_capacity_uav(theta3, spec, coeff, unoise, eps,
                                            sc.uav_interference());
    const double kfac0 = -coeff * std::log(1.0 - eps) / eta_alzer(1);
    const double exact =
        -std::log(eps + (1.0 - eps) * std::pow(1.0 + kfac0 / unoise, -tt)) / theta3;
    CHECK(ec0.value == Catch::Approx(exact).epsilon(1e-12));
}

TEST_CASE("uav EC falls back to quadrature when the series has no radius") {
    Scenario sc;
    sc.set("uav.density", 1e-6);
    sc.set("uav.altitude_fixed_m", 100.0);
    const FbcSpec spec{200, 0.5, 1e-3};
    bool fallback = false;
    const auto ec = effective_capacity_uav(0.001, spec, 7e-9, 4e-11, 1e-3,
                                           sc.uav_interference(), 16, &fallback);
    CHECK(fallback);
    CHECK(ec.value > 0.0);
    CHECK(ec.method == EcMethod::asymptotic_quadrature);
}

TEST_CASE("series route agrees with direct quadrature on one surrogate") {
    // same Gamma law on both routes; remaining gap is the dropped unity in
    // the high-SINR form
    const FbcSpec spec{200, 0.5, 1e-3};
    const NakagamiParams nak{1};
    const GammaInterferenceModel gm{2.0, 2.5e-8};
    std::vector<double> moments;
    for (int l = 1; l <= 4; ++l) moments.push_back(gm.raw_moment(l));
    const double theta3 = 3.0 * std::log(2.0) / spec.blocklength;
    const auto series =
        effective_capacity_uav_series(theta3, spec, 1.0, 1e-6, 1e-3, nak, moments, 16);
    const auto quad =
        effective_capacity_uav_quadrature(theta3, spec, 1.0, 1e-6, 1e-3, nak, gm, 1e-10);
    CHECK(std::abs(series.result.value - quad.value) / quad.value < 0.02);
}

TEST_CASE("adding the uav tier never lowers the best-tier EC") {
    Scenario sc;
    sc.set("uav.density", 1e-7);
    sc.set("uav.altitude_fixed_m", 100.0);
    sc.set("serving.uav_distance_m", 100.0);
    const FbcSpec spec = sc.fbc();
    const double theta = 0.001, eps = 1e-3;
    const auto gm = gamma_fit(interference_moments(sc.ground_interference()));
    const double ec_sat = effective_capacity_satellite_asymptotic(
                              theta, spec, sc.sat_fading(), gm, sc.satellite_signal_coeff(), eps)
                              .value;
    const double ec_uav =
        effective_capacity_uav(theta, spec, sc.uav_signal_coeff(),
                               sc.uav_budget().noise_power_w, eps, sc.uav_interference())
            .value;
    CHECK(std::max(ec_sat, ec_uav) >= ec_sat);
}
