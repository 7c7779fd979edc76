#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "saginqos/fbc.hpp"
#include "saginqos/scenario.hpp"

using namespace saginqos;

namespace {

SatelliteSinrModel unit_model() {
    return {ShadowedRicianParams(1.0, 0.25, 3), {2.0, 0.25}, 1.0};
}

}  // namespace

TEST_CASE("linearization constants") {
    const FbcSpec spec{100, 1.0, 1e-3};
    const auto c = linearization_constants(spec);
    CHECK(c.theta == Catch::Approx(1.0 / (2.0 * M_PI * std::sqrt(3.0))).epsilon(1e-14));
    CHECK(c.gamma0 == Catch::Approx(1.0));
    // half width pi sqrt(3) / 10 at n = 100
    CHECK(c.zeta_up - c.gamma0 == Catch::Approx(M_PI * std::sqrt(3.0) / 10.0).epsilon(1e-13));
    CHECK(0.5 * (c.zeta_low + c.zeta_up) == Catch::Approx(c.gamma0).epsilon(1e-13));
    CHECK(c.zeta_up - c.zeta_low ==
          Catch::Approx(1.0 / (c.theta * std::sqrt(100.0))).epsilon(1e-13));
    CHECK(c.zeta_low < c.gamma0);
    CHECK(c.gamma0 < c.zeta_up);
    // width shrinks with blocklength
    const auto wide = linearization_constants({100, 1.0, 1e-3});
    const auto narrow = linearization_constants({10000, 1.0, 1e-3});
    CHECK(narrow.zeta_up - narrow.zeta_low < 0.11 * (wide.zeta_up - wide.zeta_low));
    // clamp keeps the lower knot nonnegative
    const auto clamped = linearization_constants({4, 0.3, 1e-3});
    CHECK(clamped.zeta_low == 0.0);
}

TEST_CASE("psi ramp") {
    const FbcSpec spec{400, 1.0, 1e-3};
    const auto c = linearization_constants(spec);
    CHECK(psi(c.gamma0, c, spec) == Catch::Approx(0.5));
    CHECK(psi(c.zeta_low, c, spec) == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(psi(c.zeta_up, c, spec) == Catch::Approx(0.0).margin(1e-12));
    CHECK(psi(2.1, c, spec) == 0.0);  // beyond the upper knot at n = 400
    // in-ramp value from the scalar formula
    CHECK(psi(1.1, c, spec) ==
          Catch::Approx(0.5 - c.theta * 20.0 * (1.1 - 1.0)).epsilon(1e-13));
    double prev = 2.0;
    for (double g = 0.0; g < 3.0; g += 0.05) {
        const double v = psi(g, c, spec);
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("epsilon_normal basics") {
    const FbcSpec spec{200, 2.0, 1e-3};
    // all samples at capacity: Q(0) = 1/2
    const std::vector<double> at_capacity(5, 3.0);  // C(3) = 2 bits
    CHECK(epsilon_normal(spec, at_capacity) == Catch::Approx(0.5).epsilon(1e-12));
    // far above capacity: vanishing error
    const std::vector<double> strong{1e9};
    CHECK(epsilon_normal(spec, strong) < 1e-12);
    // zero SINR contributes a sure error
    const std::vector<double> dead{0.0};
    CHECK(epsilon_normal(spec, dead) == 1.0);
    // scalar oracle at 10 dB
    const std::vector<double> ten_db{10.0};
    const auto cd = capacity_dispersion(10.0);
    const double expected =
        q_function(std::sqrt(200.0) * (cd.capacity_bits - 2.0) / std::sqrt(cd.dispersion));
    CHECK(epsilon_normal(spec, ten_db) == Catch::Approx(expected).epsilon(1e-13));
    CHECK_THROWS_AS(epsilon_normal(spec, std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("epsilon_linearized on point masses") {
    const FbcSpec spec{200, 1.0, 1e-3};
    const auto c = linearization_constants(spec);
    auto step_at = [](double x0) {
        return [x0](double x) { return x >= x0 ? 1.0 : 0.0; };
    };
    CHECK(epsilon_linearized(step_at(c.gamma0), spec, 1e-10) == Catch::Approx(0.5).margin(1e-9));
    CHECK(epsilon_linearized(step_at(c.zeta_up + 0.2), spec, 1e-10) ==
          Catch::Approx(0.0).margin(1e-9));
    CHECK(epsilon_linearized(step_at(std::max(0.0, c.zeta_low - 0.2)), spec, 1e-10) ==
          Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("mixture cdf: closed series equals the quadrature route") {
    const auto model = unit_model();
    for (double x : {0.05, 0.3, 1.0, 4.0, 20.0}) {
        const double series = satellite_sinr_cdf_series(x, model, 1e-12);
        const double quad = satellite_sinr_cdf_quadrature(x, model, 0.0, 1e-10);
        CHECK(series == Catch::Approx(quad).margin(1e-7));
    }
    CHECK(satellite_sinr_cdf_series(0.0, model) == 0.0);
    // distribution limit via the quadrature route; the series slows to a
    // crawl as its argument tends to one and reports the cap instead
    CHECK(satellite_sinr_cdf_quadrature(5e4, model, 0.0, 1e-9) ==
          Catch::Approx(1.0).margin(1e-5));
    CHECK_THROWS_AS(satellite_sinr_cdf_series(5e4, model, 1e-12), std::runtime_error);
}

TEST_CASE("mixture cdf differentiates to the finite-l density") {
    const auto model = unit_model();
    for (double x : {0.2, 0.9, 2.5}) {
        const double h = 1e-5;
        const double deriv = (satellite_sinr_cdf_series(x + h, model, 1e-12) -
                              satellite_sinr_cdf_series(x - h, model, 1e-12)) /
                             (2.0 * h);
        CHECK(deriv == Catch::Approx(satellite_sinr_pdf_series(x, model)).epsilon(1e-6));
    }
}

TEST_CASE("theorem closed form equals the ramp quadrature") {
    const auto model = unit_model();
    for (int n : {100, 400}) {
        const FbcSpec spec{n, 1.0, 1e-3};
        const double closed = epsilon_satellite_theorem1(model, spec, 1e-9);
        auto cdf = [&](double x) { return satellite_sinr_cdf_quadrature(x, model, 0.0, 1e-10); };
        const double quad = epsilon_linearized(cdf, spec, 1e-10);
        CHECK(closed == Catch::Approx(quad).margin(1e-5));
    }
}

TEST_CASE("theorem closed form stays a probability over a random sweep") {
    RandomStream rng(123);
    for (int i = 0; i < 20; ++i) {
        const SatelliteSinrModel model{
            ShadowedRicianParams(0.2 + 2.0 * rng.uniform01(), 0.05 + 0.5 * rng.uniform01(),
                                 1 + static_cast<int>(rng.uniform01() * 9)),
            {0.2 + 5.0 * rng.uniform01(), 0.05 + 2.0 * rng.uniform01()},
            0.2 + 5.0 * rng.uniform01()};
        const FbcSpec spec{static_cast<int>(50 + rng.uniform01() * 900),
                           0.1 + 2.0 * rng.uniform01(), 1e-3};
        const double eps = epsilon_satellite_theorem1(model, spec, 1e-8);
        CHECK(eps >= 0.0);
        CHECK(eps <= 1.0);
    }
}

TEST_CASE("decoding error shrinks with blocklength and grows with rate") {
    const auto model = unit_model();
    // rates below the density mode (the rising flank), where narrowing the
    // ramp can only help
    for (double rate : {0.05, 0.1, 0.2}) {
        double prev = 1.0;
        for (int n : {100, 200, 400, 800}) {
            const double eps = epsilon_satellite_theorem1(model, {n, rate, 1e-3}, 1e-9);
            CHECK(eps <= prev + 1e-12);
            prev = eps;
        }
    }
    double prev = 0.0;
    for (double rate : {0.25, 0.5, 1.0, 2.0}) {
        const double eps = epsilon_satellite_theorem1(model, {200, rate, 1e-3}, 1e-9);
        CHECK(eps >= prev - 1e-12);
        prev = eps;
    }
}

TEST_CASE("asymptotic form scales with the linear-cdf prefactor") {
    // small prefactor regime: epsilon is exactly a * gamma0
    const FbcSpec spec{400, 0.5, 1e-3};
    const SatelliteSinrModel m1{ShadowedRicianParams(1.0, 0.25, 3), {2.0, 1e-3}, 1.0};
    SatelliteSinrModel m2 = m1;
    m2.interference.scale *= 2.0;
    const double e1 = epsilon_satellite_asymptotic(m1, spec);
    const double e2 = epsilon_satellite_asymptotic(m2, spec);
    CHECK(e2 == Catch::Approx(2.0 * e1).epsilon(1e-9));
    const double a = m1.fading.alpha() * m1.interference.shape * m1.interference.scale;
    CHECK(e1 == Catch::Approx(a * spec.sinr_threshold()).epsilon(1e-12));
}

TEST_CASE("asymptotic form approaches the theorem value at high SNR") {
    // interference-dominated, small epsilon regime
    const SatelliteSinrModel model{ShadowedRicianParams(1.0, 0.25, 3), {2.0, 0.25}, 40.0};
    const FbcSpec spec{400, 0.5, 1e-3};
    const double closed = epsilon_satellite_theorem1(model, spec, 1e-10);
    const double asym = epsilon_satellite_asymptotic(model, spec);
    CHECK(closed > 1e-3);
    CHECK(std::abs(asym - closed) / closed < 0.10);
}

TEST_CASE("eta constants") {
    CHECK(eta_alzer(1) == Catch::Approx(1.0));
    CHECK(eta_alzer(2) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(eta_alzer(3) == Catch::Approx(1.6509636244473133).epsilon(1e-14));
    CHECK_THROWS_AS(eta_alzer(0), std::invalid_argument);
}

TEST_CASE("uav decoding error limits") {
    Scenario sc;
    sc.set("uav.density", 0.0);
    sc.set("uav.antenna_gain", 1.0);
    const auto env = sc.uav_interference();
    const double coeff = 2e-9;
    const double noise = 4e-11;
    // rate -> 0 telescopes the alternating sum to zero
    CHECK(epsilon_uav({200, 1e-9, 1e-3}, coeff, noise, env) == Catch::Approx(0.0).margin(1e-9));
    // lambda = 0, Gamma_U = 1: the Rayleigh outage in closed form
    const FbcSpec spec{200, 0.5, 1e-3};
    const double expected =
        -std::expm1(-eta_alzer(1) * spec.sinr_threshold() * noise / coeff);
    CHECK(epsilon_uav(spec, coeff, noise, env) == Catch::Approx(expected).epsilon(1e-10));
}

TEST_CASE("uav decoding error matches the outage event frequency") {
    Scenario sc;
    sc.set("uav.density", 5e-6);
    sc.set("uav.altitude_fixed_m", 150.0);
    sc.set("fbc.rate", 0.1);
    const auto env = sc.uav_interference();
    const double coeff = sc.uav_signal_coeff();
    const double noise = env.budget.noise_power_w;
    const auto spec = sc.fbc();
    const double analytic = epsilon_uav(spec, coeff, noise, env);
    const double thr = spec.sinr_threshold();
    const std::size_t n = 20000;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto field = sample_field(env.tier, env.region, derive_seed(55, i, 10));
        field = thin_by_los(field, env.los, derive_seed(55, i, 12));
        const double interference =
            mc_interference(field, env.budget, env.fading, derive_seed(55, i, 11));
        RandomStream rng(derive_seed(55, i, 13));
        const double gamma = coeff * rng.nakagami_power(env.fading.m) / (interference + noise);
        count += gamma < thr ? 1 : 0;
    }
    const double mc = static_cast<double>(count) / n;
    const double se = std::sqrt(mc * (1.0 - mc) / n);
    CHECK(std::abs(analytic - mc) < 2.5 * se);
}

TEST_CASE("uav error with deterministic interference is the outage probability") {
    // with I pinned, the alternating Laplace sum is the binomial expansion of
    // the exponential-bound CDF power
    const NakagamiParams m3{3};
    const FbcSpec spec{300, 0.8, 1e-3};
    const LinkCondition link{3e-9, 6e-10, 4e-11};
    Scenario sc;
    sc.set("uav.density", 0.0);
    sc.set("uav.nakagami_m", 3.0);
    const double via_sum =
        epsilon_uav(spec, link.signal_coeff_w, link.interference_w + link.noise_w,
                    sc.uav_interference());
    const double via_power = outage_probability_uav(m3, spec.rate, link);
    CHECK(via_sum == Catch::Approx(via_power).epsilon(1e-12));
}

TEST_CASE("outage probabilities at the trivial points") {
    const ShadowedRicianParams sr(1.0, 0.25, 3);
    const LinkCondition link{1.0, 0.5, 0.1};
    CHECK(outage_probability_satellite(sr, 1e-12, link) < 1e-9);
    CHECK(outage_probability_uav({1}, 1e-12, link) < 1e-9);
    // exponent argument ln 2 gives exactly one half
    const double rate = 1.0;
    const LinkCondition tuned{(std::exp2(rate) - 1.0) / std::log(2.0), 1.0, 0.0};
    CHECK(outage_probability_uav({1}, rate, tuned) == Catch::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("satellite outage matches the fading-draw frequency") {
    const ShadowedRicianParams sr(1.0, 0.25, 3);
    const FbcSpec spec{200, 0.8, 1e-3};
    const LinkCondition link{2.0, 0.9, 0.05};
    const double analytic = outage_probability_satellite(sr, spec.rate, link, 1e-10);
    RandomStream rng(99);
    const double thr = spec.sinr_threshold() * link.threshold_scale();
    const std::size_t n = 200000;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += sample_shadowed_rician(sr, rng) < thr ? 1 : 0;
    const double mc = static_cast<double>(count) / n;
    const double se = std::sqrt(mc * (1.0 - mc) / n);
    CHECK(std::abs(analytic - mc) < 2.5 * se);
}

TEST_CASE("outage capacity closed forms") {
    const ShadowedRicianParams sr(1.0, 0.25, 3);
    const LinkCondition link{5e-10, 2e-10, 1e-12};
    // epsilon -> 0 collapses the satellite capacity
    CHECK(outage_capacity_satellite(sr, 1e-14, link) < 1e-10);
    // uav with Gamma_U = 1 and eps = 1 - 1/e: inner log term is exactly 1
    const double eps_e = 1.0 - std::exp(-1.0);
    const LinkCondition ulink{4e-10, 1e-10, 4e-11};
    CHECK(outage_capacity_uav({1}, eps_e, ulink) ==
          Catch::Approx(std::log2(1.0 + ulink.signal_coeff_w /
                                            (1.0 * (ulink.interference_w + ulink.noise_w))))
              .epsilon(1e-12));
    CHECK_THROWS_AS(outage_capacity_uav({1}, 0.0, ulink), std::invalid_argument);
    CHECK_THROWS_AS(outage_capacity_satellite(sr, 1.0, link), std::invalid_argument);
}

TEST_CASE("outage round trip at the operating point") {
    const ShadowedRicianParams sr(1.0, 0.25, 3);
    Scenario sc;
    const LinkCondition sat{sc.satellite_signal_coeff(),
                            interference_cumulant(sc.ground_interference(), 1),
                            sc.sat_noise_w()};
    const LinkCondition uav{sc.uav_signal_coeff(),
                            interference_cumulant(sc.uav_interference(), 1),
                            sc.uav_budget().noise_power_w};
    for (double eps : {1e-4, 1e-3, 1e-2}) {
        const double cs = outage_capacity_satellite(sr, eps, sat);
        CHECK(std::abs(outage_probability_satellite(sr, cs, sat, 1e-12) - eps) < 1e-3);
        const double cu = outage_capacity_uav(sc.uav_nakagami(), eps, uav);
        CHECK(std::abs(outage_probability_uav(sc.uav_nakagami(), cu, uav) - eps) < 1e-3);
    }
}

TEST_CASE("outage capacity grows with epsilon and transmit power") {
    const ShadowedRicianParams sr(1.0, 0.25, 3);
    LinkCondition link{5e-10, 2e-10, 1e-12};
    double prev_s = 0.0, prev_u = 0.0;
    for (double eps : {1e-4, 1e-3, 1e-2, 1e-1}) {
        const double cs = outage_capacity_satellite(sr, eps, link);
        const double cu = outage_capacity_uav({2}, eps, link);
        CHECK(cs > prev_s);
        CHECK(cu > prev_u);
        prev_s = cs;
        prev_u = cu;
    }
    LinkCondition stronger = link;
    stronger.signal_coeff_w *= 4.0;
    CHECK(outage_capacity_satellite(sr, 1e-3, stronger) >
          outage_capacity_satellite(sr, 1e-3, link));
    CHECK(outage_capacity_uav({2}, 1e-3, stronger) > outage_capacity_uav({2}, 1e-3, link));
}

TEST_CASE("generic cdf inversion round trip") {
    const auto model = unit_model();
    auto cdf = [&](double x) { return satellite_sinr_cdf_series(x, model, 1e-12); };
    for (double eps : {1e-3, 1e-2, 0.2}) {
        const double c = outage_capacity_from_cdf(cdf, eps);
        CHECK(cdf(std::exp2(c) - 1.0) == Catch::Approx(eps).epsilon(1e-8));
    }
}

TEST_CASE("normal-approximation maximal rate inverts the error target") {
    for (double gamma : {1.0, 10.0, 100.0}) {
        for (int n : {100, 500}) {
            const double eps = 1e-3;
            const double rate = fbc_max_rate(gamma, n, eps);
            const auto cd = capacity_dispersion(gamma);
            const double err =
                q_function(std::sqrt(static_cast<double>(n)) * (cd.capacity_bits - rate) /
                           std::sqrt(cd.dispersion));
            CHECK(err == Catch::Approx(eps).epsilon(1e-9));
        }
        CHECK(fbc_max_rate(gamma, 400, 1e-3) > fbc_max_rate(gamma, 100, 1e-3));
    }
    CHECK(fbc_max_rate(0.0, 100, 1e-3) == 0.0);
}

TEST_CASE("linearized and normal-approximation errors agree on the mixture") {
    Scenario sc;
    const SatelliteSinrModel model{sc.sat_fading(),
                                   gamma_fit(interference_moments(sc.ground_interference())),
                                   sc.satellite_signal_coeff()};
    const FbcSpec spec{200, 0.5, 1e-3};
    auto cdf = [&](double x) { return satellite_sinr_cdf_series(x, model, 1e-10); };
    const double lin = epsilon_linearized(cdf, spec, 1e-9);
    RandomStream rng(404);
    std::vector<double> draws(200000);
    for (auto& g : draws) {
        g = model.signal_coeff_w * sample_shadowed_rician(model.fading, rng) /
            rng.gamma(model.interference.shape, model.interference.scale);
    }
    CHECK(std::abs(lin - epsilon_normal(spec, draws)) < 0.02);
}
