#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "saginqos/math/special.hpp"

using namespace saginqos;

TEST_CASE("Q-function symmetry and reference values") {
    CHECK(q_function(0.0) == Catch::Approx(0.5).margin(1e-15));
    for (double x : {0.5, 1.0, 3.0}) {
        CHECK(q_function(x) + q_function(-x) == Catch::Approx(1.0).margin(1e-14));
    }
    // complementary-error-function oracle (high-precision re-evaluation)
    CHECK(q_function(1.959964) == Catch::Approx(0.024999999096442404).margin(1e-12));
    CHECK(q_function(5.0) == Catch::Approx(2.8665157187919391e-7).epsilon(1e-11));
}

TEST_CASE("Q-function inverse round trip") {
    for (double p : {1e-9, 1e-6, 1e-4, 1e-3, 0.025, 0.3, 0.5, 0.7, 0.999}) {
        CHECK(q_function(q_function_inv(p)) == Catch::Approx(p).epsilon(1e-12));
    }
    CHECK(q_function_inv(0.5) == Catch::Approx(0.0).margin(1e-12));
    CHECK_THROWS_AS(q_function_inv(0.0), std::domain_error);
    CHECK_THROWS_AS(q_function_inv(1.0), std::domain_error);
}

TEST_CASE("gamma function identities") {
    CHECK(gamma_fn(5.0) == Catch::Approx(24.0).epsilon(1e-12));
    CHECK(lower_incomplete_gamma(1.0, std::log(2.0)) == Catch::Approx(0.5).epsilon(1e-12));
    CHECK(gamma_p(1.0, 0.0) == 0.0);
    // mpmath spots
    CHECK(gamma_p(3.7, 2.3) == Catch::Approx(0.25233239584885029).epsilon(1e-12));
    CHECK(gamma_p(12.0, 15.5) == Catch::Approx(0.84621731866031194).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_p(-1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(gamma_p(1.0, -2.0), std::domain_error);
}

TEST_CASE("pochhammer and generalized binomial") {
    CHECK(pochhammer(3.25, 0) == 1.0);
    CHECK(pochhammer(2.0, 3) == Catch::Approx(24.0));  // 2*3*4
    CHECK(binomial_real(5.0, 2) == Catch::Approx(10.0));
    CHECK(binomial_real(3.0, 4) == 0.0);  // integer alpha < k terminates
    CHECK(binomial_real(0.5, 2) == Catch::Approx(-0.125));
}

TEST_CASE("confluent 1F1 with integer first argument") {
    CHECK(hyp1f1_integer(1, 0.7) == Catch::Approx(std::exp(0.7)).epsilon(1e-14));
    CHECK(hyp1f1_integer(3, 0.0) == Catch::Approx(1.0));
    // mpmath: hyp1f1(3, 1, 2.5)
    CHECK(hyp1f1_integer(3, 2.5) == Catch::Approx(111.1652573914192).epsilon(1e-12));
    CHECK_THROWS_AS(hyp1f1_integer(0, 1.0), std::domain_error);
}

TEST_CASE("Gauss 2F1 against identity oracles") {
    CHECK(hyp2f1(1.5, 2.0, 3.0, 0.0) == 1.0);
    // 2F1(1,1;2;z) = -ln(1-z)/z
    const double z = 0.3;
    CHECK(hyp2f1(1.0, 1.0, 2.0, z) ==
          Catch::Approx(-std::log(1.0 - z) / z).epsilon(1e-10));
    CHECK(hyp2f1(1.0, 1.0, 2.0, z) == Catch::Approx(1.1889164797957746).epsilon(1e-10));
    // 2F1(1/2,1/2;3/2;z^2) = asin(z)/z
    CHECK(hyp2f1(0.5, 0.5, 1.5, 0.25) == Catch::Approx(std::asin(0.5) / 0.5).epsilon(1e-10));
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, -2.0, 0.5), std::domain_error);
}

TEST_CASE("Gauss 2F1 on the negative axis") {
    // mpmath spots covering the Pfaff and Euler-integral routes
    CHECK(hyp2f1(1.6, 2.0, 3.3, -7.25) == Catch::Approx(0.093679892048704208).epsilon(1e-10));
    CHECK(hyp2f1(2.3, 3.0, 4.0, -0.5) == Catch::Approx(0.49088987379644857).epsilon(1e-10));
    CHECK(hyp2f1(4.2, 5.0, 6.0, -120.0) == Catch::Approx(9.6157575095166087e-9).epsilon(1e-9));
}
