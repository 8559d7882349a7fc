#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gjq/core.hpp"
#include "gjq/quadrature.hpp"
#include "test_util.hpp"

using namespace gjq;

TEST_CASE("kappa") {
    CHECK(kappa(JacobiParams(100, 0.1, -0.3)) == 100.4);
    CHECK(kappa(JacobiParams(100, 1.0 / 3, 0.25)) == doctest::Approx(100.79166666666667).epsilon(1e-15));
    CHECK(kappa(JacobiParams(1, -0.5, -0.5)) == 1.0);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(JacobiParams(0, 0, 0), Error);
    CHECK_THROWS_AS(JacobiParams(10, -1.0, 0), Error);
    CHECK_THROWS_AS(JacobiParams(10, 0, -1.5), Error);
    CHECK_THROWS_AS(JacobiParams(10, NAN, 0), Error);
    try {
        JacobiParams(10, -2.0, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Domain);
    }
    CHECK(JacobiParams(100, 5, -0.3).accuracy_guaranteed());
    CHECK_FALSE(JacobiParams(100, 5.5, 0).accuracy_guaranteed());
}

TEST_CASE("total mass") {
    CHECK(log_total_mass(0, 0) == doctest::Approx(std::log(2.0)).epsilon(1e-16));
    CHECK(log_total_mass(-0.5, -0.5) == doctest::Approx(std::log(std::numbers::pi)).epsilon(1e-16));
    CHECK(rel_err(log_total_mass(0.1, -0.3), testutil::oracle("log_total_mass_0.1_-0.3")) < 1e-15);
    CHECK(rel_err(std::exp(log_total_mass(0.1, -0.3)), testutil::oracle("total_mass_quad_0.1_-0.3")) < 1e-15);
}

TEST_CASE("gauss mass constant") {
    CHECK(gauss_mass_constant(JacobiParams(1, 0, 0)) == doctest::Approx(std::log(2.0)).epsilon(1e-16));
    CHECK(rel_err(gauss_mass_constant(JacobiParams(100, 0.1, -0.3)), testutil::oracle("log_gauss_mass_100_0.1_-0.3")) <
          1e-14);
    CHECK(std::isfinite(gauss_mass_constant(JacobiParams(1000000, 0.1, -0.3))));
    // small n against the plain gamma product
    const double a = 1.0 / 3, b = 0.25;
    const int n = 5;
    const double direct = std::pow(2.0, a + b + 1) * std::tgamma(n + a + 1) * std::tgamma(n + b + 1) /
                          (std::tgamma(n + 1.0) * std::tgamma(n + a + b + 1));
    CHECK(rel_err(std::exp(gauss_mass_constant(JacobiParams(n, a, b))), direct) < 2e-15);
}

TEST_CASE("log gamma ratio") {
    CHECK(rel_err(log_gamma_ratio(10.0, 0.5), std::lgamma(10.5) - std::lgamma(10.0)) < 1e-14);
    CHECK(std::isfinite(log_gamma_ratio(1e9, 0.3)));
    CHECK(rel_err(log_gamma_ratio(1e9, 0.3), 0.3 * std::log(1e9)) < 1e-9);
}

TEST_CASE("reflect twice") {
    const JacobiParams p(100, 0.1, -0.3);
    const auto rule = compute_rule(p);
    for (const auto& nd : rule.theta_nodes) {
        const auto back = reflect(p.swapped(), reflect(p, nd));
        CHECK(back.k == nd.k);
        CHECK(back.x == nd.x);
        CHECK(back.branch == nd.branch);
        CHECK(std::abs(back.theta - nd.theta) <= 4e-16);
    }
}

TEST_CASE("reflect maps k and x") {
    const JacobiParams p(7, 0.3, 0.2);
    ThetaNode nd;
    nd.k = 6;
    nd.theta = 0.4;
    nd.theta0 = 0.39;
    nd.eps = 0.01;
    nd.x = std::cos(0.4);
    nd.branch = Branch::Elementary;
    const auto r = reflect(p, nd);
    CHECK(r.k == 2);
    CHECK(r.x == -nd.x);
    CHECK(r.branch == Branch::ReflectedElementary);
    CHECK(r.theta == doctest::Approx(std::numbers::pi - 0.4).epsilon(1e-16));
}
