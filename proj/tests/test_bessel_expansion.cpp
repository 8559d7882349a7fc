#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gjq/bessel_expansion.hpp"
#include "gjq/bessel_functions.hpp"
#include "gjq/elementary_expansion.hpp"
#include "test_util.hpp"

using namespace gjq;
using std::numbers::pi;

TEST_CASE("A1") {
    for (double t : {0.05, 0.3, 1.0, 2.0}) CHECK(std::abs(coef_A1(0.5, 0.5, t)) < 1e-15);
    const double a = 0.1, b = -0.3, t = 1e-4;
    CHECK(rel_err(coef_A1(a, b, t) / t, (a * a + 3 * b * b - 1) / 24) < 1e-6);
    for (double th : {0.125, 0.2, 0.35, 0.5}) CHECK(std::abs(coef_A1(a, b, th, 0.0) - coef_A1(a, b, th, 1.0)) < 1e-13);
}

TEST_CASE("coefficient set invariants") {
    const double a = 0.1, b = -0.3, t0 = 0.3;
    BesselCoeffSet c(a, b, t0, kBesselMaxSeries);
    CHECK(c.S(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel_err(c.T(0), coef_A1(a, b, t0)) < 1e-13);
    CHECK(c.Y_at(0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel_err(c.Z_at(0, 0.0), 2 * a + 1 + 2 * t0 * coef_A1(a, b, t0)) < 1e-13);
    CHECK(rel_err(c.theta_corrections(1)[0], coef_A1(a, b, t0)) < 1e-13);
}

TEST_CASE("worked example first node") {
    const double a = 1.0 / 3, b = 0.25;
    const JacobiParams p(100, a, b);
    const double t0 = bessel_zero(a, 1).j / p.kappa();
    CHECK(rel_err(t0, 0.02879787927325625) < 1e-15);
    CHECK(rel_err(std::cos(t0), 0.9995853697308934) < 1e-15);
    BesselCoeffSet c(a, b, t0, kBesselMaxSeries);
    const double t1 = c.theta_corrections(1)[0];
    CHECK(rel_err(t1, -0.8416536425087086e-3) < 1e-13);
    CHECK(std::abs(std::cos(t0 + t1 / (p.kappa() * p.kappa())) - 0.9995853721164185) < 2e-16);
    const auto nd = node_bessel(p, 1);
    CHECK(nd.k == 100);
    CHECK(std::abs(nd.x - 0.9995853721163790) < 2e-16);
}

TEST_CASE("polynomial values") {
    const JacobiParams p(100, 0.1, -0.3);
    CHECK(rel_err(eval_poly_bessel(p, testutil::oracle("theta_double_0.05")),
                  testutil::oracle("jacobi_100_0.1_-0.3_theta_0.05")) < 1e-13);
    CHECK(rel_err(eval_poly_bessel(p, 0.7), testutil::oracle("jacobi_100_0.1_-0.3_theta_0.7")) < 1e-13);
    try {
        eval_poly_bessel(p, pi - 0.1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DomainTooCloseToEndpoint);
    }
    const int n = 100;
    const JacobiParams cheb(n, -0.5, -0.5);
    const double c = std::exp(std::lgamma(n + 0.5) - std::lgamma(n + 1.0)) / std::sqrt(pi);
    for (double t : {0.3, 1.0}) CHECK(rel_err(eval_poly_bessel(cheb, t), c * std::cos(n * t)) < 1e-13);
}

TEST_CASE("U derivative matches finite difference") {
    BesselExpansion B(JacobiParams(100, 0.1, -0.3));
    for (double t : {0.03, 0.2, 0.6}) {
        const double h = 1e-6;
        const double fd = (B.eval_U(t + h) - B.eval_U(t - h)) / (2 * h);
        const double d = B.eval_U_derivative(t);
        CHECK(std::abs(fd - d) <= 1e-7 * std::abs(d) + 1e-7);
    }
}

TEST_CASE("bessel nodes") {
    const int n = 100;
    const JacobiParams p(n, 0.5, 0.5);
    for (int m = 1; m <= 20; ++m) CHECK(rel_err(node_bessel(p, m).x, std::cos(m * pi / (n + 1))) < 1e-15);
    CHECK_THROWS_AS(node_bessel(p, 0), Error);
    try {
        node_bessel(p, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
}

TEST_CASE("bessel and elementary agree on the overlap") {
    for (int n : {100, 1000})
        for (double a : {0.1, -0.6, 2.0}) {
            const JacobiParams p(n, a, -0.3);
            ElementaryExpansion E(p);
            for (int m = 1; m <= n / 2; ++m) {
                const double t0 = E.theta0(n + 1 - m);
                if (t0 < 0.5) continue;
                if (t0 > 1.2) break;
                CHECK(std::abs(node_bessel(p, m).x - E.node(n + 1 - m).x) < 1e-12);
            }
        }
}
