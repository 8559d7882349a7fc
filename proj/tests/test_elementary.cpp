#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gjq/elementary_expansion.hpp"
#include "gjq/quadrature.hpp"
#include "test_util.hpp"

using namespace gjq;
using std::numbers::pi;

TEST_CASE("front factor") {
    CHECK(g_front_factor(JacobiParams(100, 0.0, 0.3)) == doctest::Approx(1.0).epsilon(1e-16));
    CHECK(testutil::ulps(g_front_factor(JacobiParams(100, 1.0 / 3, 0.25)), testutil::oracle("g_front_100_1/3_1/4")) <= 2);
    const JacobiParams p(10, 2, 1);
    CHECK(rel_err(g_front_factor_series(p), g_front_factor_direct(p)) < 1e-13);
    CHECK(rel_err(g_front_factor(p), testutil::oracle("g_front_10_2_1")) < 1e-14);
    const JacobiParams big(100000, 0.1, -0.3);
    CHECK(rel_err(g_front_factor_series(big), g_front_factor_direct(big)) < 1e-12);
}

TEST_CASE("polynomial values") {
    const JacobiParams p(100, 0.1, -0.3);
    CHECK(rel_err(eval_poly_elementary(p, testutil::oracle("theta_double_pi/2")),
                  testutil::oracle("jacobi_100_0.1_-0.3_theta_pi/2")) < 1e-13);
    CHECK(rel_err(eval_poly_elementary(p, 0.7), testutil::oracle("jacobi_100_0.1_-0.3_theta_0.7")) < 1e-13);
    CHECK_THROWS_AS(eval_poly_elementary(p, 0.1), Error);
    try {
        eval_poly_elementary(p, pi - 0.1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DomainTooCloseToEndpoint);
    }
}

TEST_CASE("chebyshev closed form") {
    const int n = 10;
    const JacobiParams p(n, -0.5, -0.5);
    const double c = std::exp(std::lgamma(n + 0.5) - std::lgamma(n + 1.0)) / std::sqrt(pi);
    CHECK(rel_err(eval_poly_elementary(p, 0.7), c * std::cos(n * 0.7)) < 1e-14);
    for (int k = 1; k <= n; ++k) {
        const auto nd = node_elementary(JacobiParams(100, -0.5, -0.5), 50 + k);
        CHECK(std::abs(nd.eps) < 1e-20);
        CHECK(std::abs(nd.x - std::cos((100 - nd.k + 0.5) * pi / 100)) < 2.3e-16);
    }
}

TEST_CASE("reflection symmetry") {
    const JacobiParams p(101, 0.1, -0.3);
    for (double t : {0.6, 1.0, 1.4, 2.0}) {
        const double a = eval_poly_elementary(p, t);
        const double b = -eval_poly_elementary(p.swapped(), pi - t);
        CHECK(std::abs(a - b) <= 1e-14 * std::abs(a) + 1e-15);
    }
}

TEST_CASE("worked example W and cos chi") {
    const JacobiParams p(100, 0.1, -0.3);
    ElementaryExpansion E(p);
    const auto nd = E.node(50);
    const auto w = E.eval_W_shifted(50, nd.eps);
    CHECK(std::abs(w.W) < 1e-14);
    CHECK(std::abs(E.eval_W_direct(nd.theta).W) < 1e-12);
}

TEST_CASE("cos chi vanishes at eps 0 when n - k is even") {
    const JacobiParams p(100, 0.1, -0.3);
    ElementaryExpansion E(p);
    const int k = 60;
    const double t0 = E.theta0(k), x = std::cos(t0), s = std::sin(t0), kap = p.kappa();
    double V = 0.0, kp = 1.0 / kap;
    for (const auto& v : E.coefficients().v_odd) {
        V += v(x, s) * kp;
        kp /= kap * kap;
    }
    const auto w = E.eval_W_shifted(k, 0.0);
    CHECK(std::abs(std::abs(w.W) - std::abs(V)) < 1e-15);
}

TEST_CASE("elementary node basics") {
    const JacobiParams p(101, 0.7, 0.7);
    const auto mid = node_elementary(p, 51);
    CHECK(mid.x == 0.0);
    CHECK(mid.theta == pi / 2);
    CHECK_THROWS_AS(node_elementary(JacobiParams(100, 0.1, -0.3), 0), Error);
    try {
        node_elementary(JacobiParams(100, 0.1, -0.3), 100);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BranchMisuse);
    }
}

TEST_CASE("inversion residual and order stability") {
    const double grid[] = {-0.6, 0.1, 1.0 / 3, 2.0, 5.0};
    for (double a : grid)
        for (double b : grid) {
            const JacobiParams p(200, a, b);
            ElementaryExpansion E(p);
            ExpansionOrders two = ExpansionOrders::full();
            two.elementary_theta = 1;
            ElementaryExpansion E1(p, two);
            const double k4 = std::pow(p.kappa(), 4);
            for (int k = 60; k <= 140; k += 20) {
                const auto nd = E.node(k);
                CHECK(std::abs(E.eval_W_shifted(k, nd.eps).W) < 1e-13);
                CHECK(std::abs(E1.node(k).theta - nd.theta) * k4 <= 10.0 * (1 + a * a + b * b));
            }
        }
}
