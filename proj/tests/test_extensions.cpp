#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gjq/extensions.hpp"
#include "gjq/quadrature.hpp"

using namespace gjq;
using std::numbers::pi;

namespace {

double mass(double a, double b) { return std::exp(log_total_mass(a, b)); }

std::vector<double> moments(double a, double b, int kmax) {
    std::vector<double> mu(kmax + 1);
    mu[0] = mass(a, b);
    if (kmax >= 1) mu[1] = (b - a) * mu[0] / (a + b + 2);
    for (int k = 1; k < kmax; ++k) mu[k + 1] = ((b - a) * mu[k] + k * mu[k - 1]) / (a + b + k + 2);
    return mu;
}

}  // namespace

TEST_CASE("lobatto") {
    const int n = 10;
    const auto L = lobatto_rule(0, 0, n);
    const double v = 2.0 / ((n + 1) * (n + 2));
    CHECK(rel_err(L.v_left, v) < 1e-14);
    CHECK(L.v_left == L.v_right);
    const auto S = lobatto_rule(0.7, 0.7, 101);
    CHECK(S.v_left == S.v_right);

    const double a = 0.5, b = -0.3;
    const int m = 50;
    const auto R = lobatto_rule(a, b, m);
    const auto mu = moments(a, b, 60);
    for (int k = 0; k <= 60; ++k) {
        double s = R.v_left * std::pow(-1.0, k) + R.v_right;
        for (int i = 0; i < m; ++i) s += R.interior_weights[i] * std::pow(R.interior_nodes[i], k);
        CHECK(std::abs(s - mu[k]) < 1e-11 * mu[0]);
    }
    for (double w : R.interior_weights) CHECK(w > 0);
}

TEST_CASE("radau n=1 legendre") {
    const auto R = radau_rule(0, 0, 1, FixedEnd::Left);
    REQUIRE(R.interior_nodes.size() == 1);
    CHECK(R.interior_nodes[0] == doctest::Approx(1.0 / 3).epsilon(1e-15));
    const double x = R.interior_nodes[0], w = R.interior_weights[0], v = R.boundary_weight;
    CHECK(v + w == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(-v + w * x == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(v + w * x * x == doctest::Approx(2.0 / 3).epsilon(1e-15));
}

TEST_CASE("radau positivity and duality") {
    for (double a : {-0.6, 0.1, 2.0})
        for (double b : {-0.3, 0.5, 5.0})
            for (int n : {5, 40, 300}) {
                const auto L = radau_rule(a, b, n, FixedEnd::Left);
                const auto R = radau_rule(b, a, n, FixedEnd::Right);
                CHECK(L.boundary_weight > 0);
                CHECK(rel_err(L.boundary_weight, R.boundary_weight) < 1e-13);
                double s = L.boundary_weight;
                for (int i = 0; i < n; ++i) {
                    CHECK(L.interior_weights[i] > 0);
                    CHECK(std::abs(L.interior_nodes[i] + R.interior_nodes[n - 1 - i]) < 1e-15);
                    s += L.interior_weights[i];
                }
                CHECK(rel_err(s, mass(a, b)) < 1e-13);
            }
}

TEST_CASE("radau exactness") {
    const double a = 0.1, b = -0.3;
    const int n = 30;
    const auto R = radau_rule(a, b, n, FixedEnd::Right);
    const auto mu = moments(a, b, 2 * n);
    for (int k = 0; k <= 2 * n; ++k) {
        double s = R.boundary_weight;
        for (int i = 0; i < n; ++i) s += R.interior_weights[i] * std::pow(R.interior_nodes[i], k);
        CHECK(std::abs(s - mu[k]) < 1e-11 * mu[0]);
    }
}

TEST_CASE("barycentric weights") {
    const int n = 50;
    const auto cheb = barycentric_weights(compute_rule(JacobiParams(n, -0.5, -0.5)));
    for (int i = 0; i < n; ++i) {
        const double t = (n - i - 0.5) * pi / n;
        const double expect = ((n - 1 - i) % 2 ? -1.0 : 1.0) * std::sin(t) / std::cos(0.5 * pi / n);
        CHECK(std::abs(cheb.u[i] - expect) < 1e-14);
    }
    const auto bw = barycentric_weights(compute_rule(JacobiParams(100, 0.1, -0.3)));
    CHECK(bw.u.back() > 0);
    double mx = 0;
    for (int i = 0; i < 100; ++i) {
        mx = std::max(mx, std::abs(bw.u[i]));
        if (i) CHECK(bw.u[i] * bw.u[i - 1] < 0);
    }
    CHECK(mx == 1.0);
}

TEST_CASE("barycentric interpolation") {
    auto runge = [](double x) { return 1.0 / (1 + 25 * x * x); };
    auto max_err = [&](int n, double a, double b) {
        const auto bw = barycentric_weights(compute_rule(JacobiParams(n, a, b)));
        std::vector<double> f;
        for (double x : bw.nodes) f.push_back(runge(x));
        double e = 0;
        for (int j = 0; j <= 1000; ++j) {
            const double x = -1 + 2.0 * j / 1000;
            e = std::max(e, std::abs(barycentric_interpolate(bw, f, x) - runge(x)));
        }
        return e;
    };
    const double e50 = max_err(50, 0, 0), e100 = max_err(100, 0, 0), e200 = max_err(200, 0, 0);
    CHECK(e100 < e50 * 1e-3);
    CHECK(e200 < 1e-14 * 100);

    // direct Lagrange form at n=20
    const auto bw = barycentric_weights(compute_rule(JacobiParams(20, 0.1, -0.3)));
    std::vector<double> f;
    for (double x : bw.nodes) f.push_back(std::sin(3 * x));
    for (double x : {-0.93, -0.2, 0.41, 0.999}) {
        double lag = 0;
        for (int i = 0; i < 20; ++i) {
            double l = 1;
            for (int j = 0; j < 20; ++j)
                if (j != i) l *= (x - bw.nodes[j]) / (bw.nodes[i] - bw.nodes[j]);
            lag += l * f[i];
        }
        CHECK(std::abs(barycentric_interpolate(bw, f, x) - lag) < 1e-13);
    }
    CHECK(barycentric_interpolate(bw, f, bw.nodes[7]) == f[7]);

    // scaling u leaves the interpolant unchanged
    auto scaled = bw;
    for (double& u : scaled.u) u *= 3.7;
    CHECK(std::abs(barycentric_interpolate(scaled, f, 0.3) - barycentric_interpolate(bw, f, 0.3)) < 1e-15);
}
