#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gjq/bessel_functions.hpp"
#include "gjq/core.hpp"
#include "test_util.hpp"

using namespace gjq;
using std::numbers::pi;

TEST_CASE("bessel j values") {
    for (double z : {1.0, 5.0, 20.0}) CHECK(rel_err(bessel_j(0.5, z), std::sqrt(2 / (pi * z)) * std::sin(z)) < 1e-15);
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(0.3, 0.0) == 0.0);
    CHECK(rel_err(bessel_j(0.25, 15.42), testutil::oracle("bessel_j_0.25_15.42")) < 1e-14);
}

TEST_CASE("near-zero series") {
    const double u = testutil::oracle("bessel_zero_0.25_5");
    const char* names[] = {"bessel_j_0.25_j5_plus_1e-1", "bessel_j_0.25_j5_plus_1e-2", "bessel_j_0.25_j5_plus_1e-3",
                           "bessel_j_0.25_j5_plus_1e-4", "bessel_j_0.25_j5_plus_1e-5"};
    double h = 0.1;
    for (const char* nm : names) {
        CHECK(rel_err(bessel_j_near_zero(0.25, u, h), testutil::oracle(nm)) < 1e-14);
        h /= 10;
    }
    CHECK(rel_err(bessel_j_near_zero(0.25, u, 1e-3, 4), testutil::oracle("bessel_j_0.25_j5_plus_1e-3")) < 5e-15);
    CHECK(bessel_j_near_zero(0.25, u, 0.0) == 0.0);
    CHECK_THROWS_AS(bessel_j_near_zero(0.25, 15.0, 0.01), Error);
    for (double hh : {0.01, -0.05, 0.3})
        CHECK(std::abs(bessel_j_near_zero(0.25, u, hh) - bessel_j(0.25, u + hh)) < 1e-12);
}

TEST_CASE("zeros against references") {
    const struct {
        double nu;
        int m;
        const char* name;
    } cases[] = {{0.25, 5, "bessel_zero_0.25_5"}, {0, 1, "bessel_zero_0_1"},    {1, 3, "bessel_zero_1_3"},
                 {3, 1, "bessel_zero_3_1"},       {6, 1, "bessel_zero_6_1"},    {0.3, 10, "bessel_zero_0.3_10"},
                 {5.5, 7, "bessel_zero_5.5_7"}};
    for (const auto& c : cases) CHECK(rel_err(bessel_zero(c.nu, c.m).j, testutil::oracle(c.name)) < 1e-14);
}

TEST_CASE("half-integer zeros") {
    for (int m = 1; m <= 40; ++m) {
        CHECK(testutil::ulps(bessel_zero(0.5, m).j, m * pi) <= 1);
        CHECK(testutil::ulps(bessel_zero(-0.5, m).j, (m - 0.5) * pi) <= 1);
    }
}

TEST_CASE("zeros interlace") {
    for (double nu : {-0.5, 0.0, 0.3, 1.0, 3.0})
        for (int m = 1; m <= 50; ++m) {
            const double a = bessel_zero(nu, m).j, b = bessel_zero(nu + 1, m).j, c = bessel_zero(nu, m + 1).j;
            CHECK(a < b);
            CHECK(b < c);
        }
}

TEST_CASE("mcmahon error decays") {
    CHECK(mcmahon_error(0.3, 100) < mcmahon_error(0.3, 10));
    CHECK(std::abs(mcmahon_zero(0.3, 200) - bessel_zero(0.3, 200).j) < 1e-12);
}
