#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gjq/coefficient_table.hpp"
#include "gjq/elementary_expansion.hpp"

using namespace gjq;

TEST_CASE("embedded table") {
    const auto& t = CoefficientTable::elementary();
    CHECK(CoefficientTable::embedded_hash_verified());
    CHECK(t.hash().size() == 16);
    CHECK(t.max_theta_order() >= 7);
    CHECK(t.max_series_order() >= 13);
    CHECK(t.find("u0") != nullptr);
    CHECK(t.find("nonexistent") == nullptr);
}

TEST_CASE("coefficient identities") {
    const double grid[] = {-0.6, -0.3, 0.1, 1.0 / 3, 2.0, 5.0};
    for (double a : grid)
        for (double b : grid) {
            ElemCoeffSet c(CoefficientTable::elementary(), a, b, ExpansionOrders::full());
            for (double t : {0.3, 0.9, 1.5, 2.4}) {
                const double x = std::cos(t), s = std::sin(t);
                CHECK(c.u_even[0](x, s) == doctest::Approx(1.0).epsilon(1e-15));
                CHECK(c.m_even[0](x, s) == doctest::Approx(1.0).epsilon(1e-15));
                const double v1 = c.v_odd[0](x, s);
                CHECK(c.n_odd[0](x, s) == doctest::Approx(v1).epsilon(1e-13).scale(1.0));
                CHECK(c.theta_corr[0](x, s) == doctest::Approx(-v1).epsilon(1e-13).scale(1.0));
            }
        }
}

namespace {

// Sum of the absolute terms before alpha and beta are substituted, the scale of the
// rounding error in the bound coefficient.
double magnitude(const CoefficientEntry& e, double a, double b, double x, double s) {
    auto part = [&](const std::vector<CoefficientEntry::Term>& terms) {
        double m = 0.0;
        for (const auto& t : terms)
            m += std::abs(t.value) * std::pow(std::abs(x), t.xpow) * std::pow(std::abs(a), t.apow) *
                 std::pow(std::abs(b), t.bpow);
        return m;
    };
    return (part(e.A) + s * part(e.B)) / std::pow(s, e.K);
}

}  // namespace

TEST_CASE("chebyshev coefficients vanish") {
    const auto& table = CoefficientTable::elementary();
    for (double t : {0.4, 1.1, 2.0}) {
        const double x = std::cos(t), s = std::sin(t);
        for (const auto& e : table.entries()) {
            if (e.name == "u0" || e.name == "m0" || e.name[0] == 'm' || e.name[0] == 'n') continue;
            const BoundCoefficient f(e, -0.5, -0.5);
            INFO(e.name, " theta=", t);
            CHECK(std::abs(f(x, s)) <= 1e-14 * magnitude(e, -0.5, -0.5, x, s));
        }
    }
}

TEST_CASE("parse small table") {
    const char* text =
        "version 1\n"
        "hash 0123456789abcdef\n"
        "coef u0 0\n"
        "A 0 0 0 1.0 1/1\n"
        "end\n"
        "coef v1 1\n"
        "A 1 1 0 5.0e-1 1/2\n"
        "B 0 0 1 2.5e-1 1/4\n"
        "end\n";
    const auto t = CoefficientTable::parse(text);
    REQUIRE(t.find("u0") != nullptr);
    const BoundCoefficient u0(*t.find("u0"), 0.2, 0.3);
    CHECK(u0(0.5, std::sqrt(0.75)) == 1.0);
    CHECK(t.version() == 1);
    CHECK(t.hash() == "0123456789abcdef");
    // (x alpha / 2 + sin(t) beta / 4) / sin(t)
    const BoundCoefficient v1(*t.find("v1"), 0.2, 0.4);
    const double x = 0.6, s = 0.8;
    CHECK(v1(x, s) == doctest::Approx((0.6 * 0.2 / 2 + 0.8 * 0.4 / 4) / 0.8).epsilon(1e-15));
}

TEST_CASE("malformed table") {
    CHECK_THROWS(CoefficientTable::parse("not a table"));
}
