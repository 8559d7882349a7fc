#include "gjq/bessel_functions.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>

#include "gjq/core.hpp"

namespace gjq {

namespace {
constexpr int kMaxTerms = 30;
constexpr double kTail = 1e-18;
}  // namespace

double bessel_j(double nu, double z) {
    if (!(nu >= -1.0)) throw Error(ErrorCode::Domain, "bessel_j: nu must be >= -1");
    if (!(z >= 0.0)) throw Error(ErrorCode::Domain, "bessel_j: z must be >= 0");
    if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    return boost::math::cyl_bessel_j(nu, z);
}

BesselPair bessel_pair_near_zero(double alpha, double u, double j1, double h, int terms) {
    if (h == 0.0) return {0.0, j1};
    const double lam = 1.0 + h / u;
    const double w = -h * (2.0 * u + h) / (2.0 * u);
    // r_m = w^{m-1} J_{alpha+m}(u) / m!;  f_m = w r_m
    double r_prev = 0.0, r = j1;
    double s0 = r, s1 = r;  // sum r_m (m >= 1), sum m r_m
    const int last = terms > 0 ? terms + 1 : kMaxTerms;
    int quiet = 0;
    for (int m = 1; m < last; ++m) {
        const double r_next = ((2.0 * m * (alpha + m) * w / u) * r - w * w * r_prev) / (m * (m + 1.0));
        r_prev = r;
        r = r_next;
        s0 += r;
        s1 += (m + 1.0) * r;
        if (terms == 0) {
            quiet = (std::fabs((m + 1.0) * r) <= kTail * std::fabs(s1)) ? quiet + 1 : 0;
            if (quiet == 2) break;
        }
    }
    const double la = std::pow(lam, alpha);
    return {la * w * s0, la * lam * s1};
}

double bessel_j_near_zero(double alpha, double u, double h, int terms) {
    const double j1 = bessel_j(alpha + 1.0, u);
    const double j0 = bessel_j(alpha, u);
    if (std::fabs(j0) > 1e-13 * std::fabs(j1) * std::max(1.0, u))
        throw Error(ErrorCode::NotAZero, "bessel_j_near_zero: u is not a zero of J_alpha");
    return bessel_pair_near_zero(alpha, u, j1, h, terms).j_alpha;
}

double mcmahon_zero(double nu, int m) {
    const double mu = 4.0 * nu * nu;
    const double a = (m + 0.5 * nu - 0.25) * std::numbers::pi;
    const double e = 8.0 * a, e2 = e * e;
    const double t1 = (mu - 1.0) / e;
    const double t2 = 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e2);
    const double t3 = 32.0 * (mu - 1.0) * ((83.0 * mu - 982.0) * mu + 3779.0) / (15.0 * e * e2 * e2);
    return a - t1 - t2 - t3;
}

double mcmahon_error(double nu, int m) {
    const double mu = 4.0 * nu * nu;
    const double a = (m + 0.5 * nu - 0.25) * std::numbers::pi;
    const double e = 8.0 * a, e2 = e * e;
    const double poly = ((6949.0 * mu - 153855.0) * mu + 1585743.0) * mu - 6277237.0;
    return std::fabs(64.0 * (mu - 1.0) * poly / (105.0 * e * e2 * e2 * e2));
}

BesselZero bessel_zero(double nu, int m, int m0) {
    if (!(nu > -1.0)) throw Error(ErrorCode::Domain, "bessel_zero: nu must be > -1");
    if (m < 1) throw Error(ErrorCode::Domain, "bessel_zero: m must be >= 1");
    double z = mcmahon_zero(nu, m);
    if (m > m0 && mcmahon_error(nu, m) < 1e-16 * z) return {nu, m, z};
    if (nu > 6.0) z = boost::math::cyl_bessel_j_zero(nu, m);
    double last = HUGE_VAL;
    for (int it = 0; it < 30; ++it) {
        const double jn = boost::math::cyl_bessel_j(nu, z);
        const double d = (nu / z) * jn - boost::math::cyl_bessel_j(nu + 1.0, z);
        const double dz = jn / d;
        if (std::fabs(dz) >= last) break;
        z -= dz;
        last = std::fabs(dz);
        if (last <= 2e-16 * z) break;
    }
    return {nu, m, z};
}

}  // namespace gjq
