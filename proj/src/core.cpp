#include "gjq/core.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

namespace gjq {

JacobiParams::JacobiParams(int n_, double a, double b) : n(n_), alpha(a), beta(b) {
    if (n < 1) throw Error(ErrorCode::Domain, "n must be >= 1");
    if (!(alpha > -1.0)) throw Error(ErrorCode::Domain, "alpha must be > -1");
    if (!(beta > -1.0)) throw Error(ErrorCode::Domain, "beta must be > -1");
}

bool JacobiParams::accuracy_guaranteed() const {
    return n >= 20 && alpha <= 5.0 && beta <= 5.0;
}

double kappa(const JacobiParams& p) { return p.kappa(); }

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Elementary: return "elementary";
        case Branch::BesselRight: return "bessel";
        case Branch::ReflectedElementary: return "reflected_elementary";
        case Branch::ReflectedBessel: return "reflected_bessel";
        case Branch::Recurrence: return "recurrence";
    }
    return "?";
}

double log_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) throw Error(ErrorCode::Domain, "log_gamma pole");
    return boost::math::lgamma(x);
}

double log_gamma_ratio(double x, double delta) {
    if (delta == 0.0) return 0.0;
    // tgamma_delta_ratio(x, d) = Gamma(x) / Gamma(x + d)
    if (x > 0.0 && x + delta > 0.0) {
        const double r = boost::math::tgamma_delta_ratio(x, delta);
        if (std::isnormal(r)) return -std::log(r);
    }
    return log_gamma(x + delta) - log_gamma(x);
}

double log_total_mass(double alpha, double beta) {
    if (!(alpha > -1.0) || !(beta > -1.0)) throw Error(ErrorCode::Domain, "alpha, beta must be > -1");
    return (alpha + beta + 1.0) * std::numbers::ln2 + log_gamma(alpha + 1.0) + log_gamma(beta + 1.0) -
           log_gamma(alpha + beta + 2.0);
}

double gauss_mass_constant(const JacobiParams& p) {
    const double n = p.n, a = p.alpha, b = p.beta;
    // Gamma(n+a+1)/n! and Gamma(n+b+1)/Gamma(n+a+b+1), both as ratios to stay O(n^a)
    return (a + b + 1.0) * std::numbers::ln2 + log_gamma_ratio(n + 1.0, a) - log_gamma_ratio(n + b + 1.0, a);
}

ThetaNode reflect(const JacobiParams& p, const ThetaNode& in) {
    ThetaNode out;
    out.k = p.n + 1 - in.k;
    out.theta = std::numbers::pi - in.theta;
    out.theta0 = std::numbers::pi - in.theta0;
    out.eps = -in.eps;
    out.x = -in.x;
    switch (in.branch) {
        case Branch::Elementary: out.branch = Branch::ReflectedElementary; break;
        case Branch::BesselRight: out.branch = Branch::ReflectedBessel; break;
        case Branch::ReflectedElementary: out.branch = Branch::Elementary; break;
        case Branch::ReflectedBessel: out.branch = Branch::BesselRight; break;
        case Branch::Recurrence: out.branch = Branch::Recurrence; break;
    }
    return out;
}

std::vector<ThetaNode> reflect(const JacobiParams& p, const std::vector<ThetaNode>& nodes) {
    std::vector<ThetaNode> out;
    out.reserve(nodes.size());
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) out.push_back(reflect(p, *it));
    return out;
}

double rel_err(double a, double b) {
    if (b == 0.0) return std::fabs(a);
    return std::fabs(a - b) / std::fabs(b);
}

}  // namespace gjq
