#include "gjq/extensions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gjq/quadrature.hpp"

namespace gjq {

namespace {

// v at x = -1 for the (alpha, beta) Lobatto rule with n interior points
double lobatto_boundary(double a, double b, int n) {
    const double lv = (a + b + 1.0) * std::numbers::ln2 + std::log(b + 1.0) + 2.0 * log_gamma(b + 1.0) -
                      log_gamma_ratio(n + 1.0, b + 1.0) - log_gamma_ratio(n + a + 2.0, b + 1.0);
    return std::exp(lv);
}

// v at x = -1 for the (alpha, beta) Radau rule with n interior points
double radau_boundary(double a, double b, int n) {
    const double lv = (a + b + 1.0) * std::numbers::ln2 + log_gamma(b + 1.0) + log_gamma(b + 2.0) -
                      log_gamma_ratio(n + 1.0, b + 1.0) - log_gamma_ratio(n + a + 1.0, b + 1.0);
    return std::exp(lv);
}

}  // namespace

LobattoRule lobatto_rule(double alpha, double beta, int n_interior) {
    const JacobiParams target(n_interior + 2, alpha, beta);
    const JacobiParams inner(n_interior, alpha + 1.0, beta + 1.0);
    const QuadratureRule g = compute_rule(inner);
    LobattoRule r{target, g.nodes, {}, 0.0, 0.0};
    r.interior_weights.resize(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const double s = std::sin(g.theta_nodes[i].theta);
        r.interior_weights[i] = g.weights[i] / (s * s);
    }
    r.v_left = lobatto_boundary(alpha, beta, n_interior);
    r.v_right = lobatto_boundary(beta, alpha, n_interior);
    return r;
}

RadauRule radau_rule(double alpha, double beta, int n_interior, FixedEnd end) {
    const JacobiParams target(n_interior + 1, alpha, beta);
    const bool left = end == FixedEnd::Left;
    const JacobiParams inner(n_interior, left ? alpha : alpha + 1.0, left ? beta + 1.0 : beta);
    const QuadratureRule g = compute_rule(inner);
    RadauRule r{target, end, g.nodes, {}, 0.0};
    r.interior_weights.resize(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const double t = 0.5 * g.theta_nodes[i].theta;
        // 1 + x = 2 cos^2(theta/2), 1 - x = 2 sin^2(theta/2)
        const double f = left ? std::cos(t) : std::sin(t);
        r.interior_weights[i] = g.weights[i] / (2.0 * f * f);
    }
    r.boundary_weight = left ? radau_boundary(alpha, beta, n_interior) : radau_boundary(beta, alpha, n_interior);
    return r;
}

BarycentricWeights barycentric_weights(const QuadratureRule& rule) {
    BarycentricWeights b{rule.nodes, std::vector<double>(rule.nodes.size())};
    const std::size_t n = rule.nodes.size();
    double big = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double sgn = ((n - 1 - i) % 2 == 0) ? 1.0 : -1.0;
        b.u[i] = sgn * std::sin(rule.theta_nodes[i].theta) * std::sqrt(rule.weights[i]);
        big = std::max(big, std::fabs(b.u[i]));
    }
    for (auto& u : b.u) u /= big;
    return b;
}

double barycentric_interpolate(const BarycentricWeights& bw, const std::vector<double>& f, double x) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < bw.nodes.size(); ++i) {
        const double d = x - bw.nodes[i];
        if (d == 0.0) return f[i];
        const double t = bw.u[i] / d;
        num += t * f[i];
        den += t;
    }
    return num / den;
}

}  // namespace gjq
