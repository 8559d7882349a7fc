#include "gjq/elementary_expansion.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace gjq {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int kGSeriesTerms = 24;

// C_m(rho) = [t^{2m}] ((t/2) / sinh(t/2))^{2 rho}
std::array<double, kGSeriesTerms> gamma_ratio_coefficients(double rho) {
    std::array<double, kGSeriesTerms> b{}, p{};
    double f = 1.0;
    for (int k = 0; k < kGSeriesTerms; ++k) {
        if (k > 0) f *= 4.0 * (2 * k) * (2 * k + 1);
        b[k] = 1.0 / f;
    }
    const double mu = -2.0 * rho;
    p[0] = 1.0;
    for (int j = 1; j < kGSeriesTerms; ++j) {
        double acc = 0.0;
        for (int k = 1; k <= j; ++k) acc += ((mu + 1.0) * k - j) * b[k] * p[j - k];
        p[j] = acc / j;
    }
    return p;
}

// log( Gamma(w + rho) / (Gamma(w + 1 - rho) kappa^alpha) ), rho = (alpha + 1) / 2
double log_front_series(double kappa, double alpha, double w) {
    const auto c = gamma_ratio_coefficients(0.5 * (alpha + 1.0));
    const double iw2 = 1.0 / (w * w);
    double sum = 1.0, poch = 1.0, wp = 1.0;
    for (int m = 1; m < kGSeriesTerms; ++m) {
        poch *= (-alpha + 2 * m - 2) * (-alpha + 2 * m - 1);
        wp *= iw2;
        const double term = c[m] * poch * wp;
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return alpha * std::log(w / kappa) + std::log(sum);
}

double log_front_direct(double kappa, double alpha, double w) {
    const double rho = 0.5 * (alpha + 1.0);
    return log_gamma_ratio(w + 1.0 - rho, alpha) - alpha * std::log(kappa);
}

double log_front(double kappa, double alpha, double w) {
    return kappa >= 30.0 ? log_front_series(kappa, alpha, w) : log_front_direct(kappa, alpha, w);
}

std::vector<BoundCoefficient> bind_family(const CoefficientTable& t, const char* prefix, int first, int last,
                                          double a, double b) {
    std::vector<BoundCoefficient> out;
    for (int i = first; i <= last; i += 2) {
        const auto* e = t.find(prefix + std::to_string(i));
        if (!e) break;
        out.emplace_back(*e, a, b);
    }
    return out;
}

double horner_inv(const std::vector<double>& c, double ik2) {
    double r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * ik2 + *it;
    return r;
}

}  // namespace

double g_front_factor_series(const JacobiParams& p) {
    const double k = p.kappa();
    return std::exp(log_front_series(k, p.alpha, k - 0.5 * p.beta));
}

double g_front_factor_direct(const JacobiParams& p) {
    const double k = p.kappa();
    return std::exp(log_front_direct(k, p.alpha, k - 0.5 * p.beta));
}

double g_front_factor(const JacobiParams& p) {
    if (p.alpha == 0.0) return 1.0;
    const double k = p.kappa();
    return std::exp(log_front(k, p.alpha, k - 0.5 * p.beta));
}

double log_mass_ratio(const JacobiParams& p) {
    const double k = p.kappa();
    return (p.alpha + p.beta + 1.0) * std::numbers::ln2 - log_front(k, p.alpha, k - 0.5 * p.beta) -
           log_front(k, p.alpha, k + 0.5 * p.beta);
}

ElemCoeffSet::ElemCoeffSet(const CoefficientTable& t, double a, double b, ExpansionOrders o) {
    const int ns = std::min(o.elementary_series, t.max_series_order());
    u_even = bind_family(t, "u", 0, ns, a, b);
    v_odd = bind_family(t, "v", 1, ns, a, b);
    m_even = bind_family(t, "m", 0, ns, a, b);
    n_odd = bind_family(t, "n", 1, ns, a, b);
    for (int m = 1; m <= std::min(o.elementary_theta, t.max_theta_order()); ++m)
        theta_corr.emplace_back(*t.find("theta" + std::to_string(m)), a, b);
    max_order = static_cast<int>(theta_corr.size());
}

ElementaryExpansion::ElementaryExpansion(const JacobiParams& p, ExpansionOrders orders, const CoefficientTable& table)
    : p_(p), kappa_(p.kappa()), c_(table, p.alpha, p.beta, orders) {
    log_front_ = std::log(g_front_factor(p)) - 0.5 * std::log(pi * kappa_);
    log_mass_ratio_ = log_mass_ratio(p);
}

double ElementaryExpansion::tau(int k) const {
    return pi * (2.0 * p_.n + 2.0 - 4.0 * k + p_.alpha - p_.beta) / (4.0 * kappa_);
}

double ElementaryExpansion::theta0(int k) const { return 0.5 * pi + tau(k); }

ElementaryExpansion::Series ElementaryExpansion::series(double x, double s) const {
    const double ik = 1.0 / kappa_, ik2 = ik * ik;
    auto sum = [&](const std::vector<BoundCoefficient>& f) {
        double r = 0.0;
        for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * ik2 + (*it)(x, s);
        return r;
    };
    return {sum(c_.u_even), ik * sum(c_.v_odd), sum(c_.m_even), ik * sum(c_.n_odd)};
}

double ElementaryExpansion::correction(int k) const {
    const double t = tau(k);
    const double x0 = -std::sin(t), s0 = std::cos(t);
    const double ik2 = 1.0 / (kappa_ * kappa_);
    std::vector<double> th(c_.theta_corr.size() + 1, 0.0);
    for (std::size_t m = 0; m < c_.theta_corr.size(); ++m) th[m + 1] = c_.theta_corr[m](x0, s0);
    return horner_inv(th, ik2);
}

ThetaNode ElementaryExpansion::node(int k) const {
    if (k < 1 || k > p_.n) throw Error(ErrorCode::IndexOutOfRange, "node index out of range");
    ThetaNode nd;
    nd.k = k;
    nd.branch = Branch::Elementary;
    const double t = tau(k);
    nd.theta0 = 0.5 * pi + t;
    if (std::min(nd.theta0, pi - nd.theta0) * kappa_ < 4.0)
        throw Error(ErrorCode::BranchMisuse, "theta0 outside the elementary band");
    if (p_.alpha == p_.beta && 2 * p_.n + 2 - 4 * k == 0) {
        nd.eps = 0.0;
        nd.theta = 0.5 * pi;
        nd.x = 0.0;
        return nd;
    }
    nd.eps = correction(k);
    nd.theta = nd.theta0 + nd.eps;
    nd.x = -std::sin(t + nd.eps);
    return nd;
}

WPair ElementaryExpansion::eval_W_shifted(int k, double eps) const {
    const double t = tau(k) + eps;
    const Series sr = series(-std::sin(t), std::cos(t));
    const double sgn = ((p_.n - k) % 2 == 0) ? 1.0 : -1.0;
    const double cos_chi = -sgn * std::sin(kappa_ * eps);
    const double sin_chi = sgn * std::cos(kappa_ * eps);
    return {cos_chi * sr.U - sin_chi * sr.V, -kappa_ * (sin_chi * sr.M + cos_chi * sr.N)};
}

WPair ElementaryExpansion::eval_W_direct(double theta) const {
    const Series sr = series(std::cos(theta), std::sin(theta));
    const double chi = kappa_ * theta - (0.5 * p_.alpha + 0.25) * pi;
    const double c = std::cos(chi), s = std::sin(chi);
    return {c * sr.U - s * sr.V, -kappa_ * (s * sr.M + c * sr.N)};
}

double ElementaryExpansion::eval_poly(double theta, double delta) const {
    if (theta < delta || theta > pi - delta)
        throw Error(ErrorCode::DomainTooCloseToEndpoint, "theta outside [delta, pi - delta]");
    const double W = eval_W_direct(theta).W;
    const double lden = (p_.alpha + 0.5) * std::log(std::sin(0.5 * theta)) +
                        (p_.beta + 0.5) * std::log(std::cos(0.5 * theta));
    return std::exp(log_front_ - lden) * W;
}

double ElementaryExpansion::scaled_weight(int k, double eps) const {
    const double t = tau(k) + eps;
    const Series sr = series(-std::sin(t), std::cos(t));
    const double sgn = ((p_.n - k) % 2 == 0) ? 1.0 : -1.0;
    const double cos_chi = -sgn * std::sin(kappa_ * eps);
    const double sin_chi = sgn * std::cos(kappa_ * eps);
    const double D = sin_chi * sr.M + cos_chi * sr.N;
    return std::exp(std::log(pi) + log_mass_ratio_ - std::log(kappa_) - 2.0 * std::log(std::fabs(D)));
}

double eval_poly_elementary(const JacobiParams& p, double theta, double delta) {
    return ElementaryExpansion(p).eval_poly(theta, delta);
}

WPair eval_W_shifted(const JacobiParams& p, int k, double eps) {
    return ElementaryExpansion(p).eval_W_shifted(k, eps);
}

ThetaNode node_elementary(const JacobiParams& p, int k, ExpansionOrders orders) {
    return ElementaryExpansion(p, orders).node(k);
}

}  // namespace gjq
