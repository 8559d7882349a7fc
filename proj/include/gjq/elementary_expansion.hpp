#ifndef GJQ_ELEMENTARY_EXPANSION_HPP
#define GJQ_ELEMENTARY_EXPANSION_HPP

#include <vector>

#include "gjq/coefficient_table.hpp"
#include "gjq/core.hpp"

namespace gjq {

// G_kappa(alpha, beta) = Gamma(n+alpha+1) / (n! kappa^alpha)
double g_front_factor(const JacobiParams& p);
// Same quantity through the large-kappa series only (any kappa > 0).
double g_front_factor_series(const JacobiParams& p);
// Same quantity through the gamma ratio only.
double g_front_factor_direct(const JacobiParams& p);

// log(M_{n,alpha,beta} / G_kappa(alpha,beta)^2), the weight prefactor of both expansions.
double log_mass_ratio(const JacobiParams& p);

// Coefficient functions bound to (alpha, beta).
struct ElemCoeffSet {
    std::vector<BoundCoefficient> u_even;  // u_0, u_2, ...
    std::vector<BoundCoefficient> v_odd;   // v_1, v_3, ...
    std::vector<BoundCoefficient> m_even;  // m_0, m_2, ...
    std::vector<BoundCoefficient> n_odd;   // n_1, n_3, ...
    std::vector<BoundCoefficient> theta_corr;  // theta_1, theta_2, ...
    int max_order = 0;

    ElemCoeffSet(const CoefficientTable& table, double alpha, double beta, ExpansionOrders orders);
};

struct WPair {
    double W;
    double dW;
};

class ElementaryExpansion {
public:
    explicit ElementaryExpansion(const JacobiParams& p, ExpansionOrders orders = ExpansionOrders::full(),
                                 const CoefficientTable& table = CoefficientTable::elementary());

    const JacobiParams& params() const { return p_; }
    const ElemCoeffSet& coefficients() const { return c_; }

    // theta0 = pi/2 + tau with tau = pi (2n + 2 - 4k + alpha - beta) / (4 kappa)
    double tau(int k) const;
    double theta0(int k) const;

    double eval_poly(double theta, double delta = 0.2) const;
    WPair eval_W_shifted(int k, double eps) const;
    // Same W and W' with chi = kappa theta - (alpha/2 + 1/4) pi formed directly.
    WPair eval_W_direct(double theta) const;
    ThetaNode node(int k) const;
    // Sum of theta_m / kappa^{2m} at theta0(k).
    double correction(int k) const;
    // omega at theta0(k) + eps.
    double scaled_weight(int k, double eps) const;

private:
    struct Series {
        double U, V, M, N;
    };
    Series series(double x, double s) const;

    JacobiParams p_;
    double kappa_;
    ElemCoeffSet c_;
    double log_front_;  // log(G / sqrt(pi kappa))
    double log_mass_ratio_;
};

double eval_poly_elementary(const JacobiParams& p, double theta, double delta = 0.2);
WPair eval_W_shifted(const JacobiParams& p, int k, double eps);
ThetaNode node_elementary(const JacobiParams& p, int k, ExpansionOrders orders = ExpansionOrders::full());

}  // namespace gjq

#endif
