#ifndef GJQ_BESSEL_EXPANSION_HPP
#define GJQ_BESSEL_EXPANSION_HPP

#include <array>
#include <vector>

#include "gjq/core.hpp"

namespace gjq {

inline constexpr int kBesselJetOrder = 4;     // Taylor terms kept for theta-derivatives
inline constexpr int kBesselMaxTheta = 4;     // theta_1 .. theta_4
inline constexpr int kBesselMaxSeries = 4;    // S_m, T_m, Y_m, Z_m for m <= 4 (needs A_9)

// A_1(theta) in closed form, switching to its even power series below small_theta_cut.
double coef_A1(double alpha, double beta, double theta, double small_theta_cut = 0.25);

// Coefficients of the Bessel-type expansion at theta0, with enough Taylor terms to
// evaluate them (and their first derivative) at theta0 + eps.
class BesselCoeffSet {
public:
    BesselCoeffSet(double alpha, double beta, double theta0, int series_order);

    double theta0() const { return theta0_; }
    int series_order() const { return series_; }

    // k-th Taylor coefficient of A_m, S_m, T_m at theta0
    double A(int m, int k = 0) const { return A_[m][k]; }
    double S(int m, int k = 0) const { return S_[m][k]; }
    double T(int m, int k = 0) const { return T_[m][k]; }

    double S_at(int m, double eps) const;
    double T_at(int m, double eps) const;
    double dS_at(int m, double eps) const;
    double dT_at(int m, double eps) const;
    double Y_at(int m, double eps) const;
    double Z_at(int m, double eps) const;

    // sum over m of F_m(theta0 + eps) kappa^{-2m}
    double S_sum(double kappa, double eps) const;
    double T_sum(double kappa, double eps) const;
    double Y_sum(double kappa, double eps) const;
    double Z_sum(double kappa, double eps) const;

    // theta_1 .. theta_M of theta = theta0 + sum theta_m / kappa^{2m}, where kappa theta0 is
    // a zero of J_alpha.  Requires M <= series_order + 1.
    std::vector<double> theta_corrections(int M) const;

private:
    using Coeffs = std::array<double, kBesselJetOrder>;
    double alpha_;
    double theta0_;
    int series_;
    std::vector<Coeffs> A_, S_, T_;
};

class BesselExpansion {
public:
    explicit BesselExpansion(const JacobiParams& p, ExpansionOrders orders = ExpansionOrders::full());

    const JacobiParams& params() const { return p_; }

    double eval_poly(double theta, double delta = 0.2) const;
    // U(theta) = sqrt(theta) (J_alpha(kappa theta) S + J_{alpha+1}(kappa theta) T / kappa) and its derivative
    double eval_U(double theta, double delta = 0.2) const;
    double eval_U_derivative(double theta, double delta = 0.2) const;

    // Node x_{n+1-m} from the m-th zero of J_alpha.
    ThetaNode node(int m) const;
    // Node together with its scaled weight, sharing the coefficient evaluation.
    ThetaNode node(int m, double* omega) const;
    // omega at theta = j_{alpha,m}/kappa + eps
    double scaled_weight(int m, double eps) const;

private:
    double scaled_weight(const BesselCoeffSet& c, double j, double eps) const;

    JacobiParams p_;
    double kappa_;
    ExpansionOrders orders_;
    double log_front_;
    double log_mass_ratio_;
};

double eval_poly_bessel(const JacobiParams& p, double theta, double delta = 0.2);
double eval_U_derivative(const JacobiParams& p, double theta, double delta = 0.2);
ThetaNode node_bessel(const JacobiParams& p, int m, ExpansionOrders orders = ExpansionOrders::full());

}  // namespace gjq

#endif
