#ifndef GJQ_CORE_HPP
#define GJQ_CORE_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace gjq {

enum class ErrorCode {
    Domain,
    DomainTooCloseToEndpoint,
    BranchMisuse,
    IndexOutOfRange,
    NotAZero,
};

class Error : public std::domain_error {
public:
    Error(ErrorCode code, const std::string& what) : std::domain_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Degree n and exponents of the weight (1-x)^alpha (1+x)^beta.
struct JacobiParams {
    int n;
    double alpha;
    double beta;

    JacobiParams(int n, double alpha, double beta);

    double kappa() const { return n + 0.5 * (alpha + beta + 1.0); }
    bool accuracy_guaranteed() const;
    // The (beta, alpha) problem, used for the nodes near x = -1.
    JacobiParams swapped() const { return JacobiParams(n, beta, alpha); }
};

double kappa(const JacobiParams& p);

enum class Branch { Elementary, BesselRight, ReflectedElementary, ReflectedBessel, Recurrence };

const char* branch_name(Branch b);

// One node: x = cos(theta), theta = theta0 + eps, k counts from the left (x_1 < ... < x_n).
struct ThetaNode {
    int k = 0;
    double theta = 0.0;
    double theta0 = 0.0;
    double eps = 0.0;
    double x = 0.0;
    Branch branch = Branch::Elementary;
};

struct QuadratureRule {
    JacobiParams params;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> scaled_weights;
    std::vector<ThetaNode> theta_nodes;
    std::vector<Branch> branch_log;
};

double log_gamma(double x);

// log of  int_{-1}^{1} (1-x)^alpha (1+x)^beta dx
double log_total_mass(double alpha, double beta);

// log M_{n,alpha,beta} = log( 2^{a+b+1} Gamma(n+a+1) Gamma(n+b+1) / (n! Gamma(n+a+b+1)) )
double gauss_mass_constant(const JacobiParams& p);

// log of Gamma(x + delta) / Gamma(x)
double log_gamma_ratio(double x, double delta);

// Maps positive-x nodes of the (beta, alpha) problem to the negative-x nodes of (alpha, beta).
std::vector<ThetaNode> reflect(const JacobiParams& p, const std::vector<ThetaNode>& nodes);
ThetaNode reflect(const JacobiParams& p, const ThetaNode& node);

// Truncation orders of the two expansions.  full() uses everything the committed
// table and the runtime Bessel coefficients provide; baseline() keeps only the
// terms printed in closed form (theta_1, theta_2 and the first coefficients).
struct ExpansionOrders {
    int elementary_theta = 7;   // theta_1 .. theta_M
    int elementary_series = 13; // u_{2m}, v_{2m+1}, m_{2m}, n_{2m+1} with index <= this
    int bessel_theta = 4;       // theta_1 .. theta_M of the Bessel inversion
    int bessel_series = 4;      // S_m, T_m, Y_m, Z_m with m <= this

    static ExpansionOrders full() { return {}; }
    static ExpansionOrders baseline() { return {2, 2, 2, 1}; }
};

// Relative difference |a - b| / |b| (absolute when b == 0).
double rel_err(double a, double b);

}  // namespace gjq

#endif
