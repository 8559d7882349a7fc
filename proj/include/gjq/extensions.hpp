#ifndef GJQ_EXTENSIONS_HPP
#define GJQ_EXTENSIONS_HPP

#include <vector>

#include "gjq/core.hpp"

namespace gjq {

struct LobattoRule {
    JacobiParams params;  // target weight (1-x)^alpha (1+x)^beta
    std::vector<double> interior_nodes;
    std::vector<double> interior_weights;
    double v_left = 0.0;
    double v_right = 0.0;
};

LobattoRule lobatto_rule(double alpha, double beta, int n_interior);

enum class FixedEnd { Left, Right };

struct RadauRule {
    JacobiParams params;
    FixedEnd fixed_end;
    std::vector<double> interior_nodes;
    std::vector<double> interior_weights;
    double boundary_weight = 0.0;
};

RadauRule radau_rule(double alpha, double beta, int n_interior, FixedEnd end);

struct BarycentricWeights {
    std::vector<double> nodes;
    std::vector<double> u;
};

// u_i = (-1)^i sin(theta_i) sqrt(w_i), i counted from the node nearest x = +1, max |u_i| = 1
BarycentricWeights barycentric_weights(const QuadratureRule& rule);

// Second-form barycentric interpolant through (nodes, f) at x.
double barycentric_interpolate(const BarycentricWeights& bw, const std::vector<double>& f, double x);

}  // namespace gjq

#endif
