#ifndef GJQ_QUADRATURE_HPP
#define GJQ_QUADRATURE_HPP

#include <vector>

#include "gjq/core.hpp"

namespace gjq {

enum class Method { Auto, Elementary, Bessel, Recurrence };

const char* method_name(Method m);

struct BranchPolicy {
    double theta_switch_nodes = 0.55;    // Bessel nodes below this theta0, elementary above
    double theta_switch_weights = 0.55;  // same for the weights
    bool newton_refine = false;
    int small_n_cutoff = 20;
    Method method = Method::Auto;
    ExpansionOrders orders = ExpansionOrders::full();

    void validate() const;
};

BranchPolicy default_policy(const JacobiParams& p);
// Baseline orders with the wider Bessel region they need.
BranchPolicy baseline_policy(const JacobiParams& p);

// theta0 of node k from the elementary formula; decides the branch of both node and weight.
double elementary_theta0(const JacobiParams& p, int k);

std::vector<ThetaNode> compute_nodes(const JacobiParams& p, const BranchPolicy& policy);

struct WeightSet {
    std::vector<double> weights;
    std::vector<double> scaled_weights;
};
WeightSet compute_weights(const JacobiParams& p, const std::vector<ThetaNode>& nodes, const BranchPolicy& policy);

struct RecurrenceValue {
    double p_n;
    double p_nm1;
};
RecurrenceValue eval_recurrence(const JacobiParams& p, double x);
// (1 - x^2) P_n'(x) from P_n and P_{n-1}
double derivative_times_one_minus_x2(const JacobiParams& p, double x, const RecurrenceValue& v);

struct RefineResult {
    ThetaNode node;
    bool clamped = false;  // step exceeded half the local node gap
};
// One Newton step in theta.  Uses the recurrence for n <= recurrence_limit and the
// node's own branch function above it.
RefineResult newton_refine(const JacobiParams& p, const ThetaNode& node, int recurrence_limit = 1000);

// Recurrence-based weight and scaled weight at a node.
void recurrence_weight(const JacobiParams& p, const ThetaNode& node, double& w, double& omega);

QuadratureRule compute_rule(const JacobiParams& p, const BranchPolicy& policy);
QuadratureRule compute_rule(const JacobiParams& p);

// Mean cost per node of nodes + weights, in nanoseconds.
struct BranchCost {
    double elementary_ns;  // elementary node and weight, over the positive-x nodes where it applies
    double bessel_ns;      // Bessel node and weight over the same nodes
    double rule_ns;        // compute_rule with the default policy
    int nodes_timed;
};
BranchCost measure_branch_cost(const JacobiParams& p, int repeats = 5);

// log w = (2 alpha + 1) log sin(theta/2) + (2 beta + 1) log cos(theta/2) + log omega
double weight_from_scaled(const JacobiParams& p, double theta, double omega);

}  // namespace gjq

#endif
