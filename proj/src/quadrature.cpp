#include "gjq/quadrature.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "gjq/bessel_expansion.hpp"
#include "gjq/bessel_functions.hpp"
#include "gjq/elementary_expansion.hpp"

namespace gjq {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int kMaxNewton = 60;

// cos(theta) - x for x = fl(cos(theta)), accurate when theta is small
double cos_residual(double theta, double x) {
    const double h = std::sin(0.5 * theta);
    return (1.0 - x) - 2.0 * h * h;
}

// Close to x = 1 the three-term recurrence cancels badly when |alpha - beta| is large.
bool near_one(const JacobiParams& p, double theta) { return theta < 0.25 * pi && p.kappa() * theta <= 4.5; }

// P_n(cos theta) and (1 - x^2) P_n'(x) from the hypergeometric series in t = sin^2(theta/2):
//   P_n = (alpha+1)_n / n! sum_j (-n)_j (n+alpha+beta+1)_j / ((alpha+1)_j j!) t^j
RecurrenceValue series_near_one(const JacobiParams& p, double theta, double& d) {
    const double h = std::sin(0.5 * theta);
    const double t = h * h;
    const double a = p.alpha, c = p.n + p.alpha + p.beta + 1.0;
    double term = 1.0, sum = 1.0, dsum = 0.0;
    for (int j = 0; j < p.n; ++j) {
        term *= (j - p.n) * (c + j) / ((a + 1.0 + j) * (j + 1.0)) * t;
        sum += term;
        dsum += (j + 1.0) * term;
        if (std::fabs(term) * (j + 1.0) < 1e-18 * std::fabs(dsum) && std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    // (alpha+1)_n / n! = Gamma(n+1+alpha) / (Gamma(n+1) Gamma(alpha+1))
    const double front = std::exp(log_gamma_ratio(p.n + 1.0, a) - log_gamma(a + 1.0));
    // x = 1 - 2t, 1 - x^2 = 4t(1 - t), t dP/dt = front * dsum
    d = -2.0 * (1.0 - t) * front * dsum;
    return {front * sum, 0.0};
}

bool is_reflected(Branch b) { return b == Branch::ReflectedElementary || b == Branch::ReflectedBessel; }

// One half of the rule: the nodes k = first..n of params q, all with theta0 <= ~pi/2.
struct Side {
    JacobiParams q;
    ElementaryExpansion E;
    BesselExpansion B;
    double kappa;

    Side(const JacobiParams& p, const ExpansionOrders& o) : q(p), E(p, o), B(p, o), kappa(p.kappa()) {}

    // first index handled on this side; the mirrored side skips the middle node of odd n
    int first(bool mirrored = false) const { return mirrored ? q.n - q.n / 2 + 1 : q.n / 2 + 1; }

    bool elementary_allowed(double th0) const { return std::min(th0, pi - th0) * kappa >= 4.0; }

    bool bessel_for(double th0, double cut, Method m) const {
        if (m == Method::Bessel) return true;
        if (!elementary_allowed(th0)) return true;
        return m == Method::Auto && th0 < cut;
    }

    ThetaNode node(int k, const BranchPolicy& pol, double* omega) const {
        const double th0 = E.theta0(k);
        const bool bn = bessel_for(th0, pol.theta_switch_nodes, pol.method);
        const bool bw = bessel_for(th0, pol.theta_switch_weights, pol.method);
        if (bn) {
            if (omega && bw) return B.node(q.n + 1 - k, omega);
            ThetaNode nd = B.node(q.n + 1 - k);
            if (omega) *omega = weight(nd, pol);
            return nd;
        }
        ThetaNode nd = E.node(k);
        if (omega) *omega = bw ? weight(nd, pol) : E.scaled_weight(k, nd.eps);
        return nd;
    }

    double weight(const ThetaNode& nd, const BranchPolicy& pol) const {
        const double th0 = E.theta0(nd.k);
        if (bessel_for(th0, pol.theta_switch_weights, pol.method)) {
            const int m = q.n + 1 - nd.k;
            const double eps = nd.branch == Branch::BesselRight
                                   ? nd.eps
                                   : nd.theta - bessel_zero(q.alpha, m).j / kappa;
            return B.scaled_weight(m, eps);
        }
        const double eps = nd.branch == Branch::Elementary ? nd.eps : nd.theta - th0;
        return E.scaled_weight(nd.k, eps);
    }

    // Newton step on the recurrence: in theta near x = 1, in x elsewhere so that small |x|
    // keeps full relative accuracy.
    RefineResult refine_recurrence(const ThetaNode& nd) const {
        RefineResult r{nd, false};
        const bool in_theta = nd.theta < 0.25 * pi;
        const double x = in_theta ? std::cos(nd.theta) : nd.x;
        const double s = std::sin(nd.theta);
        double d, pn;
        if (near_one(q, nd.theta)) {
            pn = series_near_one(q, nd.theta, d).p_n;
        } else {
            const auto v = eval_recurrence(q, x);
            d = derivative_times_one_minus_x2(q, x, v);
            // P at cos(theta) rather than at its rounded value x
            pn = in_theta ? v.p_n + cos_residual(nd.theta, x) * d / (s * s) : v.p_n;
        }
        double dth = pn * s / d;
        const double cap = 0.5 * pi / kappa;
        if (std::fabs(dth) > cap) {
            r.clamped = true;
            dth = std::copysign(cap, dth);
        }
        if (in_theta || r.clamped) {
            // stay inside (0, pi)
            if (nd.theta + dth <= 0.0) dth = -0.5 * nd.theta;
            if (nd.theta + dth >= pi) dth = 0.5 * (pi - nd.theta);
            r.node.theta = nd.theta + dth;
            r.node.x = std::cos(r.node.theta);
        } else {
            r.node.x = x - pn * s * s / d;
            r.node.theta = std::acos(r.node.x);
            dth = r.node.theta - nd.theta;
        }
        r.node.eps = nd.eps + dth;
        return r;
    }

    RefineResult refine_branch(const ThetaNode& nd) const {
        RefineResult r{nd, false};
        double dth;
        if (nd.branch == Branch::Elementary) {
            const WPair w = E.eval_W_shifted(nd.k, nd.eps);
            dth = -w.W / w.dW;
        } else {
            dth = -B.eval_U(nd.theta) / B.eval_U_derivative(nd.theta);
        }
        const double cap = 0.5 * pi / kappa;
        if (std::fabs(dth) > cap) {
            r.clamped = true;
            dth = std::copysign(cap, dth);
        }
        r.node.theta = nd.theta + dth;
        r.node.eps = nd.eps + dth;
        r.node.x = nd.branch == Branch::Elementary ? -std::sin(E.tau(nd.k) + r.node.eps) : std::cos(r.node.theta);
        return r;
    }

    RefineResult refine(const ThetaNode& nd, int limit) const {
        if (q.n <= limit || nd.branch == Branch::Recurrence) return refine_recurrence(nd);
        return refine_branch(nd);
    }

    // Seed for the recurrence path: the asymptotic node when available.
    ThetaNode seed(int k, const BranchPolicy& pol) const {
        try {
            const ThetaNode nd = node(k, pol, nullptr);
            if (nd.theta > 0.0 && nd.theta < pi) return nd;
        } catch (const Error&) {
        }
        ThetaNode nd;
        nd.k = k;
        nd.theta0 = std::min((q.n + 1 - k - 0.25 + 0.5 * q.alpha) * pi / kappa, (q.n + 0.5 - k) * pi / q.n);
        nd.theta = nd.theta0;
        nd.x = std::cos(nd.theta);
        return nd;
    }

    ThetaNode recurrence_node(int k, const BranchPolicy& pol) const {
        ThetaNode nd = seed(k, pol);
        nd.branch = Branch::Recurrence;
        if (q.alpha == q.beta && 2 * k == q.n + 1) {
            nd.theta = nd.theta0 = 0.5 * pi;
            nd.eps = nd.x = 0.0;
            return nd;
        }
        double last = HUGE_VAL;
        for (int it = 0; it < kMaxNewton; ++it) {
            const RefineResult r = refine_recurrence(nd);
            const double step = std::fabs(r.node.theta - nd.theta);
            if (!r.clamped && step >= last) break;
            nd = r.node;
            last = r.clamped ? HUGE_VAL : step;
            if (step <= 1e-16 * nd.theta) {
                nd = refine_recurrence(nd).node;
                break;
            }
        }
        return nd;
    }
};

ThetaNode to_reflected(const JacobiParams& p, const ThetaNode& nd) {
    ThetaNode r = reflect(p, nd);
    if (nd.branch == Branch::Recurrence) r.branch = Branch::Recurrence;
    return r;
}

bool use_recurrence(const JacobiParams& p, const BranchPolicy& pol) {
    return pol.method == Method::Recurrence || p.n < pol.small_n_cutoff;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Elementary: return "elementary";
        case Method::Bessel: return "bessel";
        case Method::Recurrence: return "recurrence";
    }
    return "?";
}

void BranchPolicy::validate() const {
    if (!(theta_switch_nodes > 0.0 && theta_switch_nodes < 0.5 * pi))
        throw Error(ErrorCode::Domain, "theta_switch_nodes must lie in (0, pi/2)");
    if (!(theta_switch_weights > 0.0 && theta_switch_weights < 0.5 * pi))
        throw Error(ErrorCode::Domain, "theta_switch_weights must lie in (0, pi/2)");
    if (small_n_cutoff < 2) throw Error(ErrorCode::Domain, "small_n_cutoff must be >= 2");
    const auto& table = CoefficientTable::elementary();
    if (orders.elementary_theta < 1 || orders.elementary_theta > table.max_theta_order() ||
        orders.elementary_series < 0 || orders.elementary_series > table.max_series_order())
        throw Error(ErrorCode::Domain, "elementary orders exceed the coefficient table");
    if (orders.bessel_theta < 1 || orders.bessel_theta > std::min(kBesselMaxTheta, orders.bessel_series + 1) ||
        orders.bessel_series < 0 ||
        orders.bessel_series > kBesselMaxSeries)
        throw Error(ErrorCode::Domain, "Bessel orders out of range");
}

BranchPolicy default_policy(const JacobiParams& p) {
    BranchPolicy pol;
    const double k = p.kappa();
    pol.theta_switch_nodes = std::min(45.0 / k, 1.0);
    pol.theta_switch_weights = std::min(45.0 / k, 1.1);
    // expansions in 1/kappa^2 with coefficients growing like alpha^2, beta^2
    if (k < 14.0 * std::max({1.0, std::fabs(p.alpha), std::fabs(p.beta)})) pol.method = Method::Recurrence;
    return pol;
}

BranchPolicy baseline_policy(const JacobiParams& p) {
    BranchPolicy pol;
    const double k = p.kappa();
    pol.orders = ExpansionOrders::baseline();
    pol.theta_switch_nodes = pol.theta_switch_weights = std::min(80.0 / k, 1.2);
    return pol;
}

double elementary_theta0(const JacobiParams& p, int k) {
    return 0.5 * pi + pi * (2.0 * p.n + 2.0 - 4.0 * k + p.alpha - p.beta) / (4.0 * p.kappa());
}

RecurrenceValue eval_recurrence(const JacobiParams& p, double x) {
    const double a = p.alpha, b = p.beta;
    double pm1 = 1.0;
    double pc = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    if (p.n == 1) return {pc, pm1};
    for (int k = 2; k <= p.n; ++k) {
        const double c = 2.0 * k + a + b;
        const double a1 = 2.0 * k * (k + a + b) * (c - 2.0);
        const double a2 = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b);
        const double a3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
        const double pn = (a2 * pc - a3 * pm1) / a1;
        pm1 = pc;
        pc = pn;
    }
    return {pc, pm1};
}

double derivative_times_one_minus_x2(const JacobiParams& p, double x, const RecurrenceValue& v) {
    const double n = p.n, a = p.alpha, b = p.beta, c = 2.0 * n + a + b;
    return (n * ((a - b) - c * x) * v.p_n + 2.0 * (n + a) * (n + b) * v.p_nm1) / c;
}

double weight_from_scaled(const JacobiParams& p, double theta, double omega) {
    return std::exp((2.0 * p.alpha + 1.0) * std::log(std::sin(0.5 * theta)) +
                    (2.0 * p.beta + 1.0) * std::log(std::cos(0.5 * theta)) + std::log(omega));
}

void recurrence_weight(const JacobiParams& p, const ThetaNode& nd, double& w, double& omega) {
    // w = M / ((1 - x^2) P'^2) with 1 - x^2 = sin^2 theta
    const double s = std::sin(nd.theta);
    double d;
    if (near_one(p, nd.theta)) {
        series_near_one(p, nd.theta, d);
    } else if (nd.theta > 0.75 * pi && near_one(p.swapped(), pi - nd.theta)) {
        series_near_one(p.swapped(), pi - nd.theta, d);
    } else {
        d = derivative_times_one_minus_x2(p, nd.x, eval_recurrence(p, nd.x));
    }
    if (nd.theta < 0.25 * pi && !near_one(p, nd.theta)) {
        // move (1 - x^2) P' from the rounded x to cos(theta); at a zero its x-derivative is
        // (alpha - beta + (alpha + beta) x) P'
        d *= 1.0 + cos_residual(nd.theta, nd.x) * (p.alpha - p.beta + (p.alpha + p.beta) * nd.x) / (s * s);
    }
    const double lw = gauss_mass_constant(p) + 2.0 * std::log(s) - 2.0 * std::log(std::fabs(d));
    w = std::exp(lw);
    omega = std::exp(lw - (2.0 * p.alpha + 1.0) * std::log(std::sin(0.5 * nd.theta)) -
                     (2.0 * p.beta + 1.0) * std::log(std::cos(0.5 * nd.theta)));
}

RefineResult newton_refine(const JacobiParams& p, const ThetaNode& node, int limit) {
    const bool flip = is_reflected(node.branch) || (node.branch == Branch::Recurrence && node.theta > 0.5 * pi);
    const ExpansionOrders o = ExpansionOrders::full();
    if (flip) {
        const JacobiParams q = p.swapped();
        ThetaNode in = node.branch == Branch::Recurrence ? to_reflected(q, node) : reflect(q, node);
        RefineResult r = Side(q, o).refine(in, limit);
        r.node = node.branch == Branch::Recurrence ? to_reflected(p, r.node) : reflect(p, r.node);
        return r;
    }
    return Side(p, o).refine(node, limit);
}

std::vector<ThetaNode> compute_nodes(const JacobiParams& p, const BranchPolicy& pol) {
    pol.validate();
    std::vector<ThetaNode> out(p.n);
    const bool rec = use_recurrence(p, pol);
    const Side direct(p, pol.orders);
    for (int k = direct.first(); k <= p.n; ++k) {
        ThetaNode nd = rec ? direct.recurrence_node(k, pol) : direct.node(k, pol, nullptr);
        if (!rec && pol.newton_refine) nd = direct.refine(nd, 1000).node;
        out[k - 1] = nd;
    }
    const JacobiParams q = p.swapped();
    const Side mirror(q, pol.orders);
    for (int k = mirror.first(true); k <= p.n; ++k) {
        ThetaNode nd = rec ? mirror.recurrence_node(k, pol) : mirror.node(k, pol, nullptr);
        if (!rec && pol.newton_refine) nd = mirror.refine(nd, 1000).node;
        const ThetaNode r = to_reflected(p, nd);
        out[r.k - 1] = r;
    }
    return out;
}

WeightSet compute_weights(const JacobiParams& p, const std::vector<ThetaNode>& nodes, const BranchPolicy& pol) {
    pol.validate();
    WeightSet ws;
    ws.weights.resize(nodes.size());
    ws.scaled_weights.resize(nodes.size());
    const JacobiParams q = p.swapped();
    const Side direct(p, pol.orders), mirror(q, pol.orders);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const ThetaNode& nd = nodes[i];
        const bool flip = is_reflected(nd.branch) || (nd.branch == Branch::Recurrence && nd.theta > 0.5 * pi);
        double w, om;
        if (nd.branch == Branch::Recurrence) {
            recurrence_weight(p, nd, w, om);
        } else {
            om = flip ? mirror.weight(reflect(q, nd), pol) : direct.weight(nd, pol);
            w = weight_from_scaled(p, nd.theta, om);
        }
        ws.weights[i] = w;
        ws.scaled_weights[i] = om;
    }
    return ws;
}

QuadratureRule compute_rule(const JacobiParams& p, const BranchPolicy& pol) {
    pol.validate();
    QuadratureRule rule{p, {}, {}, {}, {}, {}};
    const int n = p.n;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.scaled_weights.resize(n);
    rule.theta_nodes.resize(n);
    rule.branch_log.resize(n);
    const bool rec = use_recurrence(p, pol);
    auto place = [&](const ThetaNode& nd, double om, double w) {
        const int i = nd.k - 1;
        rule.theta_nodes[i] = nd;
        rule.nodes[i] = nd.x;
        rule.scaled_weights[i] = om;
        rule.weights[i] = w;
        rule.branch_log[i] = nd.branch;
    };
    const JacobiParams q = p.swapped();
    for (int side = 0; side < 2; ++side) {
        const JacobiParams& s = side == 0 ? p : q;
        const Side h(s, pol.orders);
        for (int k = h.first(side == 1); k <= n; ++k) {
            ThetaNode nd;
            double om, w;
            if (rec) {
                nd = h.recurrence_node(k, pol);
                recurrence_weight(s, nd, w, om);
            } else if (pol.newton_refine) {
                nd = h.refine(h.node(k, pol, nullptr), 1000).node;
                om = h.weight(nd, pol);
                w = weight_from_scaled(s, nd.theta, om);
            } else {
                nd = h.node(k, pol, &om);
                w = weight_from_scaled(s, nd.theta, om);
            }
            place(side == 0 ? nd : to_reflected(p, nd), om, w);
        }
    }
    return rule;
}

QuadratureRule compute_rule(const JacobiParams& p) { return compute_rule(p, default_policy(p)); }

BranchCost measure_branch_cost(const JacobiParams& p, int repeats) {
    using clock = std::chrono::steady_clock;
    const Side h(p, ExpansionOrders::full());
    std::vector<int> ks;
    for (int k = h.first(); k <= p.n; ++k)
        if (h.elementary_allowed(h.E.theta0(k))) ks.push_back(k);
    volatile double sink = 0.0;
    auto per_node = [&](auto&& body) {
        double best = HUGE_VAL;
        for (int r = 0; r < repeats; ++r) {
            const auto t0 = clock::now();
            for (int k : ks) sink = sink + body(k);
            const std::chrono::duration<double, std::nano> dt = clock::now() - t0;
            best = std::min(best, dt.count() / std::max<std::size_t>(ks.size(), 1));
        }
        return best;
    };
    BranchCost c{};
    c.nodes_timed = static_cast<int>(ks.size());
    c.elementary_ns = per_node([&](int k) {
        const ThetaNode nd = h.E.node(k);
        return nd.x + h.E.scaled_weight(k, nd.eps);
    });
    c.bessel_ns = per_node([&](int k) {
        double om;
        const ThetaNode nd = h.B.node(p.n + 1 - k, &om);
        return nd.x + om;
    });
    double best = HUGE_VAL;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = clock::now();
        const QuadratureRule rule = compute_rule(p);
        const std::chrono::duration<double, std::nano> dt = clock::now() - t0;
        sink = sink + rule.weights[0];
        best = std::min(best, dt.count() / p.n);
    }
    c.rule_ns = best;
    return c;
}

}  // namespace gjq
