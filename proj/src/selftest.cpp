#include "gjq/selftest.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>

#include "gjq/bessel_expansion.hpp"
#include "gjq/bessel_functions.hpp"
#include "gjq/coefficient_table.hpp"
#include "gjq/elementary_expansion.hpp"
#include "gjq/extensions.hpp"
#include "gjq/golden.hpp"
#include "gjq/quadrature.hpp"

namespace gjq {

namespace {

using clock_type = std::chrono::steady_clock;

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

double best_time(int reps, const std::function<void()>& f) {
    double best = HUGE_VAL;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        f();
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

std::int64_t ulp_distance(double a, double b) {
    auto key = [](double v) {
        const auto i = std::bit_cast<std::int64_t>(v);
        return i < 0 ? std::int64_t(0x8000000000000000ULL) - i : i;
    };
    const std::int64_t d = key(a) - key(b);
    return d < 0 ? -d : d;
}

double moment_error(const std::vector<double>& x, const std::vector<double>& w, const std::vector<double>& mu) {
    double worst = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], static_cast<double>(k));
        worst = std::max(worst, rel_err(s, mu[k]));
    }
    return worst;
}

struct GoldenError {
    double node = 0.0;
    double omega = 0.0;
};

GoldenError compare(const QuadratureRule& r, const std::vector<GoldenRecord>& g) {
    GoldenError e;
    for (std::size_t i = 0; i < g.size(); ++i) {
        e.node = std::max(e.node, rel_err(r.nodes[i], g[i].x));
        e.omega = std::max(e.omega, rel_err(r.scaled_weights[i], g[i].omega));
    }
    return e;
}

CriterionResult worked_example() {
    const JacobiParams p(100, 1.0 / 3.0, 1.0 / 4.0);
    ExpansionOrders o = ExpansionOrders::full();
    o.bessel_theta = 1;
    ThetaNode nd;
    const double t = best_time(5, [&] { nd = node_bessel(p, 1, o); });
    const double paper = 0.9995853721164185, ref = 0.9995853721163790;
    const double e_paper = rel_err(nd.x, paper), e_ref = rel_err(nd.x, ref);
    const bool ok = e_paper <= 1e-15 && e_ref <= 5e-14 && t < 1e-3;
    return {1, ok,
            fmt("largest zero n=100 a=1/3 b=1/4 with theta1: x=%.16f rel.diff to 0.9995853721164185 %.1e, "
                "to reference %.2e (<=5e-14), %.1f us",
                nd.x, e_paper, e_ref, t * 1e6)};
}

CriterionResult cos_chi_stability() {
    const JacobiParams p(100, 1.0 / 3.0, 1.0 / 5.0);
    const ElementaryExpansion E(p);
    const int k = 50;
    const ThetaNode nd = E.node(k);
    const double kap = p.kappa();
    const double sgn = ((p.n - k + 1) % 2 == 0) ? 1.0 : -1.0;
    const double cos_shift = sgn * std::sin(kap * nd.eps);
    const double chi = kap * nd.theta - (0.5 * p.alpha + 0.25) * std::numbers::pi;
    const double direct_err = rel_err(std::cos(chi), cos_shift);
    const double W = std::fabs(E.eval_W_shifted(k, nd.eps).W);
    // printed digits 0.000190836324...
    const bool digits = std::floor(cos_shift * 1e12) == 190836324.0;
    const bool ok = W <= 5e-15 && direct_err >= 1e-13 && digits;
    return {2, ok,
            fmt("middle zero n=100 a=1/3 b=1/5: shifted |W|=%.1e (<=5e-15), direct cos chi rel.err %.1e (>=1e-13), "
                "cos chi=%.12e",
                W, direct_err, cos_shift)};
}

CriterionResult table_one(const std::map<std::string, std::string>& orc) {
    const double alpha = 0.25;
    const double u = std::stod(orc.at("bessel_zero_0.25_5"));
    const double j1 = bessel_j(alpha + 1.0, u);
    const char* hs[] = {"1e-1", "1e-2", "1e-3", "1e-4", "1e-5"};
    const int terms[] = {9, 5, 4, 3, 2};
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double h = std::stod(hs[i]);
        const double v = bessel_pair_near_zero(alpha, u, j1, h, terms[i]).j_alpha;
        worst = std::max(worst, rel_err(v, std::stod(orc.at(std::string("bessel_j_0.25_j5_plus_") + hs[i]))));
    }
    return {3, worst <= 5e-15, fmt("near-zero series a=1/4 u=j5, 5 rows: max rel.err %.1e (<=5e-15)", worst)};
}

CriterionResult weight_sums() {
    const int ns[] = {20, 50, 100, 500, 1000};
    const double ab[] = {-0.75, -0.3, 0.0, 0.5, 2.0, 5.0};
    double worst = 0.0;
    int count = 0;
    const auto t0 = clock_type::now();
    for (int n : ns)
        for (double a : ab)
            for (double b : ab) {
                const JacobiParams p(n, a, b);
                const QuadratureRule r = compute_rule(p);
                double s = 0.0;
                for (double w : r.weights) s += w;
                worst = std::max(worst, rel_err(s, std::exp(log_total_mass(a, b))));
                ++count;
            }
    const double t = seconds_since(t0);
    return {4, worst <= 1e-13 && t < 10.0,
            fmt("weight sums over %d rules: max rel.err %.1e (<=1e-13), %.2f s (<10 s)", count, worst, t)};
}

std::vector<CriterionResult> golden_accuracy(const std::string& dir) {
    std::vector<CriterionResult> out;
    struct Case {
        int n;
        const char* a;
        const char* b;
    };
    const Case cases[] = {{100, "0.1", "-0.3"}, {100, "5", "-0.3"}, {100, "-0.6", "-0.7"},
                          {1000, "0.1", "-0.3"}, {1000, "5", "-0.3"}, {1000, "-0.6", "-0.7"}};
    double wn = 0.0, ww = 0.0;
    std::string detail;
    for (const auto& c : cases) {
        const auto g = load_golden(dir + "/golden/" + golden_file_name(c.n, c.a, c.b));
        const JacobiParams p(c.n, std::stod(c.a), std::stod(c.b));
        const GoldenError e = compare(compute_rule(p), g);
        wn = std::max(wn, e.node);
        ww = std::max(ww, e.omega);
    }
    double base = 0.0;
    for (const auto& c : {cases[0], cases[2]}) {
        const auto g = load_golden(dir + "/golden/" + golden_file_name(c.n, c.a, c.b));
        const JacobiParams p(c.n, std::stod(c.a), std::stod(c.b));
        base = std::max(base, compare(compute_rule(p, baseline_policy(p)), g).node);
    }
    const bool ok = wn <= 1e-14 && ww <= 5e-13 && base <= 1e-12;
    out.push_back({5, ok,
                   fmt("golden n=100,1000 x 3 parameter pairs: max node rel.err %.1e (<=1e-14), scaled weight %.1e "
                       "(<=5e-13); baseline orders n=100 (0.1,-0.3),(-0.6,-0.7) nodes %.1e (<=1e-12)",
                       wn, ww, base)});
    {
        const auto g = load_golden(dir + "/golden/" + golden_file_name(100, "5", "-0.3"));
        const JacobiParams p(100, 5.0, -0.3);
        const double e = compare(compute_rule(p, baseline_policy(p)), g).node;
        out.push_back({0, e <= 1e-12, fmt("baseline orders n=100 (5,-0.3) nodes %.1e (not required)", e)});
    }
    return out;
}

CriterionResult small_n(const std::string& dir) {
    const auto g = load_golden(dir + "/golden/" + golden_file_name(20, "0.1", "0.3"));
    const JacobiParams p(20, 0.1, 0.3);
    const QuadratureRule r = compute_rule(p);
    double before = 0.0, after = 0.0;
    for (int i = 0; i < p.n; ++i) {
        before = std::max(before, rel_err(r.nodes[i], g[i].x));
        const ThetaNode nd = newton_refine(p, r.theta_nodes[i]).node;
        after = std::max(after, rel_err(nd.x, g[i].x));
    }
    return {6, before <= 1e-12 && after <= 1e-15,
            fmt("n=20 a=0.1 b=0.3: asymptotic nodes %.1e (<=1e-12), after one Newton step %.1e (<=1e-15)", before,
                after)};
}

CriterionResult exactness() {
    const JacobiParams p(100, 0.5, -0.3);
    const QuadratureRule r = compute_rule(p);
    const double e = moment_error(r.nodes, r.weights, jacobi_moments(0.5, -0.3, 60));
    return {7, e <= 1e-11, fmt("n=100 a=0.5 b=-0.3 moments k<=60: max rel.err %.1e (<=1e-11)", e)};
}

CriterionResult lobatto() {
    const LobattoRule L = lobatto_rule(0.0, 0.0, 50);
    const double ref = 2.0 / (51.0 * 52.0);
    const auto ul = ulp_distance(L.v_left, ref), ur = ulp_distance(L.v_right, ref);
    std::vector<double> x{-1.0}, w{L.v_left};
    x.insert(x.end(), L.interior_nodes.begin(), L.interior_nodes.end());
    w.insert(w.end(), L.interior_weights.begin(), L.interior_weights.end());
    x.push_back(1.0);
    w.push_back(L.v_right);
    const double e = moment_error(x, w, jacobi_moments(0.0, 0.0, 60));
    return {8, ul <= 4 && ur <= 4 && e <= 1e-11,
            fmt("Lobatto a=b=0, 50 interior: boundary weights %lld/%lld ulps from 2/(51*52) (<=4), moments k<=60 "
                "%.1e (<=1e-11)",
                static_cast<long long>(ul), static_cast<long long>(ur), e)};
}

CriterionResult performance() {
    const JacobiParams p(1000, 0.1, -0.3);
    const BranchCost c = measure_branch_cost(p, 5);
    const bool ok = c.rule_ns <= 10000.0 && c.elementary_ns < 0.9 * c.bessel_ns;
    return {9, ok,
            fmt("n=1000: rule %.0f ns/node (<=10000); elementary %.0f ns/node vs Bessel %.0f ns/node over %d nodes",
                c.rule_ns, c.elementary_ns, c.bessel_ns, c.nodes_timed)};
}

}  // namespace

std::vector<double> jacobi_moments(double alpha, double beta, int kmax) {
    // (alpha + beta + k + 2) mu_{k+1} = (beta - alpha) mu_k + k mu_{k-1}
    std::vector<double> mu(kmax + 1);
    mu[0] = std::exp(log_total_mass(alpha, beta));
    for (int k = 0; k < kmax; ++k)
        mu[k + 1] = ((beta - alpha) * mu[k] + (k > 0 ? k * mu[k - 1] : 0.0)) / (alpha + beta + k + 2.0);
    return mu;
}

std::vector<CriterionResult> run_acceptance(const std::string& dir) {
    const auto orc = load_oracles(dir + "/golden/oracles.csv");
    std::vector<CriterionResult> out;
    auto guard = [&](int id, auto&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            out.push_back({id, false, std::string("exception: ") + e.what()});
        }
    };
    guard(1, [&] { out.push_back(worked_example()); });
    guard(2, [&] { out.push_back(cos_chi_stability()); });
    guard(3, [&] { out.push_back(table_one(orc)); });
    guard(4, [&] { out.push_back(weight_sums()); });
    guard(5, [&] {
        for (auto& r : golden_accuracy(dir)) out.push_back(r);
    });
    guard(6, [&] { out.push_back(small_n(dir)); });
    guard(7, [&] { out.push_back(exactness()); });
    guard(8, [&] { out.push_back(lobatto()); });
    guard(9, [&] { out.push_back(performance()); });
    return out;
}

}  // namespace gjq
