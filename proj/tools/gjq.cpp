#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gjq/coefficient_table.hpp"
#include "gjq/extensions.hpp"
#include "gjq/quadrature.hpp"
#include "gjq/selftest.hpp"

#ifndef GJQ_DATA_DIR
#define GJQ_DATA_DIR "data"
#endif

namespace {

struct Options {
    int n = 0;
    double alpha = 0.0;
    double beta = 0.0;
    std::string method = "auto";
    bool refine = false;
    std::string format = "csv";
    double theta_switch = 0.0;
    std::string end = "left";
    std::string data_dir = GJQ_DATA_DIR;
};

// One output table: column names and rows of preformatted cells.
class Table {
public:
    Table(std::vector<std::string> cols, bool json) : cols_(std::move(cols)), json_(json) {
        if (!json_) print_row(cols_, false);
    }

    void row(const std::vector<std::string>& cells) { print_row(cells, json_); }

    static std::string num(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
    static std::string str(const std::string& s) { return "\"" + s + "\""; }

private:
    void print_row(const std::vector<std::string>& cells, bool json) const {
        std::string line;
        if (json) {
            line = "{";
            for (std::size_t i = 0; i < cells.size(); ++i)
                line += (i ? ",\"" : "\"") + cols_[i] + "\":" + cells[i];
            line += "}";
        } else {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                std::string c = cells[i];
                if (!c.empty() && c.front() == '"') c = c.substr(1, c.size() - 2);
                line += (i ? "," : "") + c;
            }
        }
        std::fputs((line + "\n").c_str(), stdout);
    }

    std::vector<std::string> cols_;
    bool json_;
};

gjq::BranchPolicy make_policy(const gjq::JacobiParams& p, const Options& o) {
    static const std::map<std::string, gjq::Method> methods = {{"auto", gjq::Method::Auto},
                                                               {"elementary", gjq::Method::Elementary},
                                                               {"bessel", gjq::Method::Bessel},
                                                               {"recurrence", gjq::Method::Recurrence}};
    gjq::BranchPolicy pol = gjq::default_policy(p);
    // an explicit method overrides the automatic routing of small kappa to the recurrence
    if (o.method != "auto") pol.method = methods.at(o.method);
    pol.newton_refine = o.refine;
    if (o.theta_switch > 0.0) pol.theta_switch_nodes = pol.theta_switch_weights = o.theta_switch;
    pol.validate();
    return pol;
}

void emit_rule(const Options& o, bool with_weights) {
    const gjq::JacobiParams p(o.n, o.alpha, o.beta);
    const auto pol = make_policy(p, o);
    const bool json = o.format == "json";
    if (!with_weights) {
        const auto nodes = gjq::compute_nodes(p, pol);
        Table t({"k", "theta", "x", "branch"}, json);
        for (const auto& nd : nodes)
            t.row({std::to_string(nd.k), Table::num(nd.theta), Table::num(nd.x), Table::str(gjq::branch_name(nd.branch))});
        return;
    }
    const auto r = gjq::compute_rule(p, pol);
    Table t({"k", "theta", "x", "w", "omega", "branch"}, json);
    for (int i = 0; i < p.n; ++i)
        t.row({std::to_string(i + 1), Table::num(r.theta_nodes[i].theta), Table::num(r.nodes[i]),
               Table::num(r.weights[i]), Table::num(r.scaled_weights[i]), Table::str(gjq::branch_name(r.branch_log[i]))});
}

void emit_lobatto(const Options& o) {
    const auto L = gjq::lobatto_rule(o.alpha, o.beta, o.n);
    Table t({"k", "x", "w"}, o.format == "json");
    int k = 1;
    t.row({std::to_string(k++), Table::num(-1.0), Table::num(L.v_left)});
    for (std::size_t i = 0; i < L.interior_nodes.size(); ++i)
        t.row({std::to_string(k++), Table::num(L.interior_nodes[i]), Table::num(L.interior_weights[i])});
    t.row({std::to_string(k), Table::num(1.0), Table::num(L.v_right)});
}

void emit_radau(const Options& o) {
    const bool left = o.end == "left";
    const auto R = gjq::radau_rule(o.alpha, o.beta, o.n, left ? gjq::FixedEnd::Left : gjq::FixedEnd::Right);
    Table t({"k", "x", "w"}, o.format == "json");
    int k = 1;
    if (left) t.row({std::to_string(k++), Table::num(-1.0), Table::num(R.boundary_weight)});
    for (std::size_t i = 0; i < R.interior_nodes.size(); ++i)
        t.row({std::to_string(k++), Table::num(R.interior_nodes[i]), Table::num(R.interior_weights[i])});
    if (!left) t.row({std::to_string(k), Table::num(1.0), Table::num(R.boundary_weight)});
}

void emit_bary(const Options& o) {
    const gjq::JacobiParams p(o.n, o.alpha, o.beta);
    const auto b = gjq::barycentric_weights(gjq::compute_rule(p, make_policy(p, o)));
    Table t({"k", "x", "u"}, o.format == "json");
    for (std::size_t i = 0; i < b.nodes.size(); ++i)
        t.row({std::to_string(i + 1), Table::num(b.nodes[i]), Table::num(b.u[i])});
}

int run_selftest(const Options& o) {
    const auto& table = gjq::CoefficientTable::elementary();
    std::printf("coefficient table hash %s (%s)\n", table.hash().c_str(),
                gjq::CoefficientTable::embedded_hash_verified() ? "verified" : "MISMATCH");
    int failed = gjq::CoefficientTable::embedded_hash_verified() ? 0 : 1;
    for (const auto& r : gjq::run_acceptance(o.data_dir)) {
        if (r.id == 0) {
            std::printf("info         %s %s\n", r.pass ? "ok  " : "miss", r.summary.c_str());
            continue;
        }
        std::printf("criterion %d  %s %s\n", r.id, r.pass ? "PASS" : "FAIL", r.summary.c_str());
        if (!r.pass) ++failed;
    }
    return failed ? 1 : 0;
}

void run_bench(const Options& o) {
    const gjq::JacobiParams p(o.n ? o.n : 1000, o.alpha, o.beta);
    const auto c = gjq::measure_branch_cost(p, 5);
    Table t({"n", "branch", "ns_per_node"}, o.format == "json");
    t.row({std::to_string(p.n), Table::str("elementary"), Table::num(c.elementary_ns)});
    t.row({std::to_string(p.n), Table::str("bessel"), Table::num(c.bessel_ns)});
    t.row({std::to_string(p.n), Table::str("rule"), Table::num(c.rule_ns)});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-Jacobi quadrature from asymptotic expansions"};
    app.require_subcommand(1);
    Options o;

    auto add_params = [&](CLI::App* s, bool need_n) {
        auto* opt = s->add_option("--n", o.n, "degree (interior points for lobatto/radau)")->check(CLI::PositiveNumber);
        if (need_n) opt->required();
        s->add_option("--alpha", o.alpha, "exponent of (1-x)");
        s->add_option("--beta", o.beta, "exponent of (1+x)");
        s->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_policy = [&](CLI::App* s) {
        s->add_option("--method", o.method, "auto, elementary, bessel or recurrence")
            ->check(CLI::IsMember({"auto", "elementary", "bessel", "recurrence"}));
        s->add_flag("--refine", o.refine, "one Newton step per node");
        s->add_option("--theta-switch", o.theta_switch, "Bessel/elementary switch angle in radians")
            ->check(CLI::PositiveNumber);
    };

    auto* nodes = app.add_subcommand("nodes", "nodes only");
    auto* rule = app.add_subcommand("rule", "nodes and weights");
    auto* lob = app.add_subcommand("lobatto", "Gauss-Lobatto rule with --n interior points");
    auto* rad = app.add_subcommand("radau", "Gauss-Radau rule with --n interior points");
    auto* bary = app.add_subcommand("bary", "barycentric interpolation weights");
    auto* self = app.add_subcommand("selftest", "reproduction suite");
    auto* bench = app.add_subcommand("bench", "mean cost per node by branch");
    for (auto* s : {nodes, rule, bary}) {
        add_params(s, true);
        add_policy(s);
    }
    add_params(lob, true);
    add_params(rad, true);
    rad->add_option("--end", o.end, "fixed end: left or right")->check(CLI::IsMember({"left", "right"}));
    add_params(bench, false);
    self->add_option("--data-dir", o.data_dir, "directory holding golden/");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*nodes) emit_rule(o, false);
        if (*rule) emit_rule(o, true);
        if (*lob) emit_lobatto(o);
        if (*rad) emit_radau(o);
        if (*bary) emit_bary(o);
        if (*bench) run_bench(o);
        if (*self) return run_selftest(o);
    } catch (const gjq::Error& e) {
        std::fprintf(stderr, "gjq: %s\n", e.what());
        return 1;
    }
    return 0;
}
