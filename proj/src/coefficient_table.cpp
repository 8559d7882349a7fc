#include "gjq/coefficient_table.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "gjq/core.hpp"

namespace gjq {

namespace detail {
extern const char elementary_table_text[];
extern const bool elementary_table_hash_ok;
}  // namespace detail

namespace {

[[noreturn]] void bad(int line, const std::string& msg) {
    throw Error(ErrorCode::Domain, "coefficient table line " + std::to_string(line) + ": " + msg);
}

int index_of(const std::string& name, const char* prefix) {
    const std::string p(prefix);
    if (name.size() <= p.size() || name.compare(0, p.size(), p) != 0) return -1;
    for (std::size_t i = p.size(); i < name.size(); ++i)
        if (name[i] < '0' || name[i] > '9') return -1;
    return std::atoi(name.c_str() + p.size());
}

}  // namespace

CoefficientTable CoefficientTable::parse(std::string_view text) {
    CoefficientTable t;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    CoefficientEntry* cur = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "version") {
            ls >> t.version_;
        } else if (tok == "hash") {
            ls >> t.hash_;
        } else if (tok == "coef") {
            if (cur) bad(lineno, "nested coef");
            CoefficientEntry e;
            if (!(ls >> e.name >> e.K)) bad(lineno, "malformed coef header");
            t.entries_.push_back(std::move(e));
            cur = &t.entries_.back();
        } else if (tok == "end") {
            if (!cur) bad(lineno, "end without coef");
            cur = nullptr;
        } else if (tok == "A" || tok == "B") {
            if (!cur) bad(lineno, "term outside coef");
            CoefficientEntry::Term term{};
            std::string dec;
            if (!(ls >> term.xpow >> term.apow >> term.bpow >> dec)) bad(lineno, "malformed term");
            term.value = std::strtod(dec.c_str(), nullptr);
            (tok == "A" ? cur->A : cur->B).push_back(term);
        } else {
            bad(lineno, "unknown record '" + tok + "'");
        }
    }
    if (cur) bad(lineno, "missing end");
    if (t.version_ != 1) throw Error(ErrorCode::Domain, "unsupported coefficient table version");
    return t;
}

const CoefficientTable& CoefficientTable::elementary() {
    static const CoefficientTable table = parse(detail::elementary_table_text);
    return table;
}

bool CoefficientTable::embedded_hash_verified() { return detail::elementary_table_hash_ok; }

const CoefficientEntry* CoefficientTable::find(std::string_view name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

int CoefficientTable::max_theta_order() const {
    int m = 0;
    for (const auto& e : entries_) m = std::max(m, index_of(e.name, "theta"));
    return m;
}

int CoefficientTable::max_series_order() const {
    int m = 0;
    for (const auto& e : entries_) {
        m = std::max(m, index_of(e.name, "u"));
        m = std::max(m, index_of(e.name, "v"));
    }
    return m;
}

BoundCoefficient::BoundCoefficient(const CoefficientEntry& e, double alpha, double beta) : K(e.K) {
    auto bind = [&](const std::vector<CoefficientEntry::Term>& terms, std::vector<double>& poly) {
        for (const auto& t : terms) {
            if (static_cast<int>(poly.size()) <= t.xpow) poly.resize(t.xpow + 1, 0.0);
            poly[t.xpow] += t.value * std::pow(alpha, t.apow) * std::pow(beta, t.bpow);
        }
    };
    bind(e.A, A);
    bind(e.B, B);
}

double BoundCoefficient::operator()(double x, double s) const {
    auto horner = [x](const std::vector<double>& p) {
        double r = 0.0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
        return r;
    };
    double v = horner(A) + s * horner(B);
    for (int i = 0; i < K; ++i) v /= s;
    return v;
}

}  // namespace gjq
