#ifndef GJQ_COEFFICIENT_TABLE_HPP
#define GJQ_COEFFICIENT_TABLE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace gjq {

// One coefficient f(t) = (A(x) + sin(t) B(x)) / sin(t)^K with x = cos t and
// A, B polynomials in x, alpha, beta.
struct CoefficientEntry {
    struct Term {
        int xpow;
        int apow;
        int bpow;
        double value;
    };
    std::string name;
    int K = 0;
    std::vector<Term> A;
    std::vector<Term> B;
};

class CoefficientTable {
public:
    static CoefficientTable parse(std::string_view text);
    // The committed artifact data/elementary_coefficients.txt, embedded at build time.
    static const CoefficientTable& elementary();
    // True when the build verified the artifact hash against its body.
    static bool embedded_hash_verified();

    int version() const { return version_; }
    const std::string& hash() const { return hash_; }
    const std::vector<CoefficientEntry>& entries() const { return entries_; }
    const CoefficientEntry* find(std::string_view name) const;

    int max_theta_order() const;   // largest m with theta<m> present
    int max_series_order() const;  // largest index of u<i>/v<i> present

private:
    int version_ = 0;
    std::string hash_;
    std::vector<CoefficientEntry> entries_;
};

// A coefficient with alpha and beta substituted: polynomials in x only.
struct BoundCoefficient {
    int K = 0;
    std::vector<double> A;
    std::vector<double> B;

    BoundCoefficient() = default;
    BoundCoefficient(const CoefficientEntry& e, double alpha, double beta);
    bool empty() const { return A.empty() && B.empty(); }
    // s = sin(t), x = cos(t)
    double operator()(double x, double s) const;
};

}  // namespace gjq

#endif
