#ifndef GJQ_SELFTEST_HPP
#define GJQ_SELFTEST_HPP

#include <string>
#include <vector>

namespace gjq {

struct CriterionResult {
    int id;  // 0 for informational lines
    bool pass;
    std::string summary;
};

// Reproduction suite against the committed golden files and oracles under data_dir.
std::vector<CriterionResult> run_acceptance(const std::string& data_dir);

// Moments int_{-1}^{1} x^k (1-x)^alpha (1+x)^beta dx for k = 0..kmax.
std::vector<double> jacobi_moments(double alpha, double beta, int kmax);

}  // namespace gjq

#endif
