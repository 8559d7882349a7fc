#ifndef GJQ_GOLDEN_HPP
#define GJQ_GOLDEN_HPP

#include <map>
#include <string>
#include <vector>

namespace gjq {

// One row of a golden rule file: n,alpha,beta,k,theta,x,w,omega
struct GoldenRecord {
    int n;
    double alpha;
    double beta;
    int k;
    double theta;
    double x;
    double w;
    double omega;
};

std::vector<GoldenRecord> load_golden(const std::string& path);

// File name used by the generator: "/" -> "o", "-" -> "m", e.g. jacobi_100_0.1_m0.3.csv
std::string golden_file_name(int n, const std::string& alpha, const std::string& beta);

// name,value pairs of oracles.csv; values kept as text for callers that need all digits.
std::map<std::string, std::string> load_oracles(const std::string& path);

}  // namespace gjq

#endif
