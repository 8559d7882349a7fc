#include "gjq/golden.hpp"

#include <fstream>
#include <sstream>

#include "gjq/core.hpp"

namespace gjq {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) out.push_back(f);
    return out;
}

// decimal or "p/q"
double number(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return std::stod(s);
    return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Domain, "cannot open " + path);
    return in;
}

}  // namespace

std::vector<GoldenRecord> load_golden(const std::string& path) {
    auto in = open(path);
    std::string line;
    std::getline(in, line);
    if (line != "n,alpha,beta,k,theta,x,w,omega") throw Error(ErrorCode::Domain, "bad golden header in " + path);
    std::vector<GoldenRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line);
        if (f.size() != 8) throw Error(ErrorCode::Domain, "bad golden row in " + path);
        out.push_back({std::stoi(f[0]), number(f[1]), number(f[2]), std::stoi(f[3]), std::stod(f[4]),
                       std::stod(f[5]), std::stod(f[6]), std::stod(f[7])});
    }
    return out;
}

std::string golden_file_name(int n, const std::string& alpha, const std::string& beta) {
    auto tag = [](std::string s) {
        for (auto& c : s) {
            if (c == '/') c = 'o';
            if (c == '-') c = 'm';
        }
        return s;
    };
    return "jacobi_" + std::to_string(n) + "_" + tag(alpha) + "_" + tag(beta) + ".csv";
}

std::map<std::string, std::string> load_oracles(const std::string& path) {
    auto in = open(path);
    std::string line;
    std::getline(in, line);
    std::map<std::string, std::string> out;
    while (std::getline(in, line)) {
        const auto pos = line.find(',');
        if (pos == std::string::npos) continue;
        out[line.substr(0, pos)] = line.substr(pos + 1);
    }
    return out;
}

}  // namespace gjq
