#ifndef GJQ_TEST_UTIL_HPP
#define GJQ_TEST_UTIL_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "gjq/golden.hpp"

namespace testutil {

inline const std::string data_dir = GJQ_DATA_DIR;

inline const std::map<std::string, std::string>& oracles() {
    static const auto o = gjq::load_oracles(data_dir + "/golden/oracles.csv");
    return o;
}

inline double oracle(const std::string& name) { return std::stod(oracles().at(name)); }

inline std::vector<gjq::GoldenRecord> golden(int n, const std::string& a, const std::string& b) {
    return gjq::load_golden(data_dir + "/golden/" + gjq::golden_file_name(n, a, b));
}

inline std::int64_t ulps(double a, double b) {
    auto key = [](double v) {
        const auto i = std::bit_cast<std::int64_t>(v);
        return i < 0 ? std::int64_t(0x8000000000000000ULL) - i : i;
    };
    const std::int64_t d = key(a) - key(b);
    return d < 0 ? -d : d;
}

}  // namespace testutil

#endif
