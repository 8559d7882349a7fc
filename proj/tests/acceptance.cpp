#include <cstdio>

#include "gjq/selftest.hpp"

int main(int argc, char** argv) {
    const char* dir = argc > 1 ? argv[1] : GJQ_DATA_DIR;
    int failed = 0;
    for (const auto& r : gjq::run_acceptance(dir)) {
        if (r.id == 0) {
            std::printf("info         %s %s\n", r.pass ? "ok  " : "miss", r.summary.c_str());
            continue;
        }
        std::printf("criterion %d  %s %s\n", r.id, r.pass ? "PASS" : "FAIL", r.summary.c_str());
        if (!r.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
