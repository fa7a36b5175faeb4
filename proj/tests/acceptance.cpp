// Acceptance gate: runs every verification suite in order, printing one
// PASS/FAIL line per check and a verdict line per criterion.  An optional
// argument sets the RNG seed for the randomized suites (default 0).
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "rotlab/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    const std::vector<std::string> suites = rotlab::verify::suite_names();
    int criterion = 0;
    int failed = 0;
    for (const std::string& suite : suites) {
        ++criterion;
        std::vector<rotlab::verify::Check> checks;
        try {
            checks = rotlab::verify::run_suite(suite, seed);
        } catch (const std::exception& e) {
            std::printf("FAIL %s - unexpected error: %s\n", suite.c_str(), e.what());
            std::printf("criterion %d (%s): FAIL\n", criterion, suite.c_str());
            ++failed;
            continue;
        }
        bool all = true;
        for (const rotlab::verify::Check& c : checks) {
            std::printf("%s %s - %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                        c.detail.c_str());
            all = all && c.pass;
        }
        std::printf("criterion %d (%s): %s\n", criterion, suite.c_str(),
                    all ? "PASS" : "FAIL");
        if (!all) ++failed;
    }
    std::printf("acceptance: %d/%d criteria passed (seed %llu)\n", criterion - failed,
                criterion, static_cast<unsigned long long>(seed));
    return failed == 0 ? 0 : 1;
}
