#pragma once
// Verification suites: randomized property checks and frozen regression
// thresholds covering winding numbers, the horseshoe, the gallery systems,
// and the shared infrastructure.  The CLI exposes them as `verify [SUITE]`.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rotlab::verify {

struct Check {
    std::string name;    // "suite/check" identifier
    bool pass = false;
    std::string detail;  // measured values backing the verdict
};

// All suite names in execution order.
std::vector<std::string> suite_names();

// Runs one suite by exact name.  Throws precondition_error on unknown names.
std::vector<Check> run_suite(const std::string& name, std::uint64_t rng_seed);

// Runs every suite whose name equals or starts with `selector` ("all" runs
// everything), printing one "PASS name - detail" / "FAIL name - detail" line
// per check plus a summary line.  Returns 0 iff every check passed.  Throws
// precondition_error when the selector matches nothing.
int run(const std::string& selector, std::uint64_t rng_seed, std::ostream& out);

}  // namespace rotlab::verify
