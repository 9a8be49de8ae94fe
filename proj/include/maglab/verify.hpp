#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Randomized audit of the structure and connection identities. Each
// property re-derives its expectation independently and reports the worst
// deviation seen, so the suite doubles as a regression canary: the
// optional phi fault (a deliberate sign flip) must make the phi-dependent
// properties fail.

namespace maglab {

struct VerifyOptions {
    std::uint64_t seed = 42;
    int trials = 1000;
    bool corrupt_phi = false;  // fault injection for suite sensitivity checks
};

struct PropertyResult {
    std::string name;
    double max_err = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct VerifyReport {
    std::vector<PropertyResult> properties;
    bool all_pass() const;
};

VerifyReport run_verify_suite(const VerifyOptions& opts);

}  // namespace maglab
