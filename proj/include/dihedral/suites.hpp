#pragma once

#include <string>
#include <vector>

#include "dihedral/io.hpp"

namespace dihedral {

struct SuiteResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // summary on success, first counterexample on failure
    Json artifact;       // deterministic payload; no timings
    double seconds = 0;
};

// Suite names in criterion order: chevalley, algebra, concavity, limits, cones, irredundancy,
// classical, census, semistable, determinism.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
SuiteResult run_suite(const std::string& name);
// Criterion 10: reruns the given suites and compares artifact digests with the first results.
SuiteResult determinism_check(const std::vector<SuiteResult>& first);

}  // namespace dihedral
