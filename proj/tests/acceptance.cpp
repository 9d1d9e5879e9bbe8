// One PASS/FAIL line per acceptance criterion. Tolerances are exact (zero) throughout:
// every check compares field elements or integers, never floating values.

#include <cstdio>
#include <exception>
#include <vector>

#include "dihedral/suites.hpp"

using namespace dihedral;

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kLimits[] = {5, 10, 5, 5, 600, 600, 1, 300, 600};

void report(const SuiteResult& r, double limit) {
    bool in_time = limit <= 0 || r.seconds <= limit;
    std::printf("criterion %2d %-13s %s  %.2fs  %s%s\n", r.criterion, r.name.c_str(), r.pass && in_time ? "PASS" : "FAIL",
                r.seconds, r.detail.c_str(), in_time ? "" : " (over time limit)");
    std::fflush(stdout);
}

}  // namespace

int main() {
    std::vector<SuiteResult> results;
    bool all = true;
    const auto& names = suite_names();
    for (std::size_t k = 0; k + 1 < names.size(); ++k) {
        SuiteResult r;
        try {
            r = run_suite(names[k]);
        } catch (const std::exception& e) {
            r.criterion = static_cast<int>(k) + 1;
            r.name = names[k];
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        report(r, kLimits[k]);
        all = all && r.pass && r.seconds <= kLimits[k];
        results.push_back(std::move(r));
    }
    auto det = determinism_check(results);
    report(det, 0);
    all = all && det.pass;
    return all ? 0 : 1;
}
