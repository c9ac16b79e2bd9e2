// Acceptance suite: runs each acceptance criterion and prints one line per
// criterion. Exits nonzero when any criterion fails.

#include <cstdio>
#include <exception>

#include "kr/verify.hpp"

using namespace kr;

namespace {

int failures = 0;

void line(int number, const char* name, const SuiteReport& r) {
    std::printf("criterion %2d [%s]: %s (%d/%d checks)\n", number, name,
                r.pass() ? "PASS" : "FAIL", static_cast<int>(r.checks.size()) - r.failures(),
                static_cast<int>(r.checks.size()));
    if (!r.pass()) {
        ++failures;
        for (const auto& c : r.checks)
            if (!c.pass) std::printf("    FAIL %s :: %s\n", c.name.c_str(), c.detail.c_str());
    }
}

void combined(int number, const char* name, const std::vector<SuiteReport>& rs) {
    SuiteReport merged{name, {}};
    for (const auto& r : rs)
        for (const auto& c : r.checks) merged.checks.push_back(c);
    line(number, name, merged);
}

}  // namespace

int main() {
    Envelope env;
    try {
        line(1, "classical decomposition", verify_classical_decomposition(env));
        line(2, "coenergy formula with m' route", verify_coenergy(env));
        line(3, "decomposition theorem", verify_decomposition_theorem(env));
        line(4, "reversing automorphism suite", verify_sigma(env));
        line(5, "energy relations on tops/max", verify_energy_relations(env));
        line(6, "R-matrix suite", verify_rmatrix(env));
        line(7, "splitting suite", verify_splitting(env));
        line(8, "type-A one-dim sums vs Lusztig", verify_shimozono(env));
        combined(9, "X=K and transpose", {verify_xk(env), verify_transpose(env)});
        line(10, "golden fixtures", verify_golden(env));
        line(11, "positivity scan", verify_positivity(env));
    } catch (const std::exception& e) {
        std::printf("acceptance aborted: %s\n", e.what());
        return 2;
    }
    std::printf(failures ? "ACCEPTANCE: FAIL (%d criteria)\n" : "ACCEPTANCE: PASS\n", failures);
    return failures ? 1 : 0;
}
