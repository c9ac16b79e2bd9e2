#pragma once

#include "kr/split.hpp"
#include "kr/weyl.hpp"

namespace kr {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // both sides of a failed identity
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

// The desk-scale verification envelope.
struct Envelope {
    // classical/coenergy/sigma crystals: these types, r <= 2, s <= max_s.
    std::vector<AffineType> item1_types{{Kind::OneOne, 5}, {Kind::Two, 4}, {Kind::One, 4}};
    int max_r = 2;
    int max_s = 3;
    // decomposition-theorem cases: per reversible kind at n, plus the
    // two-factor r-sum-3 case at n + 1.
    int dec_rank = 5;
};

SuiteReport verify_classical_decomposition(const Envelope& env = {});  // criterion 1
SuiteReport verify_coenergy(const Envelope& env = {});                 // criterion 2
SuiteReport verify_decomposition_theorem(const Envelope& env = {});    // criterion 3
SuiteReport verify_sigma(const Envelope& env = {});                    // criterion 4
SuiteReport verify_energy_relations(const Envelope& env = {});         // criterion 5
SuiteReport verify_rmatrix(const Envelope& env = {});                  // criterion 6
SuiteReport verify_splitting(const Envelope& env = {});                // criterion 7
SuiteReport verify_shimozono(const Envelope& env = {});                // criterion 8
SuiteReport verify_xk(const Envelope& env = {});                       // criterion 9 (X=K part)
SuiteReport verify_transpose(const Envelope& env = {});                // criterion 9 (transpose)
SuiteReport verify_golden(const Envelope& env = {});                   // criterion 10
SuiteReport verify_positivity(const Envelope& env = {});               // criterion 11

std::vector<SuiteReport> verify_all(const Envelope& env = {}, int jobs = 1);

// Renderings.
std::string report_text(const SuiteReport& r, bool verbose);
std::string report_json(const std::vector<SuiteReport>& rs);

}  // namespace kr
