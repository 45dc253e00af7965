#pragma once

#include <string>
#include <vector>

namespace l3kit {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// The full fixture property suite: one result per criterion, exact
// (zero-tolerance) equalities throughout.
std::vector<CriterionResult> run_acceptance();

// "PASS  3  maurer-cartan-equivalence  (0.12s)  <detail>"
std::string format_criterion(const CriterionResult& c);

} // namespace l3kit
