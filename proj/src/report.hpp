#pragma once

#include "tensor.hpp"

#include <string>
#include <vector>

namespace l3kit {

// One failed identity instance: which equation, on which basis tuple, and
// both evaluated sides.
struct Violation {
    std::string equation;
    Index tuple;
    Vec lhs;
    Vec rhs;
};

// Outcome of an axiom check. `checked` counts every identity instance
// evaluated; only the first `kMaxStoredViolations` offenders are stored but
// `violations_total` counts them all.
struct Report {
    static constexpr int kMaxStoredViolations = 10;

    bool ok = true;
    long checked = 0;
    std::vector<Violation> violations;
    long violations_total = 0;
    double seconds = 0.0;

    void record(std::string equation, Index tuple, Vec lhs, Vec rhs) {
        ok = false;
        ++violations_total;
        if (static_cast<int>(violations.size()) < kMaxStoredViolations)
            violations.push_back({std::move(equation), std::move(tuple), std::move(lhs), std::move(rhs)});
    }

    void tally(const Vec& lhs, const Vec& rhs, const char* equation, const Index& tuple) {
        ++checked;
        if (lhs != rhs) record(equation, tuple, lhs, rhs);
    }
};

} // namespace l3kit
