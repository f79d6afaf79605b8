#pragma once

// Accumulating pass/fail report shared by all verification routines.  Checks
// append a labelled failure instead of aborting, so a verification run can
// list every counterexample it found.

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace qla {

struct CheckReport {
    std::vector<std::string> failures;
    std::size_t checks = 0;

    bool ok() const { return failures.empty(); }

    void check(bool cond, const std::string& label) {
        ++checks;
        if (!cond) failures.push_back(label);
    }

    void fail(const std::string& label) {
        ++checks;
        failures.push_back(label);
    }

    void merge(const CheckReport& o) {
        checks += o.checks;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }

    void print(std::ostream& os, std::size_t limit = 10) const {
        os << checks << " checks, " << failures.size() << " failures\n";
        for (std::size_t k = 0; k < failures.size() && k < limit; ++k)
            os << "  [fail] " << failures[k] << "\n";
        if (failures.size() > limit)
            os << "  ... " << failures.size() - limit << " more\n";
    }
};

}  // namespace qla
