#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace deptree {

struct VerifyOptions {
    std::size_t oracle_limit = 10;
    std::size_t series_terms = 128;
    std::size_t table_size = 512;
    /// Corrupts one tree count before the checks run (harness hook).
    bool inject_fault = false;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    /// Null when every check passed.
    const CheckResult* first_failure() const;
};

/// Cross-checks counts, series identities, additive parameters and the
/// sampler against each other and against exhaustive enumeration.
VerifyReport run_verification(const VerifyOptions& options);

void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace deptree
