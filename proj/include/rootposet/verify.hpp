#pragma once

// Verification harness: every theorem and table check, grouped into suites.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rootposet {

enum class Suite { Delta, Weights, Ad, Abelian, Covering, All };

/// Throws UnsupportedInput for an unknown name.
Suite parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct VerifyOptions {
    Suite suite = Suite::All;
    int max_rank = 8;
    /// Check every ideal of E7 and E8 too, and run the geometric checks on
    /// every ideal of every system.
    bool exhaustive = false;
    std::size_t sample_size = 500;
    std::uint64_t seed = 20240601;
};

enum class Status { Pass, Fail, Note };

struct CheckResult {
    int criterion = 0;  // acceptance criterion the check belongs to
    std::string suite;
    std::string name;
    Status status = Status::Pass;
    std::size_t cases = 0;
    std::string detail;  // witnesses on failure, the observation for notes
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    std::size_t failures() const;
    /// One line per check, then a summary line. Contains no timings, so it is
    /// byte-identical across runs that pass.
    std::string text() const;
};

/// Throws UnsupportedInput when max_rank is outside [1, 8].
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace rootposet
