#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abelorb {

struct CriterionResult {
    int id = 0;
    std::string group;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    /// One of suite_groups(); all criteria when empty.
    std::optional<std::string> only;
    std::uint64_t seed = 42;
};

/// classification, duality, counting, invariants, conjecture, normal-form, structure
const std::vector<std::string>& suite_groups();

/// Runs the selected criteria in id order. Throws DomainError on an unknown
/// group. A criterion that throws is reported as FAIL with the message.
std::vector<CriterionResult> run_suite(const SuiteOptions& options);

/// "PASS [ 1] classification: title (detail)"; timing is left out so the
/// line is reproducible.
std::string format_result(const CriterionResult& r);

}  // namespace abelorb
