#ifndef IDEALKIT_REPORT_HPP
#define IDEALKIT_REPORT_HPP

#include <string>
#include <vector>

namespace idealkit {

struct StepResult {
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// Machine-checkable record of one scenario run. JSON output is stable
/// and deterministic apart from duration_ms.
struct VerificationReport {
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<StepResult> steps;
    long long duration_ms = 0;

    bool overall_pass() const;
    std::string to_json() const;   // schema verification-report/v1
    std::string to_human() const;  // one line per step with a check mark
};

}  // namespace idealkit

#endif
