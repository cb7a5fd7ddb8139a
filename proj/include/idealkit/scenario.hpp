#ifndef IDEALKIT_SCENARIO_HPP
#define IDEALKIT_SCENARIO_HPP

#include "idealkit/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace idealkit {

struct ScenarioOptions {
    /// Text substitutions applied to `{name}` placeholders; scenario
    /// `default` lines fill anything not given here.
    std::map<std::string, std::string> parameters;
    unsigned budget = 4;
};

/// Built-in scenario registry (embedded copies of fixtures/scenarios).
std::vector<std::string> scenario_ids();
const std::string& scenario_text(const std::string& id);

VerificationReport run_scenario(const std::string& id, const ScenarioOptions& opts = {});
/// Runs scenario statements from arbitrary text (e.g. a user fixture file).
VerificationReport run_scenario_text(const std::string& name, const std::string& text,
                                     const ScenarioOptions& opts = {});

}  // namespace idealkit

#endif
