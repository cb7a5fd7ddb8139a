#include "idealkit/report.hpp"

#include <json.hpp>

#include <sstream>

namespace idealkit {

using nlohmann::ordered_json;

bool VerificationReport::overall_pass() const {
    for (const auto& s : steps)
        if (!s.pass) return false;
    return true;
}

std::string VerificationReport::to_json() const {
    ordered_json j;
    j["schema"] = "verification-report/v1";
    j["scenario"] = scenario;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    ordered_json steps_json = ordered_json::array();
    for (const auto& s : steps) {
        ordered_json sj;
        sj["description"] = s.description;
        sj["expected"] = s.expected;
        sj["computed"] = s.computed;
        sj["pass"] = s.pass;
        steps_json.push_back(std::move(sj));
    }
    j["steps"] = steps_json;
    j["overall"] = overall_pass() ? "pass" : "fail";
    j["duration_ms"] = duration_ms;
    return j.dump(2);
}

std::string VerificationReport::to_human() const {
    std::ostringstream os;
    os << "scenario " << scenario;
    if (!parameters.empty()) {
        os << " (";
        for (std::size_t i = 0; i < parameters.size(); ++i) {
            if (i) os << ", ";
            os << parameters[i].first << "=" << parameters[i].second;
        }
        os << ")";
    }
    os << "\n";
    for (const auto& s : steps) {
        os << "  " << (s.pass ? "✓" : "✗") << " " << s.description << "\n";
        if (!s.pass) {
            os << "      expected: " << s.expected << "\n";
            os << "      computed: " << s.computed << "\n";
        }
    }
    os << (overall_pass() ? "PASS" : "FAIL") << " (" << steps.size() << " steps, "
       << duration_ms << " ms)\n";
    return os.str();
}

}  // namespace idealkit
