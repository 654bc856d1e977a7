#include "modcat/report.hpp"

namespace modcat {

void Report::merge(const std::string& key, const Report& r) {
    details[key] = to_json(r);
    if (!r.passed) {
        passed = false;
        violation_count += r.violation_count;
        for (const auto& v : r.violations)
            if (violations.size() < violation_cap) violations.push_back(Json{{"in", key}, {"violation", v}});
    }
}

Json to_json(const Report& r) {
    Json j;
    j["check"] = r.check;
    j["params"] = r.params;
    j["passed"] = r.passed;
    j["violations"] = r.violations;
    j["calibration"] = r.calibration;
    if (!r.details.empty()) j["details"] = r.details;
    if (r.violation_count > r.violations.size()) j["violation_count"] = r.violation_count;
    return j;
}

}  // namespace modcat
