#pragma once

#include <string>

#include <json.hpp>

namespace modcat {

using Json = nlohmann::ordered_json;

struct Report {
    std::string check;
    Json params = Json::object();
    bool passed = true;
    Json violations = Json::array();
    Json calibration = Json::object();
    Json details = Json::object();
    std::size_t violation_count = 0;
    std::size_t violation_cap = 50;

    void fail(Json v) {
        passed = false;
        ++violation_count;
        if (violations.size() < violation_cap) violations.push_back(std::move(v));
    }
    // Folds another report's outcome in under details[key].
    void merge(const std::string& key, const Report& r);
};

Json to_json(const Report& r);

}  // namespace modcat
