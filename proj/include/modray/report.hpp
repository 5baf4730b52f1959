#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace modray {

/// Machine-readable experiment report.  Deterministic given (seed, stream):
/// serializing twice with the same inputs yields identical bytes.
struct Report {
    std::string experiment;
    uint32_t q = 0;
    uint64_t seed = 0;
    uint64_t samples = 0;
    double statistic = 0;
    int64_t dof = 0;
    double threshold = 0;
    bool pass = false;
    nlohmann::ordered_json tables = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["experiment"] = experiment;
        j["q"] = q;
        j["seed"] = seed;
        j["samples"] = samples;
        j["statistic"] = statistic;
        j["dof"] = dof;
        j["threshold"] = threshold;
        j["pass"] = pass;
        j["tables"] = tables;
        return j;
    }
};

/// Structural check mirroring schemas/report.schema.json.
bool report_json_is_valid(const nlohmann::ordered_json& j);

}  // namespace modray
