#include "modray/report.hpp"

namespace modray {

bool report_json_is_valid(const nlohmann::ordered_json& j) {
    if (!j.is_object()) return false;
    return j.contains("experiment") && j["experiment"].is_string() &&
           j.contains("q") && j["q"].is_number_unsigned() &&
           j.contains("seed") && j["seed"].is_number_unsigned() &&
           j.contains("samples") && j["samples"].is_number_unsigned() &&
           j.contains("statistic") && j["statistic"].is_number() &&
           j.contains("dof") && j["dof"].is_number_integer() &&
           j.contains("threshold") && j["threshold"].is_number() &&
           j.contains("pass") && j["pass"].is_boolean() &&
           j.contains("tables") && j["tables"].is_object();
}

}  // namespace modray
