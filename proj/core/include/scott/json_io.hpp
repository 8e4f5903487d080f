#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "scott/metric_space.hpp"
#include "scott/net_family.hpp"

namespace scott {

// Metric space schema: { "labels": [string...], "dist": [[string...]...] }
// with each entry a rational literal "p/q" or an integer string.
MetricSpace parse_metric_space(const nlohmann::json& doc);
// Shape-checked only; metric axioms left to the caller.
MetricSpace parse_metric_space_raw(const nlohmann::json& doc);
MetricSpace parse_metric_space_text(const std::string& text);
MetricSpace load_metric_space(const std::string& path);
nlohmann::json metric_space_to_json(const MetricSpace& space);

// Net family schema: { "nets": [[index...]...], "terminal_depth": n }.
nlohmann::json net_family_to_json(const NetFamily& nets);

nlohmann::json violations_to_json(const std::vector<MetricViolation>& report);

}  // namespace scott
