#pragma once

#include <string>
#include <vector>

#include "scott/json_io.hpp"
#include "scott/metric_space.hpp"

namespace scott::testing {

inline MetricSpace load_fixture(const std::string& name) {
  return load_metric_space(std::string(SCOTT_DATA_DIR) + "/" + name + ".json");
}

// Builds a space from a matrix of rational literals, labels "p0".."pN".
inline MetricSpace make_space(
    const std::vector<std::vector<std::string>>& matrix) {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> dist;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    labels.push_back("p" + std::to_string(i));
    std::vector<Rational> row;
    for (const auto& cell : matrix[i]) row.push_back(Rational::parse(cell));
    dist.push_back(std::move(row));
  }
  return MetricSpace(std::move(labels), std::move(dist));
}

}  // namespace scott::testing
