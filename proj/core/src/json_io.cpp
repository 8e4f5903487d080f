#include "scott/json_io.hpp"

#include <fstream>

#include "scott/errors.hpp"

namespace scott {

using nlohmann::json;

MetricSpace parse_metric_space_raw(const json& doc) {
  if (!doc.is_object() || !doc.contains("labels") || !doc.contains("dist")) {
    throw ValidationError("metric space document needs 'labels' and 'dist'");
  }
  std::vector<std::string> labels;
  for (const auto& l : doc.at("labels")) labels.push_back(l.get<std::string>());
  std::vector<std::vector<Rational>> dist;
  for (const auto& row : doc.at("dist")) {
    std::vector<Rational> r;
    for (const auto& cell : row) {
      if (cell.is_number_integer()) {
        r.push_back(Rational(cell.get<std::int64_t>()));
      } else {
        r.push_back(Rational::parse(cell.get<std::string>()));
      }
    }
    dist.push_back(std::move(r));
  }
  return MetricSpace(std::move(labels), std::move(dist));
}

MetricSpace parse_metric_space(const json& doc) {
  MetricSpace space = parse_metric_space_raw(doc);
  auto report = validate_metric(space);
  if (!report.empty()) throw ValidationError(report.front().message);
  return space;
}

MetricSpace parse_metric_space_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed metric space document: ") +
                          e.what());
  }
  return parse_metric_space(doc);
}

MetricSpace load_metric_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open space file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_metric_space_text(text);
}

json metric_space_to_json(const MetricSpace& space) {
  json doc;
  doc["labels"] = space.labels();
  json rows = json::array();
  for (int i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < space.size(); ++j) {
      row.push_back(space.dist(i, j).to_string());
    }
    rows.push_back(std::move(row));
  }
  doc["dist"] = std::move(rows);
  return doc;
}

json net_family_to_json(const NetFamily& nets) {
  json doc;
  json levels = json::array();
  for (int n = 0; n <= nets.stored_depth(); ++n) levels.push_back(nets.net(n));
  doc["nets"] = std::move(levels);
  doc["terminal_depth"] = nets.terminal_depth();
  return doc;
}

namespace {
const char* axiom_name(MetricViolation::Axiom a) {
  switch (a) {
    case MetricViolation::Axiom::Shape: return "shape";
    case MetricViolation::Axiom::Diagonal: return "diagonal";
    case MetricViolation::Axiom::Positivity: return "positivity";
    case MetricViolation::Axiom::Symmetry: return "symmetry";
    default: return "triangle";
  }
}
}  // namespace

json violations_to_json(const std::vector<MetricViolation>& report) {
  json out = json::array();
  for (const auto& v : report) {
    json e;
    e["axiom"] = axiom_name(v.axiom);
    json idx = json::array();
    idx.push_back(v.i);
    idx.push_back(v.j);
    if (v.k >= 0) idx.push_back(v.k);
    e["indices"] = std::move(idx);
    e["message"] = v.message;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace scott
