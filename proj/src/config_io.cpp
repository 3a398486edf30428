#include "tverberg/config_io.hpp"

#include <fstream>
#include <sstream>

#include "tverberg/errors.hpp"

namespace tverberg {

using nlohmann::json;

json config_to_json(const PointConfig& config) {
  json points = json::array();
  for (const auto& pt : config.points) {
    json row = json::array();
    for (const auto& x : pt) row.push_back(format_rational(x));
    points.push_back(std::move(row));
  }
  json doc;
  doc["q"] = config.params.q;
  doc["d"] = config.params.d;
  doc["label"] = config.label;
  doc["seed"] = config.seed ? json(*config.seed) : json(nullptr);
  doc["points"] = std::move(points);
  return doc;
}

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) throw SchemaError("config: top level must be an object");
  const auto it = doc.find(name);
  if (it == doc.end()) throw SchemaError(std::string("config: missing field '") + name + "'");
  return *it;
}

int int_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer()) throw SchemaError(std::string("config: '") + name + "' must be an integer");
  return v.get<int>();
}

}  // namespace

PointConfig config_from_json(const json& doc, bool allow_large) {
  PointConfig config;
  try {
    config.params = make_params(int_field(doc, "q"), int_field(doc, "d"), allow_large);
  } catch (const InvalidParameter& e) {
    throw SchemaError(std::string("config: ") + e.what());
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw SchemaError("config: 'label' must be a string");
    config.label = doc["label"].get<std::string>();
  }
  if (doc.contains("seed") && !doc["seed"].is_null()) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      throw SchemaError("config: 'seed' must be an integer or null");
    }
    config.seed = doc["seed"].get<std::uint64_t>();
  }
  const json& points = field(doc, "points");
  if (!points.is_array()) throw SchemaError("config: 'points' must be an array");
  for (std::size_t a = 0; a < points.size(); ++a) {
    const json& row = points[a];
    if (!row.is_array()) throw SchemaError("config: points[" + std::to_string(a) + "] must be an array");
    Point pt;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::string where = "points[" + std::to_string(a) + "][" + std::to_string(k) + "]";
      if (!row[k].is_string()) throw SchemaError("config: " + where + " must be a \"num/den\" string");
      try {
        pt.push_back(parse_rational(row[k].get<std::string>()));
      } catch (const InvalidParameter& e) {
        throw SchemaError("config: " + where + ": " + e.what());
      }
    }
    config.points.push_back(std::move(pt));
  }
  try {
    validate_config(config);
  } catch (const SchemaError& e) {
    throw SchemaError(std::string("config: ") + e.what());
  }
  return config;
}

PointConfig load_config(const std::filesystem::path& path, bool allow_large) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
  try {
    return config_from_json(doc, allow_large);
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void save_config(const PointConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << config_to_json(config).dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace tverberg
