#pragma once

#include <filesystem>

#include <json.hpp>

#include "tverberg/geometry.hpp"

namespace tverberg {

/// {"q", "d", "label", "seed" (int or null), "points": [["num/den", ...], ...]}
nlohmann::json config_to_json(const PointConfig& config);

/// Throws SchemaError with the offending location on any malformed field or
/// violated PointConfig invariant.
PointConfig config_from_json(const nlohmann::json& doc, bool allow_large = false);

PointConfig load_config(const std::filesystem::path& path, bool allow_large = false);

/// Throws std::runtime_error if the file cannot be written.
void save_config(const PointConfig& config, const std::filesystem::path& path);

}  // namespace tverberg
