#pragma once

#include <string>

#include "critfix/planar_map.hpp"
#include "json.hpp"

namespace critfix {

inline constexpr const char* kSchema = "critfix/1";

nlohmann::json graph_to_json(const PlanarMap& g);
PlanarMap graph_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace critfix
