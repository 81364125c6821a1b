#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ods/tree.hpp"

namespace ods {

using json = nlohmann::json;

// Interchange format: {"parents":[0,1,2,2]} — 1-based vertex indices with 0
// marking the first vertex's missing parent.
inline json instance_to_json(const OnlineTreeInput& in) {
  json j;
  auto& arr = j["parents"] = json::array();
  for (int p : in.parents) arr.push_back(p + 1);
  return j;
}

inline OnlineTreeInput instance_from_json(const json& j) {
  if (!j.contains("parents") || !j["parents"].is_array())
    throw std::invalid_argument("instance json: missing \"parents\" array");
  OnlineTreeInput in;
  for (const auto& e : j["parents"]) {
    if (!e.is_number_integer()) throw std::invalid_argument("instance json: non-integer parent");
    in.parents.push_back(e.get<int>() - 1);
  }
  return in;
}

inline OnlineTreeInput load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  json j;
  f >> j;
  return instance_from_json(j);
}

inline void save_instance(const OnlineTreeInput& in, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << instance_to_json(in).dump(2) << "\n";
}

}  // namespace ods
