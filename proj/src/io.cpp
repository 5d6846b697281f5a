#include "critfix/io.hpp"

#include <fstream>

namespace critfix {

nlohmann::json graph_to_json(const PlanarMap& g) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["darts"] = g.darts();
  j["opposite"] = g.opp_table();
  j["next"] = g.nxt_table();
  if (!g.vertex_names.empty()) {
    // names keyed by the least dart of each vertex so they survive relabeling of vertex ids
    nlohmann::json names = nlohmann::json::object();
    for (int v = 0; v < g.vertex_count() && v < static_cast<int>(g.vertex_names.size()); ++v)
      names[std::to_string(g.vertex_darts(v).front())] = g.vertex_names[v];
    j["vertex_names"] = names;
  }
  return j;
}

PlanarMap graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("graph document must be a JSON object");
  if (!j.contains("opposite") || !j.contains("next")) throw DomainError("graph document needs opposite and next");
  std::vector<int> opp, nxt;
  try {
    opp = j.at("opposite").get<std::vector<int>>();
    nxt = j.at("next").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed graph document: ") + e.what());
  }
  if (j.contains("darts") && j["darts"].get<int>() != static_cast<int>(opp.size()))
    throw DomainError("dart count does not match tables");
  PlanarMap g(opp, nxt);
  if (j.contains("vertex_names")) {
    const auto& vn = j["vertex_names"];
    g.vertex_names.assign(g.vertex_count(), "");
    if (vn.is_array()) {
      for (std::size_t v = 0; v < vn.size() && v < g.vertex_names.size(); ++v) g.vertex_names[v] = vn[v].get<std::string>();
    } else if (vn.is_object()) {
      for (const auto& [k, val] : vn.items()) {
        int x = std::stoi(k);
        if (x < 0 || x >= g.darts()) throw DomainError("vertex_names refers to a missing dart");
        g.vertex_names[g.vertex_of(x)] = val.get<std::string>();
      }
    }
  }
  return g;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace critfix
