#include "urprior/io.hpp"

#include <fstream>
#include <sstream>

namespace urprior {

nlohmann::json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

namespace {

const nlohmann::json& member(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(where + ": missing \"" + key + "\"");
  return *it;
}

std::vector<std::string> string_array(const nlohmann::json& value, const std::string& where) {
  if (!value.is_array()) throw FormatError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw FormatError(where + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

RawSystem read_system(const nlohmann::json& doc) {
  RawSystem raw;
  raw.outcomes = string_array(member(doc, "outcomes", "system"), "system.outcomes");
  const auto& agents = member(doc, "agents", "system");
  if (!agents.is_array()) throw FormatError("system.agents: expected an array");
  for (std::size_t a = 0; a < agents.size(); ++a) {
    const std::string where = "system.agents[" + std::to_string(a) + "]";
    const auto& name = member(agents[a], "name", where);
    if (!name.is_string()) throw FormatError(where + ".name: expected a string");
    const auto& credence = member(agents[a], "credence", where);
    if (!credence.is_object()) throw FormatError(where + ".credence: expected an object");

    RawAgent agent{name.get<std::string>(), {}};
    for (const auto& [label, value] : credence.items()) {
      if (value.is_string()) {
        agent.credence.emplace_back(label, value.get<std::string>());
      } else if (value.is_number_integer()) {
        agent.credence.emplace_back(label, value.dump());
      } else {
        throw FormatError(where + ".credence[\"" + label + "\"]: probabilities must be fraction strings");
      }
    }
    raw.agents.push_back(std::move(agent));
  }
  return raw;
}

nlohmann::ordered_json write_system(const AgentSystem& system) {
  nlohmann::ordered_json doc;
  doc["outcomes"] = system.space().labels();
  doc["agents"] = nlohmann::ordered_json::array();
  for (const auto& a : system.agents()) {
    nlohmann::ordered_json credence = nlohmann::ordered_json::object();
    for (const auto& [x, p] : a.mass) credence[system.space().label(x)] = to_string(p);
    doc["agents"].push_back({{"name", a.name}, {"credence", std::move(credence)}});
  }
  return doc;
}

ComplexSpec read_complex(const nlohmann::json& doc) {
  ComplexSpec spec;
  spec.vertices = string_array(member(doc, "vertices", "complex"), "complex.vertices");
  const auto& facets = member(doc, "facets", "complex");
  if (!facets.is_array()) throw FormatError("complex.facets: expected an array of arrays");
  for (std::size_t f = 0; f < facets.size(); ++f) {
    spec.facets.push_back(string_array(facets[f], "complex.facets[" + std::to_string(f) + "]"));
  }
  return spec;
}

bool looks_like_system(const nlohmann::json& doc) { return doc.is_object() && doc.contains("agents"); }
bool looks_like_complex(const nlohmann::json& doc) { return doc.is_object() && doc.contains("facets"); }

}  // namespace urprior
