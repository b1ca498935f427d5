#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "urprior/credence.hpp"

namespace urprior {

/// Malformed file: unreadable, not JSON, or the wrong shape.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::filesystem::path& path);

/// System file: {"outcomes": [...], "agents": [{"name": ..., "credence": {outcome: "p/q", ...}}]}.
/// Probabilities may be strings ("5/8", "0.3", "1") or JSON integers.
RawSystem read_system(const nlohmann::json& doc);

nlohmann::ordered_json write_system(const AgentSystem& system);

/// Complex file: {"vertices": [...], "facets": [[...], ...]}.
struct ComplexSpec {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
};

ComplexSpec read_complex(const nlohmann::json& doc);

bool looks_like_system(const nlohmann::json& doc);
bool looks_like_complex(const nlohmann::json& doc);

}  // namespace urprior
