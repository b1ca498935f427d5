#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "urprior/compat.hpp"
#include "urprior/complex.hpp"
#include "urprior/credence.hpp"

namespace urprior {

using ordered_json = nlohmann::ordered_json;

/// Everything `urprior check` prints.
struct CheckReport {
  std::size_t num_agents = 0;
  std::size_t num_outcomes = 0;
  CompatibilityReport pairwise;
  std::vector<std::size_t> counts;  // |X_0|, |X_1|, ... up to max_dim
  std::size_t h1 = 0;
  UrPriorResult result;
};

/// max_dim is clamped to at least 2 so that H^1 is defined.
CheckReport run_check(const AgentSystem& system, std::size_t max_dim = 2);

ordered_json to_json(const AgentSystem& system, const CheckReport& report);
ordered_json certificate_json(const AgentSystem& system, const Certificate& certificate);
ordered_json measure_json(const AgentSystem& system, const Measure& measure);
ordered_json invalid_json(const std::vector<Violation>& violations);
ordered_json malformed_json(const std::string& message);

/// Cohomology summary of a complex: counts, ranks of each known δ_j, and the
/// requested H^k. Optional labelled coboundary matrices.
ordered_json cohomology_json(const SimplicialComplex& complex, std::size_t k, bool dump_matrices);

ordered_json oracle_json(const AgentSystem& system, const std::optional<Measure>& measure);

/// Human-readable renderings of the JSON documents above.
std::string render_check(const ordered_json& report);
std::string render_cohomology(const ordered_json& report);
std::string render_oracle(const ordered_json& report);
std::string render_invalid(const ordered_json& report);

}  // namespace urprior
