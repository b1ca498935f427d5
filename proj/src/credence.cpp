#include "urprior/credence.hpp"

#include <algorithm>
#include <set>

namespace urprior {

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (OutcomeIndex x = 0; x < labels_.size(); ++x) {
    if (!index_.emplace(labels_[x], x).second) {
      throw std::invalid_argument("duplicate outcome label \"" + labels_[x] + "\"");
    }
  }
}

std::optional<OutcomeIndex> OutcomeSpace::find(const std::string& label) const {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  return std::nullopt;
}

Rational CredenceFunction::at(OutcomeIndex x) const {
  if (auto it = mass.find(x); it != mass.end()) return it->second;
  return Rational(0);
}

Rational CredenceFunction::mass_of(std::span<const OutcomeIndex> event) const {
  Rational total(0);
  for (auto x : event) total += at(x);
  return total;
}

std::vector<std::string> AgentSystem::agent_names() const {
  std::vector<std::string> names;
  names.reserve(agents_.size());
  for (const auto& a : agents_) names.push_back(a.name);
  return names;
}

AgentIndex AgentSystem::agent_index(const std::string& name) const {
  for (AgentIndex i = 0; i < agents_.size(); ++i)
    if (agents_[i].name == name) return i;
  throw std::out_of_range("unknown agent \"" + name + "\"");
}

std::vector<OutcomeIndex> AgentSystem::common_support(std::span<const AgentIndex> group) const {
  if (group.empty()) throw std::invalid_argument("common_support: empty agent group");
  std::vector<OutcomeIndex> out;
  for (const auto& [x, p] : agent(group.front()).mass) {
    const bool shared = std::all_of(group.begin() + 1, group.end(),
                                    [&](AgentIndex k) { return agent(k).aware_of(x); });
    if (shared) out.push_back(x);
  }
  return out;
}

std::vector<OutcomeIndex> AgentSystem::union_support() const {
  std::set<OutcomeIndex> all;
  for (const auto& a : agents_)
    for (const auto& [x, p] : a.mass) all.insert(x);
  return {all.begin(), all.end()};
}

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::duplicate_outcome: return "duplicate_outcome";
    case Rule::duplicate_agent: return "duplicate_agent";
    case Rule::duplicate_entry: return "duplicate_entry";
    case Rule::bad_probability: return "bad_probability";
    case Rule::negative_mass: return "negative_mass";
    case Rule::sum_not_one: return "sum_not_one";
    case Rule::unknown_outcome: return "unknown_outcome";
    case Rule::empty_support: return "empty_support";
    case Rule::no_agents: return "no_agents";
  }
  return "unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string msg = "invalid agent system (" + std::to_string(violations.size()) + " violation";
  if (violations.size() != 1) msg += "s";
  msg += ")";
  for (const auto& v : violations) msg += "\n  " + v.message;
  return msg;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

namespace {

// Shared by check() and validate(): returns the parsed credences alongside the violations.
std::vector<CredenceFunction> parse_agents(const RawSystem& raw, std::vector<Violation>& out) {
  std::set<std::string> seen_outcomes;
  for (const auto& label : raw.outcomes) {
    if (!seen_outcomes.insert(label).second) {
      out.push_back({Rule::duplicate_outcome, "", label, "outcome \"" + label + "\" listed more than once"});
    }
  }
  if (raw.agents.empty()) out.push_back({Rule::no_agents, "", "", "system has no agents"});

  std::map<std::string, OutcomeIndex> index;
  for (OutcomeIndex x = 0; x < raw.outcomes.size(); ++x) index.emplace(raw.outcomes[x], x);

  std::set<std::string> seen_agents;
  std::vector<CredenceFunction> agents;
  for (const auto& ra : raw.agents) {
    const std::string who = "agent \"" + ra.name + "\"";
    if (!seen_agents.insert(ra.name).second) {
      out.push_back({Rule::duplicate_agent, ra.name, "", who + " listed more than once"});
    }
    CredenceFunction cf{ra.name, {}};
    Rational sum(0);
    bool sum_known = true;
    for (const auto& [label, literal] : ra.credence) {
      auto it = index.find(label);
      if (it == index.end()) {
        out.push_back({Rule::unknown_outcome, ra.name, label,
                       who + " assigns mass to \"" + label + "\", which is not in the outcome space"});
        sum_known = false;
        continue;
      }
      Rational p;
      try {
        p = parse_rational(literal);
      } catch (const std::invalid_argument& e) {
        out.push_back({Rule::bad_probability, ra.name, label, who + ", outcome \"" + label + "\": " + e.what()});
        sum_known = false;
        continue;
      }
      if (p < 0) {
        out.push_back({Rule::negative_mass, ra.name, label,
                       who + " assigns negative mass " + to_string(p) + " to \"" + label + "\""});
      }
      if (!cf.mass.emplace(it->second, p).second) {
        out.push_back({Rule::duplicate_entry, ra.name, label, who + " lists \"" + label + "\" more than once"});
        continue;
      }
      sum += p;
    }
    if (ra.credence.empty()) {
      out.push_back({Rule::empty_support, ra.name, "", who + " has an empty support"});
    } else if (sum_known && sum != 1) {
      out.push_back({Rule::sum_not_one, ra.name, "", "pmf of " + who + " sums to " + to_string(sum) + ", expected 1"});
    }
    agents.push_back(std::move(cf));
  }
  return agents;
}

}  // namespace

std::vector<Violation> check(const RawSystem& raw) {
  std::vector<Violation> violations;
  parse_agents(raw, violations);
  return violations;
}

AgentSystem validate(const RawSystem& raw) {
  std::vector<Violation> violations;
  auto agents = parse_agents(raw, violations);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return AgentSystem(OutcomeSpace(raw.outcomes), std::move(agents));
}

RawSystem to_raw(const AgentSystem& system) {
  RawSystem raw{system.space().labels(), {}};
  for (const auto& a : system.agents()) {
    RawAgent ra{a.name, {}};
    for (const auto& [x, p] : a.mass) ra.credence.emplace_back(system.space().label(x), to_string(p));
    raw.agents.push_back(std::move(ra));
  }
  return raw;
}

Rational overlap_mass(const AgentSystem& system, AgentIndex i, std::span<const AgentIndex> group) {
  if (i >= system.size()) throw std::out_of_range("agent index " + std::to_string(i) + " out of range");
  for (auto k : group)
    if (k >= system.size()) throw std::out_of_range("agent index " + std::to_string(k) + " out of range");
  if (std::find(group.begin(), group.end(), i) == group.end()) {
    throw std::invalid_argument("overlap_mass: agent \"" + system.agent(i).name + "\" is not in the group");
  }
  const auto common = system.common_support(group);
  return system.agent(i).mass_of(common);
}

Rational overlap_mass(const AgentSystem& system, const std::string& agent,
                      const std::vector<std::string>& group) {
  std::vector<AgentIndex> ids;
  ids.reserve(group.size());
  for (const auto& name : group) ids.push_back(system.agent_index(name));
  return overlap_mass(system, system.agent_index(agent), ids);
}

}  // namespace urprior
