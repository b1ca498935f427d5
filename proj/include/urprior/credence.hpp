#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "urprior/numerics.hpp"

namespace urprior {

using OutcomeIndex = std::size_t;
using AgentIndex = std::size_t;

/// Point masses keyed by outcome index.
using Measure = std::map<OutcomeIndex, Rational>;

/// Finite outcome space with a fixed label order.
class OutcomeSpace {
 public:
  OutcomeSpace() = default;
  /// Throws std::invalid_argument on duplicate labels.
  explicit OutcomeSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(OutcomeIndex x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<OutcomeIndex> find(const std::string& label) const;

  bool operator==(const OutcomeSpace& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, OutcomeIndex> index_;
};

/// An agent's awareness set A_i and probability mass function P_i on it.
/// The key set of `mass` is A_i; zero entries are awareness without mass.
struct CredenceFunction {
  std::string name;
  std::map<OutcomeIndex, Rational> mass;

  bool aware_of(OutcomeIndex x) const { return mass.contains(x); }
  Rational at(OutcomeIndex x) const;
  Rational mass_of(std::span<const OutcomeIndex> event) const;

  bool operator==(const CredenceFunction&) const = default;
};

/// Unvalidated description, as read from a system file.
struct RawAgent {
  std::string name;
  std::vector<std::pair<std::string, std::string>> credence;  // outcome label -> probability literal
};

struct RawSystem {
  std::vector<std::string> outcomes;
  std::vector<RawAgent> agents;
};

/// Validated collection of agents. Agent order is the vertex order used by
/// every simplex orientation downstream.
class AgentSystem {
 public:
  const OutcomeSpace& space() const { return space_; }
  const std::vector<CredenceFunction>& agents() const { return agents_; }
  const CredenceFunction& agent(AgentIndex i) const { return agents_.at(i); }
  std::size_t size() const { return agents_.size(); }
  std::vector<std::string> agent_names() const;

  /// Throws std::out_of_range for an unknown name.
  AgentIndex agent_index(const std::string& name) const;

  /// Outcome indices in ∩_{k∈J} A_k, in outcome order. J must be nonempty.
  std::vector<OutcomeIndex> common_support(std::span<const AgentIndex> agents) const;

  /// Outcomes in ∪_i A_i, in outcome order.
  std::vector<OutcomeIndex> union_support() const;

  bool operator==(const AgentSystem&) const = default;

 private:
  friend AgentSystem validate(const RawSystem& raw);
  AgentSystem(OutcomeSpace space, std::vector<CredenceFunction> agents)
      : space_(std::move(space)), agents_(std::move(agents)) {}

  OutcomeSpace space_;
  std::vector<CredenceFunction> agents_;
};

enum class Rule {
  duplicate_outcome,
  duplicate_agent,
  duplicate_entry,
  bad_probability,
  negative_mass,
  sum_not_one,
  unknown_outcome,
  empty_support,
  no_agents,
};

const char* to_string(Rule rule);

struct Violation {
  Rule rule;
  std::string agent;    // empty when the rule is not agent-specific
  std::string outcome;  // empty when the rule is not outcome-specific
  std::string message;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Every rule broken by `raw`, in input order. Empty means valid.
std::vector<Violation> check(const RawSystem& raw);

/// Throws ValidationError carrying check(raw) when that list is nonempty.
AgentSystem validate(const RawSystem& raw);

/// Inverse of validate: probabilities rendered as lowest-terms fractions.
RawSystem to_raw(const AgentSystem& system);

/// P_i(∩_{k∈J} A_k). Requires i ∈ J; throws std::invalid_argument otherwise.
Rational overlap_mass(const AgentSystem& system, AgentIndex i, std::span<const AgentIndex> group);

/// Name-based form; throws std::out_of_range for unknown names.
Rational overlap_mass(const AgentSystem& system, const std::string& agent,
                      const std::vector<std::string>& group);

}  // namespace urprior
