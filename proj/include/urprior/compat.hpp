#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "urprior/complex.hpp"
#include "urprior/credence.hpp"
#include "urprior/numerics.hpp"

namespace urprior {

struct Mismatch {
  OutcomeIndex outcome;
  Rational conditional_first;   // P_i(x) / P_i(A_ij)
  Rational conditional_second;  // P_j(x) / P_j(A_ij)
};

/// Agents i < j give A_ij positive mass but condition to different measures.
/// `outcome` is the first mismatch in outcome order; `mismatches` lists all.
struct PairViolation {
  AgentIndex first;
  AgentIndex second;
  OutcomeIndex outcome;
  Rational conditional_first;
  Rational conditional_second;
  std::vector<Mismatch> mismatches;
};

/// A_ij is nonempty and exactly one of P_i(A_ij), P_j(A_ij) is zero.
struct Asymmetry {
  AgentIndex first;
  AgentIndex second;
  Rational mass_first;
  Rational mass_second;
};

struct CompatibilityReport {
  bool compatible = true;
  std::vector<PairViolation> violations;
  std::vector<Asymmetry> asymmetries;
};

CompatibilityReport pairwise_compatibility(const AgentSystem& system);

/// r_ij = P_i(A_ij) / P_j(A_ij) on each edge (i, j), i < j, aligned with
/// complex.simplices(1).
struct RatioCochain {
  std::vector<Simplex> edges;
  std::vector<Rational> ratios;

  /// r for the oriented step from -> to: r_ij when from < to, 1 / r_ji otherwise.
  /// Throws std::out_of_range when {from, to} is not an edge.
  Rational step(AgentIndex from, AgentIndex to) const;
};

RatioCochain ratio_cochain(const AgentSystem& system, const SimplicialComplex& complex);

/// Product of oriented ratios along a closed vertex walk (first == last).
Rational holonomy(const RatioCochain& r, const std::vector<AgentIndex>& closed_walk);

/// Positive λ with r_ij = λ_j / λ_i on every edge. Each component root has λ = 1.
struct Scaling {
  std::vector<Rational> lambda;
  std::vector<std::size_t> component;  // component id per vertex, numbered by smallest vertex
  std::size_t num_components = 0;
};

/// A non-tree edge whose ratio disagrees with the spanning-forest propagation,
/// closed into a cycle by the tree path. The walk starts and ends at its
/// smallest vertex and traverses the failing edge from lower to higher index.
struct CycleCertificate {
  std::vector<AgentIndex> cycle;
  Simplex failing_edge;
  Rational holonomy;
};

using ScalingResult = std::variant<Scaling, CycleCertificate>;

ScalingResult solve_scaling(const SimplicialComplex& complex, const RatioCochain& r);

/// Glues M_i = λ_i P_i and normalizes. Outcomes of ∪A_i are all present, zero
/// masses included. Throws std::logic_error if two agents disagree on a point
/// mass, which cannot happen when the preconditions of decide_urprior hold.
Measure glue_urprior(const AgentSystem& system, const std::vector<Rational>& lambda);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> diagnostics;

  explicit operator bool() const { return ok; }
};

/// Checks P|_{A_i} = P_i for every agent, P(A_i) > 0, and no mass outside ∪A_i.
VerifyReport verify_urprior(const AgentSystem& system, const Measure& p);

enum class Verdict { exists, none };

const char* to_string(Verdict v);

using Certificate = std::variant<PairViolation, Asymmetry, CycleCertificate>;

struct UrPriorResult {
  Verdict verdict = Verdict::none;
  std::optional<Measure> measure;
  std::optional<Certificate> certificate;
  std::optional<Scaling> scaling;
  /// False when the 1-skeleton is disconnected: other component weightings also work.
  bool unique = false;
};

/// Pairwise check, asymmetry check, then multiplicative coboundary solve and
/// gluing on the 1-skeleton. A returned measure has already passed verify_urprior;
/// failure there throws std::logic_error.
UrPriorResult decide_urprior(const AgentSystem& system);

}  // namespace urprior
