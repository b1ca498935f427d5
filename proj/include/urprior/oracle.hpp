#pragma once

#include <optional>

#include "urprior/credence.hpp"

namespace urprior {

/// Brute-force ur-prior search that never looks at the overlap complex.
/// Unknowns are the per-agent masses s_i = P(A_i); two agents that both put
/// positive mass on a shared outcome x are linked by P_i(x) s_i = P_j(x) s_j.
/// Links are propagated over the outcome-sharing graph, one s fixed per
/// class, and every pointwise constraint is then checked. Returns a witness
/// measure, or nullopt when the constraints are infeasible.
std::optional<Measure> feasibility_oracle(const AgentSystem& system);

}  // namespace urprior
