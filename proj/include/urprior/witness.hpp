#pragma once

#include <stdexcept>

#include "urprior/complex.hpp"
#include "urprior/credence.hpp"

namespace urprior {

/// Thrown when a complex has H^1 = 0, so every pairwise compatible system on
/// it already has an ur-prior.
class NoHoleError : public std::runtime_error {
 public:
  NoHoleError() : std::runtime_error("complex has vanishing first cohomology; no counterexample exists") {}
};

/// Builds a pairwise compatible system whose overlap complex is `complex` and
/// which has no ur-prior. Outcomes are the simplices of the complex, labelled
/// "(v0,v1,...)"; agent i is aware of every simplex containing i and weights a
/// simplex x by 2^f(i, max x), where f is the integer non-coboundary cocycle
/// extended antisymmetrically. Throws NoHoleError when H^1 = 0.
AgentSystem generate_counterexample(const SimplicialComplex& complex);

}  // namespace urprior
