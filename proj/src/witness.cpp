#include "urprior/witness.hpp"

#include <algorithm>

#include "urprior/cohomology.hpp"

namespace urprior {

namespace {

Rational power_of_two(long exponent) {
  const Integer magnitude = Integer(1) << static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(Integer(1), magnitude) : Rational(magnitude);
}

}  // namespace

AgentSystem generate_counterexample(const SimplicialComplex& complex) {
  const auto cocycle = noncoboundary_cocycle(complex);
  if (!cocycle) throw NoHoleError();

  // f(i, j) for any ordered pair in a common simplex; f(i, i) = 0.
  auto f = [&](std::size_t i, std::size_t j) -> long {
    if (i == j) return 0;
    const Simplex edge = i < j ? Simplex{i, j} : Simplex{j, i};
    const long value = numerator(cocycle->at(complex, edge)).convert_to<long>();
    return i < j ? value : -value;
  };

  RawSystem raw;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> weights(complex.num_vertices());
  for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max(complex.dimension(), 0)); ++k) {
    for (const auto& x : complex.simplices(k)) {
      const std::size_t outcome = raw.outcomes.size();
      raw.outcomes.push_back(complex.label(x));
      const std::size_t top = x.back();
      for (auto i : x) weights[i].emplace_back(outcome, power_of_two(f(i, top)));
    }
  }

  for (std::size_t i = 0; i < complex.num_vertices(); ++i) {
    Rational total(0);
    for (const auto& [x, w] : weights[i]) total += w;
    RawAgent agent{complex.vertices()[i], {}};
    for (const auto& [x, w] : weights[i]) agent.credence.emplace_back(raw.outcomes[x], to_string(w / total));
    raw.agents.push_back(std::move(agent));
  }
  return validate(raw);
}

}  // namespace urprior
