#include "urprior/oracle.hpp"

#include <deque>

namespace urprior {

std::optional<Measure> feasibility_oracle(const AgentSystem& system) {
  const std::size_t n = system.size();

  // Who puts positive mass on each outcome.
  std::map<OutcomeIndex, std::vector<AgentIndex>> positive;
  for (AgentIndex i = 0; i < n; ++i)
    for (const auto& [x, p] : system.agent(i).mass)
      if (p > 0) positive[x].push_back(i);

  std::vector<std::optional<Rational>> share(n);
  for (AgentIndex root = 0; root < n; ++root) {
    if (share[root]) continue;
    share[root] = Rational(1);
    std::deque<AgentIndex> queue{root};
    while (!queue.empty()) {
      const AgentIndex i = queue.front();
      queue.pop_front();
      for (const auto& [x, p] : system.agent(i).mass) {
        if (p == 0) continue;
        for (AgentIndex j : positive[x]) {
          const Rational implied = p * *share[i] / system.agent(j).at(x);
          if (!share[j]) {
            share[j] = implied;
            queue.push_back(j);
          } else if (*share[j] != implied) {
            return std::nullopt;
          }
        }
      }
    }
  }

  Measure unnormalized;
  for (AgentIndex i = 0; i < n; ++i) {
    if (*share[i] <= 0) return std::nullopt;
    for (const auto& [x, p] : system.agent(i).mass) {
      const Rational value = p * *share[i];
      auto [it, inserted] = unnormalized.emplace(x, value);
      if (!inserted && it->second != value) return std::nullopt;
    }
  }

  Rational total(0);
  for (const auto& [x, m] : unnormalized) total += m;
  if (total <= 0) return std::nullopt;
  for (auto& [x, m] : unnormalized) m /= total;
  return unnormalized;
}

}  // namespace urprior
