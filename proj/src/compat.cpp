#include "urprior/compat.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace urprior {

CompatibilityReport pairwise_compatibility(const AgentSystem& system) {
  CompatibilityReport report;
  for (AgentIndex i = 0; i < system.size(); ++i) {
    for (AgentIndex j = i + 1; j < system.size(); ++j) {
      const AgentIndex pair[] = {i, j};
      const auto overlap = system.common_support(pair);
      if (overlap.empty()) continue;

      const auto& pi = system.agent(i);
      const auto& pj = system.agent(j);
      const Rational mi = pi.mass_of(overlap);
      const Rational mj = pj.mass_of(overlap);
      if (mi == 0 && mj == 0) continue;
      if (mi == 0 || mj == 0) {
        report.asymmetries.push_back({i, j, mi, mj});
        continue;
      }

      std::vector<Mismatch> mismatches;
      for (auto x : overlap) {
        if (pi.at(x) * mj != pj.at(x) * mi) mismatches.push_back({x, pi.at(x) / mi, pj.at(x) / mj});
      }
      if (!mismatches.empty()) {
        const auto& head = mismatches.front();
        report.violations.push_back(
            {i, j, head.outcome, head.conditional_first, head.conditional_second, std::move(mismatches)});
      }
    }
  }
  report.compatible = report.violations.empty();
  return report;
}

Rational RatioCochain::step(AgentIndex from, AgentIndex to) const {
  const Simplex key = from < to ? Simplex{from, to} : Simplex{to, from};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) throw std::out_of_range("not an edge of the ratio cochain");
  const Rational& r = ratios[static_cast<std::size_t>(it - edges.begin())];
  return from < to ? r : Rational(1) / r;
}

RatioCochain ratio_cochain(const AgentSystem& system, const SimplicialComplex& complex) {
  RatioCochain out;
  out.edges = complex.simplices(1);
  out.ratios.reserve(out.edges.size());
  for (const auto& e : out.edges) {
    const auto overlap = system.common_support(e);
    const Rational mi = system.agent(e[0]).mass_of(overlap);
    const Rational mj = system.agent(e[1]).mass_of(overlap);
    if (mi <= 0 || mj <= 0) {
      throw std::invalid_argument("ratio_cochain: edge " + complex.label(e) +
                                  " does not have positive overlap mass on both sides");
    }
    out.ratios.push_back(mi / mj);
  }
  return out;
}

Rational holonomy(const RatioCochain& r, const std::vector<AgentIndex>& closed_walk) {
  Rational product(1);
  for (std::size_t s = 0; s + 1 < closed_walk.size(); ++s) product *= r.step(closed_walk[s], closed_walk[s + 1]);
  return product;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::vector<AgentIndex> path_to_root(AgentIndex v, const std::vector<std::size_t>& parent) {
  std::vector<AgentIndex> path{v};
  while (parent[path.back()] != kNone) path.push_back(parent[path.back()]);
  return path;
}

std::vector<AgentIndex> close_cycle(AgentIndex i, AgentIndex j, const std::vector<std::size_t>& parent) {
  const auto from_i = path_to_root(i, parent);
  auto from_j = path_to_root(j, parent);
  // Trim the shared tail above the lowest common ancestor.
  auto a = from_i.rbegin();
  auto b = from_j.rbegin();
  while (std::next(a) != from_i.rend() && std::next(b) != from_j.rend() && *std::next(a) == *std::next(b)) {
    ++a;
    ++b;
  }
  const std::vector<AgentIndex> up_i(from_i.begin(), std::prev(a.base()));  // i .. child of lca
  const std::vector<AgentIndex> up_j(from_j.begin(), b.base());  // j .. lca

  std::vector<AgentIndex> walk{i};
  walk.insert(walk.end(), up_j.begin(), up_j.end());
  walk.insert(walk.end(), up_i.rbegin(), up_i.rend());

  // walk is closed (ends at i); rotate its open part to start at the smallest vertex.
  walk.pop_back();
  std::rotate(walk.begin(), std::min_element(walk.begin(), walk.end()), walk.end());
  walk.push_back(walk.front());
  return walk;
}

}  // namespace

ScalingResult solve_scaling(const SimplicialComplex& complex, const RatioCochain& r) {
  const std::size_t n = complex.num_vertices();
  if (r.edges != complex.simplices(1)) throw std::invalid_argument("solve_scaling: ratios are not keyed by X_1");

  std::vector<std::vector<std::pair<AgentIndex, std::size_t>>> adjacent(n);
  for (std::size_t e = 0; e < r.edges.size(); ++e) {
    adjacent[r.edges[e][0]].emplace_back(r.edges[e][1], e);
    adjacent[r.edges[e][1]].emplace_back(r.edges[e][0], e);
  }
  for (auto& list : adjacent) std::sort(list.begin(), list.end());

  Scaling scaling;
  scaling.lambda.assign(n, Rational(0));
  scaling.component.assign(n, kNone);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<bool> tree_edge(r.edges.size(), false);

  for (AgentIndex root = 0; root < n; ++root) {
    if (scaling.component[root] != kNone) continue;
    const std::size_t id = scaling.num_components++;
    scaling.component[root] = id;
    scaling.lambda[root] = Rational(1);
    std::deque<AgentIndex> queue{root};
    while (!queue.empty()) {
      const AgentIndex u = queue.front();
      queue.pop_front();
      for (const auto& [v, e] : adjacent[u]) {
        if (scaling.component[v] != kNone) continue;
        scaling.component[v] = id;
        parent[v] = u;
        tree_edge[e] = true;
        scaling.lambda[v] = scaling.lambda[u] * r.step(u, v);
        queue.push_back(v);
      }
    }
  }

  for (std::size_t e = 0; e < r.edges.size(); ++e) {
    if (tree_edge[e]) continue;
    const AgentIndex i = r.edges[e][0];
    const AgentIndex j = r.edges[e][1];
    if (scaling.lambda[j] != scaling.lambda[i] * r.ratios[e]) {
      CycleCertificate cert;
      cert.cycle = close_cycle(i, j, parent);
      cert.failing_edge = r.edges[e];
      cert.holonomy = holonomy(r, cert.cycle);
      return cert;
    }
  }
  return scaling;
}

Measure glue_urprior(const AgentSystem& system, const std::vector<Rational>& lambda) {
  if (lambda.size() != system.size()) throw std::invalid_argument("glue_urprior: one scale per agent required");
  Measure glued;
  for (AgentIndex i = 0; i < system.size(); ++i) {
    const auto& agent = system.agent(i);
    for (const auto& [x, p] : agent.mass) {
      const Rational m = lambda[i] * p;
      auto [it, inserted] = glued.emplace(x, m);
      if (!inserted && it->second != m) {
        throw std::logic_error("glue_urprior: agents disagree on the rescaled mass of \"" +
                               system.space().label(x) + "\" (" + to_string(it->second) + " vs " + to_string(m) +
                               " from agent \"" + agent.name + "\")");
      }
    }
  }
  Rational total(0);
  for (const auto& [x, m] : glued) total += m;
  if (total <= 0) throw std::logic_error("glue_urprior: glued measure has no mass");
  for (auto& [x, m] : glued) m /= total;
  return glued;
}

VerifyReport verify_urprior(const AgentSystem& system, const Measure& p) {
  VerifyReport report;
  auto fail = [&report](std::string msg) {
    report.ok = false;
    report.diagnostics.push_back(std::move(msg));
  };

  Rational total(0);
  for (const auto& [x, m] : p) {
    if (x >= system.space().size()) {
      fail("measure names outcome index " + std::to_string(x) + " outside the outcome space");
      continue;
    }
    if (m < 0) fail("negative mass " + to_string(m) + " on \"" + system.space().label(x) + "\"");
    total += m;
  }
  if (total != 1) fail("measure sums to " + to_string(total) + ", expected 1");

  const auto support = system.union_support();
  for (const auto& [x, m] : p) {
    if (m != 0 && !std::binary_search(support.begin(), support.end(), x) && x < system.space().size()) {
      fail("mass " + to_string(m) + " on \"" + system.space().label(x) + "\", which no agent considers");
    }
  }

  auto mass_at = [&p](OutcomeIndex x) {
    auto it = p.find(x);
    return it == p.end() ? Rational(0) : it->second;
  };
  for (const auto& agent : system.agents()) {
    Rational on_support(0);
    for (const auto& [x, q] : agent.mass) on_support += mass_at(x);
    if (on_support <= 0) {
      fail("agent \"" + agent.name + "\": P(A_i) = 0, conditionalization undefined");
      continue;
    }
    for (const auto& [x, q] : agent.mass) {
      const Rational conditional = mass_at(x) / on_support;
      if (conditional != q) {
        fail("agent \"" + agent.name + "\": P(" + system.space().label(x) + " | A_i) = " + to_string(conditional) +
             ", credence is " + to_string(q));
      }
    }
  }
  return report;
}

const char* to_string(Verdict v) { return v == Verdict::exists ? "exists" : "none"; }

UrPriorResult decide_urprior(const AgentSystem& system) {
  UrPriorResult result;
  const auto report = pairwise_compatibility(system);
  if (!report.violations.empty()) {
    result.certificate = report.violations.front();
    return result;
  }
  if (!report.asymmetries.empty()) {
    result.certificate = report.asymmetries.front();
    return result;
  }

  const auto skeleton = build_overlap_complex(system, 1);
  const auto ratios = ratio_cochain(system, skeleton);
  auto solved = solve_scaling(skeleton, ratios);
  if (auto* cycle = std::get_if<CycleCertificate>(&solved)) {
    result.certificate = std::move(*cycle);
    return result;
  }

  auto& scaling = std::get<Scaling>(solved);
  Measure measure = glue_urprior(system, scaling.lambda);
  if (const auto check = verify_urprior(system, measure); !check) {
    std::string msg = "decide_urprior: glued measure failed verification";
    for (const auto& d : check.diagnostics) msg += "\n  " + d;
    throw std::logic_error(msg);
  }
  result.verdict = Verdict::exists;
  result.measure = std::move(measure);
  result.unique = scaling.num_components == 1;
  result.scaling = std::move(scaling);
  return result;
}

}  // namespace urprior
