#include "urprior/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace urprior {

namespace {

const std::vector<Simplex> kEmptyLevel;

void check_simplex(const Simplex& s, std::size_t num_vertices) {
  if (s.empty()) throw std::invalid_argument("simplex must be nonempty");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= num_vertices) throw std::invalid_argument("simplex names vertex index " + std::to_string(s[i]) +
                                                          " but the complex has " + std::to_string(num_vertices));
    if (i > 0 && s[i - 1] >= s[i]) throw std::invalid_argument("simplex vertices must be strictly increasing");
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::closure(std::vector<std::string> vertex_labels,
                                             const std::vector<Simplex>& simplices,
                                             std::optional<std::size_t> max_dim) {
  SimplicialComplex out;
  const std::size_t n = vertex_labels.size();
  out.vertices_ = std::move(vertex_labels);
  out.max_dim_ = max_dim;

  std::vector<std::set<Simplex>> levels;
  auto insert = [&levels](Simplex s) {
    const std::size_t k = s.size() - 1;
    if (levels.size() <= k) levels.resize(k + 1);
    levels[k].insert(std::move(s));
  };
  for (std::size_t v = 0; v < n; ++v) insert({v});

  for (const auto& s : simplices) {
    check_simplex(s, n);
    if (max_dim && s.size() - 1 > *max_dim) {
      throw std::invalid_argument("simplex of dimension " + std::to_string(s.size() - 1) +
                                  " exceeds the complex's max_dim " + std::to_string(*max_dim));
    }
    if (s.size() > 8 * sizeof(unsigned long) - 1) throw std::invalid_argument("simplex too large to close");
    const unsigned long subsets = 1UL << s.size();
    for (unsigned long mask = 1; mask < subsets; ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (1UL << i)) face.push_back(s[i]);
      insert(std::move(face));
    }
  }

  out.by_dim_.reserve(levels.size());
  for (auto& level : levels) out.by_dim_.emplace_back(level.begin(), level.end());
  return out;
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t k) const {
  return k < by_dim_.size() ? by_dim_[k] : kEmptyLevel;
}

std::vector<std::size_t> SimplicialComplex::counts() const {
  std::vector<std::size_t> out;
  out.reserve(by_dim_.size());
  for (const auto& level : by_dim_) out.push_back(level.size());
  return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty()) return std::nullopt;
  const auto& level = simplices(s.size() - 1);
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (std::size_t k = 0; k < by_dim_.size(); ++k) {
    std::set<Simplex> covered;
    for (const auto& up : simplices(k + 1)) {
      for (std::size_t j = 0; j < up.size(); ++j) {
        Simplex face = up;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        covered.insert(std::move(face));
      }
    }
    for (const auto& s : by_dim_[k])
      if (!covered.contains(s)) out.push_back(s);
  }
  return out;
}

std::string SimplicialComplex::label(const Simplex& s) const {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += vertices_.at(s[i]);
  }
  return out + ")";
}

SimplicialComplex build_overlap_complex(const AgentSystem& system, std::optional<std::size_t> max_dim) {
  SimplicialComplex out;
  out.vertices_ = system.agent_names();
  out.max_dim_ = max_dim;

  // Every agent is a vertex: P_i(A_i) = 1.
  std::vector<Simplex> level;
  for (AgentIndex i = 0; i < system.size(); ++i) level.push_back({i});

  while (!level.empty()) {
    out.by_dim_.push_back(level);
    const std::size_t k = level.size() > 0 ? level.front().size() - 1 : 0;
    if (max_dim && k >= *max_dim) break;

    std::vector<Simplex> next;
    for (const auto& s : level) {
      for (AgentIndex v = s.back() + 1; v < system.size(); ++v) {
        Simplex candidate = s;
        candidate.push_back(v);

        // Downward closure: every facet other than s itself must already be present.
        bool facets_present = true;
        for (std::size_t drop = 0; drop + 1 < candidate.size() && facets_present; ++drop) {
          Simplex face = candidate;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
          facets_present = std::binary_search(level.begin(), level.end(), face);
        }
        if (!facets_present) continue;

        const auto common = system.common_support(candidate);
        if (common.empty()) continue;
        const bool overlaps = std::all_of(candidate.begin(), candidate.end(), [&](AgentIndex j) {
          return system.agent(j).mass_of(common) > 0;
        });
        if (overlaps) next.push_back(std::move(candidate));
      }
    }
    level = std::move(next);
  }
  return out;
}

SimplicialComplex from_facets(const std::vector<std::string>& vertices,
                              const std::vector<std::vector<std::string>>& facets) {
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!index.emplace(vertices[v], v).second) {
      throw std::invalid_argument("duplicate vertex label \"" + vertices[v] + "\"");
    }
  }
  std::vector<Simplex> simplices;
  for (const auto& facet : facets) {
    if (facet.empty()) throw std::invalid_argument("facets must be nonempty");
    std::set<std::size_t> ids;
    for (const auto& label : facet) {
      auto it = index.find(label);
      if (it == index.end()) throw std::invalid_argument("facet mentions unknown vertex \"" + label + "\"");
      ids.insert(it->second);
    }
    simplices.emplace_back(ids.begin(), ids.end());
  }
  return SimplicialComplex::closure(vertices, simplices);
}

}  // namespace urprior
