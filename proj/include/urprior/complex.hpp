#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "urprior/credence.hpp"
#include "urprior/numerics.hpp"

namespace urprior {

/// Strictly increasing vertex indices.
using Simplex = std::vector<std::size_t>;

/// Downward-closed family of vertex sets, stored by dimension. Each level is
/// sorted lexicographically, and that order is the row/column order of every
/// coboundary matrix.
class SimplicialComplex {
 public:
  /// Smallest downward-closed complex containing `simplices` and every vertex.
  /// `max_dim` records a truncated enumeration: levels above it are unknown.
  static SimplicialComplex closure(std::vector<std::string> vertex_labels, const std::vector<Simplex>& simplices,
                                   std::optional<std::size_t> max_dim = std::nullopt);

  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }

  /// k-simplices in canonical order; empty past the top level.
  const std::vector<Simplex>& simplices(std::size_t k) const;
  std::size_t count(std::size_t k) const { return simplices(k).size(); }
  /// Counts of levels 0..dimension().
  std::vector<std::size_t> counts() const;

  /// Highest k with a k-simplex, or -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  /// Highest dimension whose simplices are all known; nullopt when complete.
  std::optional<std::size_t> max_dim() const { return max_dim_; }
  bool knows_dim(std::size_t k) const { return !max_dim_ || k <= *max_dim_; }

  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Maximal simplices, ordered by dimension then lexicographically.
  std::vector<Simplex> facets() const;

  std::string label(const Simplex& s) const;

  bool operator==(const SimplicialComplex& other) const {
    return vertices_ == other.vertices_ && by_dim_ == other.by_dim_;
  }

 private:
  SimplicialComplex() = default;

  std::vector<std::string> vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::optional<std::size_t> max_dim_;

  friend SimplicialComplex build_overlap_complex(const AgentSystem&, std::optional<std::size_t>);
};

/// Overlap complex: every agent set J with |J| <= max_dim + 1 such that each
/// j in J gives ∩_{k∈J} A_k positive mass. nullopt means no size bound.
SimplicialComplex build_overlap_complex(const AgentSystem& system, std::optional<std::size_t> max_dim);

/// Throws std::invalid_argument on an empty facet, a repeated vertex label,
/// or a facet naming an unknown vertex.
SimplicialComplex from_facets(const std::vector<std::string>& vertices,
                              const std::vector<std::vector<std::string>>& facets);

/// δ_k: |X_{k+1}| rows, |X_k| columns, entry (-1)^j where the column simplex is
/// the row simplex with its j-th vertex removed. Throws std::invalid_argument
/// when the complex was truncated below dimension k + 1.
template <typename Scalar = Rational>
MatrixX<Scalar> coboundary_matrix(const SimplicialComplex& complex, std::size_t k) {
  if (!complex.knows_dim(k + 1)) {
    throw std::invalid_argument("coboundary_matrix: complex was enumerated only up to dimension " +
                                std::to_string(*complex.max_dim()) + ", delta_" + std::to_string(k) +
                                " needs dimension " + std::to_string(k + 1));
  }
  const auto& rows = complex.simplices(k + 1);
  const auto& cols = complex.simplices(k);
  MatrixX<Scalar> delta = MatrixX<Scalar>::Constant(static_cast<Eigen::Index>(rows.size()),
                                                    static_cast<Eigen::Index>(cols.size()), Scalar(0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Simplex& sigma = rows[r];
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      Simplex face;
      face.reserve(sigma.size() - 1);
      for (std::size_t v = 0; v < sigma.size(); ++v)
        if (v != j) face.push_back(sigma[v]);
      const auto c = complex.index_of(face);
      delta(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(*c)) = (j % 2 == 0) ? Scalar(1) : Scalar(-1);
    }
  }
  return delta;
}

}  // namespace urprior
