#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "urprior/complex.hpp"
#include "urprior/numerics.hpp"

namespace urprior {

/// A k-cochain: one rational per k-simplex, in the complex's canonical order.
/// The complex is not owned; pass the same complex to every function below.
struct Cochain {
  std::size_t degree = 0;
  VectorQ values;

  /// Throws std::invalid_argument unless `values` covers exactly the k-simplices.
  static Cochain from_map(const SimplicialComplex& complex, std::size_t degree,
                          const std::map<Simplex, Rational>& values);
  static Cochain zero(const SimplicialComplex& complex, std::size_t degree);

  Rational at(const SimplicialComplex& complex, const Simplex& s) const;

  bool operator==(const Cochain& other) const { return degree == other.degree && values == other.values; }
};

/// δc as a (k+1)-cochain.
Cochain coboundary(const SimplicialComplex& complex, const Cochain& c);

bool is_cocycle(const SimplicialComplex& complex, const Cochain& c);

/// f with δf = c, free variables set to 0; nullopt when c is not a coboundary.
/// Throws std::invalid_argument for degree 0.
std::optional<Cochain> coboundary_witness(const SimplicialComplex& complex, const Cochain& c);

struct CohomologyDims {
  std::size_t cochains = 0;      // |X_k|
  std::size_t cocycles = 0;      // dim ker δ_k
  std::size_t coboundaries = 0;  // rank δ_{k-1}
  std::size_t rank_delta = 0;    // rank δ_k

  std::size_t betti() const { return cocycles - coboundaries; }
};

/// Needs k >= 1 and the complex known through dimension k + 1.
CohomologyDims cohomology_dims(const SimplicialComplex& complex, std::size_t k);

/// dim H^k(X; Q).
std::size_t cohomology_dim(const SimplicialComplex& complex, std::size_t k);

/// First canonical kernel vector of δ_1 outside the image of δ_0, scaled to
/// coprime integers with positive leading entry. nullopt iff H^1 = 0.
std::optional<Cochain> noncoboundary_cocycle(const SimplicialComplex& complex);

}  // namespace urprior
