#include "urprior/cohomology.hpp"

#include <stdexcept>
#include <string>

namespace urprior {

Cochain Cochain::from_map(const SimplicialComplex& complex, std::size_t degree,
                          const std::map<Simplex, Rational>& values) {
  const auto& simplices = complex.simplices(degree);
  if (values.size() != simplices.size()) {
    throw std::invalid_argument("cochain of degree " + std::to_string(degree) + " needs " +
                                std::to_string(simplices.size()) + " values, got " + std::to_string(values.size()));
  }
  Cochain c{degree, VectorQ(static_cast<Eigen::Index>(simplices.size()))};
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    auto it = values.find(simplices[i]);
    if (it == values.end()) throw std::invalid_argument("cochain is missing simplex " + complex.label(simplices[i]));
    c.values(static_cast<Eigen::Index>(i)) = it->second;
  }
  return c;
}

Cochain Cochain::zero(const SimplicialComplex& complex, std::size_t degree) {
  return {degree, VectorQ::Constant(static_cast<Eigen::Index>(complex.count(degree)), Rational(0))};
}

Rational Cochain::at(const SimplicialComplex& complex, const Simplex& s) const {
  if (s.size() != degree + 1) throw std::invalid_argument("simplex arity does not match cochain degree");
  const auto idx = complex.index_of(s);
  if (!idx) throw std::out_of_range("simplex " + complex.label(s) + " is not in the complex");
  return values(static_cast<Eigen::Index>(*idx));
}

namespace {

void check_shape(const SimplicialComplex& complex, const Cochain& c) {
  if (static_cast<std::size_t>(c.values.size()) != complex.count(c.degree)) {
    throw std::invalid_argument("cochain length does not match the number of " + std::to_string(c.degree) +
                                "-simplices");
  }
}

}  // namespace

Cochain coboundary(const SimplicialComplex& complex, const Cochain& c) {
  check_shape(complex, c);
  const MatrixQ delta = coboundary_matrix(complex, c.degree);
  return {c.degree + 1, delta * c.values};
}

bool is_cocycle(const SimplicialComplex& complex, const Cochain& c) {
  return is_exactly_zero(coboundary(complex, c).values);
}

std::optional<Cochain> coboundary_witness(const SimplicialComplex& complex, const Cochain& c) {
  if (c.degree == 0) throw std::invalid_argument("coboundary_witness needs degree >= 1");
  check_shape(complex, c);
  const MatrixQ delta = coboundary_matrix(complex, c.degree - 1);
  auto solution = solve_in_column_span(delta, c.values);
  if (!solution) return std::nullopt;
  return Cochain{c.degree - 1, std::move(*solution)};
}

CohomologyDims cohomology_dims(const SimplicialComplex& complex, std::size_t k) {
  if (k == 0) throw std::invalid_argument("cohomology_dim supports k >= 1 only");
  const MatrixQ upper = coboundary_matrix(complex, k);
  const MatrixQ lower = coboundary_matrix(complex, k - 1);
  CohomologyDims d;
  d.cochains = complex.count(k);
  d.rank_delta = static_cast<std::size_t>(rank(upper));
  d.cocycles = d.cochains - d.rank_delta;
  d.coboundaries = static_cast<std::size_t>(rank(lower));
  return d;
}

std::size_t cohomology_dim(const SimplicialComplex& complex, std::size_t k) {
  return cohomology_dims(complex, k).betti();
}

std::optional<Cochain> noncoboundary_cocycle(const SimplicialComplex& complex) {
  const MatrixQ delta1 = coboundary_matrix(complex, 1);
  const MatrixQ delta0 = coboundary_matrix(complex, 0);
  for (const auto& v : nullspace_basis(delta1)) {
    if (!solve_in_column_span(delta0, v)) return Cochain{1, to_primitive_integer(v)};
  }
  return std::nullopt;
}

}  // namespace urprior
