#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace urprior {

// Exact scalars. GMP keeps rationals canonical: lowest terms, positive denominator.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;

/// Parses "p/q", an integer "p", or a decimal literal such as "0.3" or "-1.25"
/// into an exact rational. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "5/8", "-1/3", "0", "1".
std::string to_string(const Rational& q);

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

template <typename Scalar>
struct RrefResult {
  MatrixX<Scalar> reduced;
  std::vector<Eigen::Index> pivot_cols;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
/// Pivot search takes the first nonzero entry, which is all an exact field needs.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out{m, {}};
  auto& r = out.reduced;
  const Eigen::Index rows = r.rows();
  const Eigen::Index cols = r.cols();
  const Scalar zero(0);

  Eigen::Index lead = 0;
  for (Eigen::Index c = 0; c < cols && lead < rows; ++c) {
    Eigen::Index pivot = lead;
    while (pivot < rows && r(pivot, c) == zero) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) r.row(pivot).swap(r.row(lead));

    const Scalar inv = Scalar(1) / r(lead, c);
    for (Eigen::Index j = c; j < cols; ++j) r(lead, j) *= inv;

    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == lead || r(i, c) == zero) continue;
      const Scalar factor = r(i, c);
      for (Eigen::Index j = c; j < cols; ++j) r(i, j) -= factor * r(lead, j);
    }
    out.pivot_cols.push_back(c);
    ++lead;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Canonical kernel basis: one vector per free column, with that free
/// variable set to 1 and the other free variables set to 0.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> nullspace_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto reduced = rref(m);
  const Eigen::Index cols = m.cols();

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : reduced.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<VectorX<Scalar>> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Constant(cols, Scalar(0));
    v(free) = Scalar(1);
    for (std::size_t row = 0; row < reduced.pivot_cols.size(); ++row) {
      v(reduced.pivot_cols[row]) = -reduced.reduced(static_cast<Eigen::Index>(row), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves columns * c = target exactly. Free variables are set to 0.
/// Returns nullopt when target is outside the column span.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve_in_column_span(
    const Eigen::MatrixBase<DerivedA>& columns, const Eigen::MatrixBase<DerivedB>& target) {
  using Scalar = typename DerivedA::Scalar;
  if (target.cols() != 1 || target.rows() != columns.rows()) {
    throw std::invalid_argument("solve_in_column_span: target length does not match column length");
  }
  const Eigen::Index n = columns.cols();
  MatrixX<Scalar> augmented(columns.rows(), n + 1);
  augmented.leftCols(n) = columns;
  augmented.col(n) = target;

  const auto reduced = rref(augmented);
  if (!reduced.pivot_cols.empty() && reduced.pivot_cols.back() == n) return std::nullopt;

  VectorX<Scalar> coeffs = VectorX<Scalar>::Constant(n, Scalar(0));
  for (std::size_t row = 0; row < reduced.pivot_cols.size(); ++row) {
    coeffs(reduced.pivot_cols[row]) = reduced.reduced(static_cast<Eigen::Index>(row), n);
  }
  return coeffs;
}

/// List-of-vectors form of solve_in_column_span. All vectors must share the
/// target's length, otherwise std::invalid_argument.
template <typename Scalar>
std::optional<VectorX<Scalar>> in_span(const std::vector<VectorX<Scalar>>& basis,
                                       const VectorX<Scalar>& target) {
  MatrixX<Scalar> columns(target.size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].size() != target.size()) {
      throw std::invalid_argument("in_span: basis vector " + std::to_string(k) + " has length " +
                                  std::to_string(basis[k].size()) + ", target has length " +
                                  std::to_string(target.size()));
    }
    columns.col(static_cast<Eigen::Index>(k)) = basis[k];
  }
  return solve_in_column_span(columns, target);
}

/// Exact zero test. Eigen's isZero() goes through a floating tolerance.
template <typename Derived>
bool is_exactly_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

/// Scales a rational vector to coprime integers whose first nonzero entry is
/// positive. The zero vector is returned unchanged.
VectorQ to_primitive_integer(const VectorQ& v);

}  // namespace urprior
