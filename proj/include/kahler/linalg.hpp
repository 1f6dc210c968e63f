#pragma once

#include "kahler/scalar.hpp"

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

namespace kahler {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = DenseMatrix<GaussianRational>;
using ExactVector = DenseVector<GaussianRational>;
using IntMatrix = DenseMatrix<BigInt>;

template <typename Scalar>
struct RowEchelon {
  DenseMatrix<Scalar> reduced;     // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over an exact field (Rational or GaussianRational).
template <typename Derived>
RowEchelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{m.eval(), {}};
  auto& a = out.reduced;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        if (a(r, j) != Scalar(0)) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

/// Rank over the scalar field.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(row_reduce(m).pivots.size());
}

/// Basis of the right null space, one vector per free column of the row
/// echelon form. Size is cols - rank.
template <typename Derived>
std::vector<DenseVector<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_reduce(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<DenseVector<Scalar>> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    DenseVector<Scalar> v = DenseVector<Scalar>::Zero(cols);
    v(free) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      v(ech.pivots[r]) = -ech.reduced(static_cast<Eigen::Index>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = b; returns false if the system is inconsistent. Free
/// variables are set to zero.
template <typename DerivedM, typename DerivedB>
bool solve_linear(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedB>& b,
                  DenseVector<typename DerivedM::Scalar>& x) {
  using Scalar = typename DerivedM::Scalar;
  DenseMatrix<Scalar> aug(m.rows(), m.cols() + 1);
  aug << m, b;
  const auto ech = row_reduce(aug);
  x = DenseVector<Scalar>::Zero(m.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const auto c = ech.pivots[r];
    if (c == m.cols()) return false;
    x(c) = ech.reduced(static_cast<Eigen::Index>(r), m.cols());
  }
  return true;
}

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Nonzero diagonal entries of D in order.
  std::vector<BigInt> invariant_factors() const;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(invariant_factors().size()); }
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// Rank of an integer matrix over Q.
Eigen::Index rank(const IntMatrix& m);

ExactMatrix to_exact(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... with each t_i > 1.
struct IntegerGroup {
  Eigen::Index free_rank = 0;
  std::vector<BigInt> torsion;
  friend bool operator==(const IntegerGroup&, const IntegerGroup&) = default;
};

/// "Z^2 + Z/2", "Z", "0".
std::string to_string(const IntegerGroup& g);

/// ker(outgoing) / im(incoming) at a free module of rank `dim`, where
/// `incoming` has dim rows and `outgoing` has dim columns.
IntegerGroup subquotient(Eigen::Index dim, const IntMatrix& incoming, const IntMatrix& outgoing);

}  // namespace kahler
