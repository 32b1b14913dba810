#pragma once

// Dense exact linear algebra helpers.
//
// Everything here is generic over the Eigen scalar; the library instantiates
// it with Rational. None of these helpers compare against a tolerance: a zero
// test is a test for the scalar zero.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "leonard_lab/rational.hpp"

namespace leonard_lab {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

/// Square matrix with `diag` on the diagonal, `sub[i]` at (i+1, i) and
/// `super[i]` at (i, i+1).
template <typename DiagDerived, typename SubDerived, typename SuperDerived>
auto tridiagonal(const Eigen::MatrixBase<DiagDerived>& diag, const Eigen::MatrixBase<SubDerived>& sub,
                 const Eigen::MatrixBase<SuperDerived>& super) {
  using Scalar = typename DiagDerived::Scalar;
  const Eigen::Index n = diag.size();
  if (sub.size() < n - 1 || super.size() < n - 1) {
    throw std::invalid_argument("tridiagonal: off-diagonal too short");
  }
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i, i) = diag(i);
    if (i + 1 < n) {
      out(i + 1, i) = sub(i);
      out(i, i + 1) = super(i);
    }
  }
  return out;
}

template <typename Derived>
auto diagonal_matrix(const Eigen::MatrixBase<Derived>& entries) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = entries.size();
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out(i, i) = entries(i);
  return out;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  }
}

template <typename Derived>
bool is_tridiagonal(const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "is_tridiagonal");
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if ((i - j > 1 || j - i > 1) && m(i, j) != Scalar(0)) return false;
    }
  }
  return true;
}

/// Tridiagonal with every sub- and superdiagonal entry nonzero.
template <typename Derived>
bool is_irreducible_tridiagonal(const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "is_irreducible_tridiagonal");
  using Scalar = typename Derived::Scalar;
  if (!is_tridiagonal(m)) return false;
  for (Eigen::Index i = 0; i + 1 < m.rows(); ++i) {
    if (m(i + 1, i) == Scalar(0) || m(i, i + 1) == Scalar(0)) return false;
  }
  return true;
}

template <typename Derived>
bool is_diagonal(const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "is_diagonal");
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j && m(i, j) != Scalar(0)) return false;
    }
  }
  return true;
}

/// Matrix of the same operator in the reordered basis e'_i = e_{perm[i]}.
template <typename Derived>
auto permute_basis(const Eigen::MatrixBase<Derived>& m, std::span<const int> perm) {
  require_square(m, "permute_basis");
  using Scalar = typename Derived::Scalar;
  const auto n = static_cast<Eigen::Index>(perm.size());
  if (n != m.rows()) throw std::invalid_argument("permute_basis: size mismatch");
  DenseMatrix<Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(perm[i], perm[j]);
  }
  return out;
}

template <typename LhsDerived, typename RhsDerived>
bool exactly_equal(const Eigen::MatrixBase<LhsDerived>& lhs, const Eigen::MatrixBase<RhsDerived>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
  for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
    for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
      if (!(lhs(i, j) == rhs(i, j))) return false;
    }
  }
  return true;
}

/// Characteristic polynomial det(xI - M), coefficients from x^0 upward
/// (monic, so the last coefficient is 1). Faddeev-LeVerrier; needs exact
/// division by 1..n, which holds over a field of characteristic zero.
template <typename Derived>
std::vector<typename Derived::Scalar> characteristic_polynomial(const Eigen::MatrixBase<Derived>& m) {
  require_square(m, "characteristic_polynomial");
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1, Scalar(0));
  coeffs[static_cast<std::size_t>(n)] = Scalar(1);
  const DenseMatrix<Scalar> a = m;
  DenseMatrix<Scalar> aux = DenseMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    DenseMatrix<Scalar> next = a * aux;
    const Scalar c_prev = coeffs[static_cast<std::size_t>(n - k + 1)];
    for (Eigen::Index i = 0; i < n; ++i) next(i, i) += c_prev;
    aux = std::move(next);
    const DenseMatrix<Scalar> prod = a * aux;
    Scalar trace(0);
    for (Eigen::Index i = 0; i < n; ++i) trace += prod(i, i);
    coeffs[static_cast<std::size_t>(n - k)] = -trace / Scalar(static_cast<long>(k));
  }
  return coeffs;
}

/// Coefficients (x^0 upward) of prod_i (x - roots[i]).
template <typename Derived>
std::vector<typename Derived::Scalar> polynomial_from_roots(const Eigen::MatrixBase<Derived>& roots) {
  using Scalar = typename Derived::Scalar;
  std::vector<Scalar> coeffs{Scalar(1)};
  for (Eigen::Index r = 0; r < roots.size(); ++r) {
    std::vector<Scalar> next(coeffs.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= roots(r) * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

/// Newton divided differences f[x_0], f[x_0,x_1], ..., f[x_0..x_n].
/// Nodes must be pairwise distinct.
template <typename NodeDerived, typename ValueDerived>
std::vector<typename NodeDerived::Scalar> newton_divided_differences(
    const Eigen::MatrixBase<NodeDerived>& nodes, const Eigen::MatrixBase<ValueDerived>& values) {
  using Scalar = typename NodeDerived::Scalar;
  if (nodes.size() != values.size()) {
    throw std::invalid_argument("newton_divided_differences: size mismatch");
  }
  const Eigen::Index n = nodes.size();
  std::vector<Scalar> work(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) work[static_cast<std::size_t>(i)] = values(i);
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index order = 0; order < n; ++order) {
    out.push_back(work[0]);
    for (Eigen::Index i = 0; i + order + 1 < n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      work[u] = (work[u + 1] - work[u]) / (nodes(i + order + 1) - nodes(i));
    }
  }
  return out;
}

}  // namespace leonard_lab
