#pragma once

// Dense exact linear algebra over integer-like scalars. Everything here works
// on any Eigen expression whose scalar supports exact +, -, * and exact
// division (BigInt, std::int64_t for small cases).

#include <cstdint>
#include <utility>

#include <Eigen/Core>

#include "lrs/numeric.hpp"

namespace lrs {

struct NoReduce {
  template <typename M>
  M operator()(M m) const {
    return m;
  }
};

/// Entrywise reduction into [0, modulus) after every product.
struct ModReduce {
  BigInt modulus;

  Matrix<BigInt> operator()(Matrix<BigInt> m) const {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = floorMod(m(i, j), modulus);
    return m;
  }
};

/// Square-and-multiply power of a square matrix; `reduce` is applied to every
/// intermediate product.
template <typename Derived, typename Reduce = NoReduce>
Matrix<typename Derived::Scalar> matrixPower(const Eigen::MatrixBase<Derived>& base,
                                             std::uint64_t exponent, Reduce reduce = {}) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(base.rows() == base.cols());
  Matrix<Scalar> result = reduce(Matrix<Scalar>(Matrix<Scalar>::Identity(base.rows(), base.cols())));
  Matrix<Scalar> square = reduce(Matrix<Scalar>(base));
  while (exponent != 0) {
    if (exponent & 1u) result = reduce(Matrix<Scalar>(result * square));
    exponent >>= 1u;
    if (exponent != 0) square = reduce(Matrix<Scalar>(square * square));
  }
  return result;
}

/// Fraction-free Gaussian elimination; every division is exact over the
/// integers, so the result is the exact determinant.
template <typename Derived>
typename Derived::Scalar bareissDeterminant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  Matrix<Scalar> a = input;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = t / previous;
      }
    }
    previous = a(k, k);
  }
  return Scalar(sign * a(n - 1, n - 1));
}

template <typename Derived>
bool isIdentity(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace lrs
