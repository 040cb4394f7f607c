/*
 * Copyright 2026 The pk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PK_LINALG_HPP
#define PK_LINALG_HPP

// Exact Gaussian elimination over any field scalar usable in Eigen dense types.
// Nothing here compares against a tolerance: a pivot is any entry that is not zero.

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "pk/cyclotomic.hpp"

namespace pk {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline bool is_zero(const CycNum& x) { return x.is_zero(); }
template <typename Scalar>
bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}

/// Brings `a` to reduced row echelon form (pivot entries equal to one), drops zero rows and
/// returns the pivot column of each remaining row.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(Matrix<Scalar>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const Scalar f = a(r, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) {
        if (!is_zero(a(row, j))) a(r, j) -= f * a(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  a.conservativeResize(row, a.cols());
  return pivots;
}

template <typename Scalar>
Matrix<Scalar> rref(Matrix<Scalar> a) {
  rref_in_place(a);
  return a;
}

template <typename Scalar>
Eigen::Index rank(Matrix<Scalar> a) {
  return static_cast<Eigen::Index>(rref_in_place(a).size());
}

/// Rows form the canonical (reduced echelon) basis of {x : a x = 0}.
template <typename Scalar>
Matrix<Scalar> nullspace(Matrix<Scalar> a) {
  const Eigen::Index n = a.cols();
  const auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
  }
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(static_cast<Eigen::Index>(free.size()), n);
  for (std::size_t k = 0; k < free.size(); ++k) {
    const auto f = free[k];
    basis(static_cast<Eigen::Index>(k), f) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(static_cast<Eigen::Index>(k), pivots[r]) = -a(static_cast<Eigen::Index>(r), f);
    }
  }
  return rref(std::move(basis));
}

/// A solution of a x = b with every free variable set to zero, or nullopt if inconsistent.
template <typename Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

/// Reduces x against rows of an echelon matrix with the given pivots; zero iff x is in the span.
template <typename Scalar, typename Derived>
Vector<Scalar> reduce_against(const Matrix<Scalar>& echelon, const std::vector<Eigen::Index>& pivots,
                              const Eigen::MatrixBase<Derived>& x) {
  Vector<Scalar> r = x;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const auto p = pivots[k];
    if (is_zero(r(p))) continue;
    const Scalar f = r(p);
    r -= f * echelon.row(static_cast<Eigen::Index>(k)).transpose();
  }
  return r;
}

}  // namespace pk

#endif  // PK_LINALG_HPP
