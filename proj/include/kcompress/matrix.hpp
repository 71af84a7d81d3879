// Copyright 2026 The kcompress Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "kcompress/errors.hpp"
#include "kcompress/rational.hpp"

namespace kcompress {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T &fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw PreconditionViolated("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T &operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T &operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<BigInt>;

template <class T>
Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b) {
  if (a.cols() != b.rows())
    throw PreconditionViolated("matrix dimension mismatch");
  Matrix<T> out(a.rows(), b.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T> &a, const std::vector<T> &v) {
  if (a.cols() != v.size())
    throw PreconditionViolated("matrix/vector dimension mismatch");
  std::vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[i] += a(i, j) * v[j];
  return out;
}

/// Solves M x = b exactly. Fraction-free (Bareiss) forward elimination with
/// row pivoting on the augmented system, then back substitution.
/// Throws SingularMatrix when M is rank deficient.
inline std::vector<Rational> solve_exact_linear_system(const RationalMatrix &m,
                                                       const std::vector<Rational> &b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n)
    throw PreconditionViolated("solve_exact_linear_system needs a square system");

  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }

  Rational prev_pivot = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && aug(pivot, k) == 0)
      ++pivot;
    if (pivot == n)
      throw SingularMatrix();
    if (pivot != k)
      for (std::size_t j = 0; j <= n; ++j)
        std::swap(aug(k, j), aug(pivot, j));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        aug(i, j) = (aug(k, k) * aug(i, j) - aug(i, k) * aug(k, j)) / prev_pivot;
      aug(i, k) = 0;
    }
    prev_pivot = aug(k, k);
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = aug(i, n);
    for (std::size_t j = i + 1; j < n; ++j)
      acc -= aug(i, j) * x[j];
    x[i] = acc / aug(i, i);
  }
  return x;
}

/// Indices of a maximal set of linearly independent rows, chosen greedily in
/// row order.
inline std::vector<std::size_t> independent_rows(const RationalMatrix &m) {
  std::vector<std::vector<Rational>> basis; // echelon rows
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Rational> v = m.row(r);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t p = pivots[b];
      if (v[p] == 0)
        continue;
      Rational factor = v[p] / basis[b][p];
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] -= factor * basis[b][c];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0)
      ++p;
    if (p == v.size())
      continue;
    basis.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(r);
  }
  return chosen;
}

} // namespace kcompress
