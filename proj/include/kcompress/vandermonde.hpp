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

#include <cstddef>
#include <utility>
#include <vector>

#include "kcompress/errors.hpp"
#include "kcompress/matrix.hpp"
#include "kcompress/rational.hpp"

namespace kcompress {

/// Ordered list of pairwise-distinct points x_1..x_m.
class PointConfiguration {
public:
  explicit PointConfiguration(std::vector<Rational> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        if (points_[i] == points_[j])
          throw DuplicateAbscissa("point " + to_string(points_[i]) + " repeats");
  }
  PointConfiguration(std::initializer_list<Rational> points)
      : PointConfiguration(std::vector<Rational>(points)) {}

  std::size_t size() const noexcept { return points_.size(); }
  const Rational &operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Rational> &points() const noexcept { return points_; }

private:
  std::vector<Rational> points_;
};

/// prod_{i<j} (x_j - x_i), the determinant of the square Vandermonde matrix
/// with rows (1, x_i, x_i^2, ...).
inline Rational vandermonde_det(const PointConfiguration &cfg) {
  Rational d = 1;
  for (std::size_t j = 0; j < cfg.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      d *= cfg[j] - cfg[i];
  return d;
}

namespace detail {

// S_i = sum_{k != i} 1/(x_i - x_k)
inline std::vector<Rational> reciprocal_sums(const PointConfiguration &cfg) {
  std::vector<Rational> s(cfg.size(), Rational(0));
  for (std::size_t i = 0; i < cfg.size(); ++i)
    for (std::size_t k = 0; k < cfg.size(); ++k)
      if (k != i)
        s[i] += 1 / Rational(cfg[i] - cfg[k]);
  return s;
}

} // namespace detail

/// dd/dx_i = d * S_i.
inline std::vector<Rational> vandermonde_det_gradient(const PointConfiguration &cfg) {
  const Rational d = vandermonde_det(cfg);
  auto s = detail::reciprocal_sums(cfg);
  for (auto &v : s)
    v *= d;
  return s;
}

/// Off-diagonal: d (S_i S_j + 1/(x_j - x_i)^2).
/// Diagonal:     d (S_i^2 - sum_{k != i} 1/(x_i - x_k)^2).
inline RationalMatrix vandermonde_det_hessian(const PointConfiguration &cfg) {
  const std::size_t m = cfg.size();
  const Rational d = vandermonde_det(cfg);
  const auto s = detail::reciprocal_sums(cfg);
  RationalMatrix h(m, m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    Rational sq = 0;
    for (std::size_t k = 0; k < m; ++k)
      if (k != i) {
        Rational inv = 1 / Rational(cfg[i] - cfg[k]);
        sq += inv * inv;
      }
    h(i, i) = d * (s[i] * s[i] - sq);
    for (std::size_t j = i + 1; j < m; ++j) {
      Rational inv = 1 / Rational(cfg[j] - cfg[i]);
      h(i, j) = d * (s[i] * s[j] + inv * inv);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

/// Square Vandermonde matrix, rows (1, x_i, ..., x_i^{m-1}).
inline RationalMatrix vandermonde_matrix(const std::vector<Rational> &xs, std::size_t cols) {
  RationalMatrix v(xs.size(), cols);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational p = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      v(i, c) = p;
      p *= xs[i];
    }
  }
  return v;
}

} // namespace kcompress
