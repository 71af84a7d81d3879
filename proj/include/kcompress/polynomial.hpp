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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kcompress/errors.hpp"
#include "kcompress/rational.hpp"

namespace kcompress {

/// Coefficients a_0..a_K, index = power. Degree K is a bound; trailing
/// coefficients may be zero.
class Polynomial {
public:
  Polynomial() : coeffs_{Rational(0)} {}
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      coeffs_.push_back(0);
  }
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

  std::size_t degree_bound() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Rational> &coefficients() const noexcept { return coeffs_; }
  const Rational &operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Exact degree; 0 for the zero polynomial.
  std::size_t degree() const noexcept {
    std::size_t d = coeffs_.size() - 1;
    while (d > 0 && coeffs_[d] == 0)
      --d;
    return d;
  }

  Rational operator()(const Rational &x) const {
    Rational acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
      acc *= x;
      acc += coeffs_[k];
    }
    return acc;
  }

  /// Same coefficient sequence after dropping trailing zeros.
  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    const auto &x = a.coeffs_;
    const auto &y = b.coeffs_;
    const std::size_t n = std::max(x.size(), y.size());
    for (std::size_t k = 0; k < n; ++k) {
      const Rational xa = k < x.size() ? x[k] : Rational(0);
      const Rational ya = k < y.size() ? y[k] : Rational(0);
      if (xa != ya)
        return false;
    }
    return true;
  }

private:
  std::vector<Rational> coeffs_;
};

/// Horner evaluation of sum a_k x^k.
inline Rational poly_eval(const Polynomial &p, const Rational &x) { return p(x); }

/// Newton divided-difference coefficients c_0..c_{m-1} of the interpolant
/// through (xs[i], ys[i]).
inline std::vector<Rational> newton_coefficients(std::span<const Rational> xs,
                                                 std::span<const Rational> ys) {
  const std::size_t m = xs.size();
  std::vector<Rational> c(ys.begin(), ys.end());
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - level]);
  return c;
}

/// Expands sum c_j prod_{i<j} (x - xs[i]) into monomial coefficients.
inline Polynomial newton_to_monomial(std::span<const Rational> xs, std::span<const Rational> c) {
  const std::size_t m = c.size();
  std::vector<Rational> coeffs(m, Rational(0));
  // Nested Horner: p = c_{m-1}; p = p*(x - xs[j]) + c_j.
  coeffs[0] = c[m - 1];
  std::size_t len = 1;
  for (std::size_t j = m - 1; j-- > 0;) {
    for (std::size_t k = len; k > 0; --k)
      coeffs[k] = coeffs[k - 1] - xs[j] * coeffs[k];
    coeffs[0] = -xs[j] * coeffs[0] + c[j];
    ++len;
  }
  return Polynomial(std::move(coeffs));
}

/// The unique degree-<=K polynomial with f(seq[i]) = seq[i+1] for the first
/// K+1 transitions.
inline Polynomial fit_transition_polynomial(std::span<const Rational> seq, std::size_t k) {
  if (seq.size() < k + 2)
    throw PreconditionViolated("fit_transition_polynomial needs at least K+2 elements");
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j)
      if (seq[i] == seq[j])
        throw DuplicateAbscissa("abscissa " + to_string(seq[i]) + " repeats at positions " +
                                std::to_string(i) + " and " + std::to_string(j));
  auto xs = seq.subspan(0, k + 1);
  auto ys = seq.subspan(1, k + 1);
  auto c = newton_coefficients(xs, ys);
  return newton_to_monomial(xs, c);
}

inline std::string to_string(const Polynomial &p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k)
      out += ", ";
    out += to_string(p.coefficients()[k]);
  }
  return out + ")";
}

} // namespace kcompress
