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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kcompress/errors.hpp"
#include "kcompress/polynomial.hpp"
#include "kcompress/rational.hpp"

namespace kcompress {

/// N >= 2 pairwise-distinct rationals. Stored ascending, so element indices
/// are stable and searches that walk indices in order are deterministic.
class NumberSet {
public:
  explicit NumberSet(std::vector<Rational> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
      throw PreconditionViolated("set elements must be pairwise distinct");
    if (elements_.size() < 2)
      throw PreconditionViolated("a set needs at least two elements");
  }
  NumberSet(std::initializer_list<Rational> elements)
      : NumberSet(std::vector<Rational>(elements)) {}

  /// {1, 2, ..., n}
  static NumberSet iota(std::size_t n, long first = 1) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i)
      v.emplace_back(first + static_cast<long>(i));
    return NumberSet(std::move(v));
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const Rational &operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Rational> &elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  std::optional<std::size_t> index_of(const Rational &x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || *it != x)
      return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }
  bool contains(const Rational &x) const { return index_of(x).has_value(); }

  friend bool operator==(const NumberSet &, const NumberSet &) = default;

private:
  std::vector<Rational> elements_;
};

/// (x0, f(x0), ..., f^{n-1}(x0)); throws OrbitCollision if a value repeats.
inline std::vector<Rational> generate_orbit(const Polynomial &f, const Rational &x0,
                                            std::size_t n) {
  if (n < 1)
    throw PreconditionViolated("orbit length must be at least 1");
  std::vector<Rational> orbit;
  orbit.reserve(n);
  orbit.push_back(x0);
  for (std::size_t i = 1; i < n; ++i) {
    Rational next = f(orbit.back());
    for (std::size_t j = 0; j < orbit.size(); ++j)
      if (orbit[j] == next)
        throw OrbitCollision(j, i);
    orbit.push_back(std::move(next));
  }
  return orbit;
}

/// Fits f on the first K+1 transitions and checks every later transition.
/// Returns f when the whole sequence is an orbit prefix of f.
inline std::optional<Polynomial> verify_sequence(std::span<const Rational> seq, std::size_t k) {
  if (seq.size() < k + 2)
    throw PreconditionViolated("verify_sequence needs N >= K+2");
  Polynomial f = fit_transition_polynomial(seq, k);
  for (std::size_t j = k + 1; j + 1 < seq.size(); ++j)
    if (f(seq[j]) != seq[j + 1])
      return std::nullopt;
  return f;
}

/// {lambda x + gamma : x in S}. Composing the orbit map with the affine
/// change of variable keeps the degree, so K-compressibility is preserved.
inline NumberSet affine_image(const NumberSet &s, const Rational &lambda, const Rational &gamma) {
  if (lambda == 0)
    throw DegenerateScale();
  std::vector<Rational> out;
  out.reserve(s.size());
  for (const auto &x : s)
    out.emplace_back(lambda * x + gamma);
  return NumberSet(std::move(out));
}

} // namespace kcompress
