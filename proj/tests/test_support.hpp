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
#include <random>
#include <vector>

#include "kcompress/number_set.hpp"
#include "kcompress/polynomial.hpp"
#include "kcompress/rational.hpp"

namespace kcompress::testing {

inline Rational q(long num, long den = 1) { return make_rational(BigInt(num), BigInt(den)); }

/// Exact orbit of 4x - 4x^2 from 3/20.
inline std::vector<Rational> logistic_orbit(std::size_t n = 10) {
  return generate_orbit(Polynomial{0, 4, -4}, q(3, 20), n);
}

inline Rational random_rational(std::mt19937_64 &rng, long max_num = 9, long max_den = 4) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return q(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64 &rng, long max_num = 9, long max_den = 4) {
  Rational r;
  do {
    r = random_rational(rng, max_num, max_den);
  } while (r == 0);
  return r;
}

inline Polynomial random_polynomial(std::mt19937_64 &rng, std::size_t degree) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i <= degree; ++i)
    c.push_back(random_rational(rng, 3, 3));
  if (c.back() == 0)
    c.back() = 1;
  return Polynomial(std::move(c));
}

/// A collision-free orbit of a random polynomial of exact degree `degree`,
/// retried until one exists. Coefficients stay small so values stay sane.
inline std::pair<Polynomial, std::vector<Rational>> random_orbit(std::mt19937_64 &rng, std::size_t degree,
                                                                 std::size_t n) {
  while (true) {
    Polynomial f = random_polynomial(rng, degree);
    Rational x0 = random_rational(rng, 5, 3);
    try {
      return {f, generate_orbit(f, x0, n)};
    } catch (const OrbitCollision &) {
    }
  }
}

template <class T>
void shuffle(std::vector<T> &v, std::mt19937_64 &rng) {
  std::shuffle(v.begin(), v.end(), rng);
}

} // namespace kcompress::testing
