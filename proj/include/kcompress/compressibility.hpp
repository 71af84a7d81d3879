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
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "kcompress/errors.hpp"
#include "kcompress/number_set.hpp"
#include "kcompress/polynomial.hpp"
#include "kcompress/rational.hpp"
#include "kcompress/search.hpp"

namespace kcompress {

/// An ordering of the set and the polynomial mapping each element to its
/// successor.
struct WitnessSequence {
  std::vector<Rational> order;
  Polynomial polynomial;

  friend bool operator==(const WitnessSequence &, const WitnessSequence &) = default;
};

/// (K, f, x0, N): the set is {x0, f(x0), ..., f^{N-1}(x0)}.
struct CompressedSet {
  std::size_t degree_bound = 0;
  Polynomial coefficients;
  Rational start;
  std::size_t length = 0;

  friend bool operator==(const CompressedSet &, const CompressedSet &) = default;
};

struct Decision {
  CompressedSet compressed;
  WitnessSequence witness;
};

namespace detail {

inline void require_degree(std::size_t k) {
  if (k < 1)
    throw PreconditionViolated("degree bound K must be at least 1");
}

inline bool trivial_regime(const NumberSet &s, std::size_t k) { return k + 2 >= s.size(); }

inline WitnessSequence trivial_witness(std::vector<Rational> order) {
  // With N-1 transitions any ordering is matched by a unique degree <= N-2 map.
  const std::size_t k = order.size() - 2;
  Polynomial f = fit_transition_polynomial(order, k);
  return {std::move(order), std::move(f)};
}

inline Decision to_decision(std::size_t k, WitnessSequence w) {
  CompressedSet c{k, w.polynomial, w.order.front(), w.order.size()};
  return {std::move(c), std::move(w)};
}

} // namespace detail

/// Returns a witness if S is the orbit of some degree-<=K polynomial started
/// at one of its own elements. K >= N-2 is decided without search (ascending
/// order). Otherwise the first witness in lexicographic prefix order.
inline std::optional<Decision> decide_k_compressible(const NumberSet &s, std::size_t k) {
  detail::require_degree(k);
  if (detail::trivial_regime(s, k))
    return detail::to_decision(k, detail::trivial_witness(s.elements()));
  std::optional<Decision> found;
  WitnessSearch(s).for_each(k, [&](std::span<const Index> order, const Polynomial &f) {
    found = detail::to_decision(k, WitnessSequence{materialize(s, order), f});
    return false;
  });
  return found;
}

/// Number of orderings of S admitting a degree-<=K compressing polynomial;
/// N! when K >= N-2.
inline BigInt count_compressing_sequences(const NumberSet &s, std::size_t k, unsigned jobs = 1) {
  detail::require_degree(k);
  if (detail::trivial_regime(s, k))
    return factorial(s.size());
  return count_witnesses_pruned(s, k, jobs);
}

/// Up to `limit` witnesses in lexicographic prefix order.
inline std::vector<WitnessSequence> enumerate_witnesses(const NumberSet &s, std::size_t k,
                                                        std::size_t limit) {
  detail::require_degree(k);
  if (limit < 1)
    throw PreconditionViolated("limit must be at least 1");
  std::vector<WitnessSequence> out;
  if (detail::trivial_regime(s, k)) {
    std::vector<Rational> order = s.elements();
    do {
      out.push_back(detail::trivial_witness(order));
    } while (out.size() < limit && std::next_permutation(order.begin(), order.end()));
    return out;
  }
  WitnessSearch(s).for_each(k, [&](std::span<const Index> order, const Polynomial &f) {
    out.push_back({materialize(s, order), f});
    return out.size() < limit;
  });
  return out;
}

/// The smallest K in 1..N-2 for which S is K-compressible, with its witness.
inline CompressedSet compress(const NumberSet &s) {
  if (s.size() < 4)
    throw PreconditionViolated("compress needs at least 4 elements");
  for (std::size_t k = 1; k + 2 <= s.size(); ++k)
    if (auto d = decide_k_compressible(s, k))
      return d->compressed;
  throw Error("unreachable: K = N-2 always compresses");
}

/// Throws OrbitCollision for a corrupt record.
inline NumberSet decompress(const CompressedSet &c) {
  return NumberSet(generate_orbit(c.coefficients, c.start, c.length));
}

struct LinearUniquenessReport {
  bool is_1_compressible = false;
  std::size_t witness_count = 0;
};

/// Counts every K = 1 witness. For a 1-compressible set with N >= 5 the
/// expected count is 2: a linear map and its inverse walking the reverse
/// order.
inline LinearUniquenessReport check_unique_linear(const NumberSet &s) {
  if (s.size() < 5)
    throw PreconditionViolated("check_unique_linear needs N >= 5");
  std::size_t count = 0;
  WitnessSearch(s).for_each(1, [&](std::span<const Index>, const Polynomial &) {
    ++count;
    return true;
  });
  return {count > 0, count};
}

} // namespace kcompress
