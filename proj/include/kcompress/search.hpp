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

// Depth-first search over orderings of a set for orbit witnesses.
//
// A prefix of K+2 elements carries K+1 transitions and pins the degree-<=K
// map f. Past that point every extension is forced (next = f(last)) and is
// accepted only if it is an unused member of the set, so the search visits
// N!/(N-K-2)! prefixes instead of N! orderings.
//
// The interpolation runs in a pluggable field. ModularField works in
// Z/pZ: the image of every exact divided difference is the modular divided
// difference, so every true witness survives the filter. Survivors are then
// confirmed with exact rationals, which removes the rare modular false
// positives. ExactField runs the same search directly over Q.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kcompress/errors.hpp"
#include "kcompress/number_set.hpp"
#include "kcompress/polynomial.hpp"
#include "kcompress/rational.hpp"

namespace kcompress {

using Index = std::uint32_t;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t mpz_mod_u64(const BigInt &z, std::uint64_t p) {
  BigInt r;
  BigInt pz;
  mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

} // namespace detail

/// Arithmetic modulo a 61-bit Mersenne prime (with small fallbacks) over the
/// residues of the set's elements.
class ModularField {
public:
  using value_type = std::uint64_t;
  static constexpr bool exact = false;

  /// Fails (nullopt) only if every candidate prime divides a denominator or
  /// maps two elements to the same residue.
  static std::optional<ModularField> build(const NumberSet &s) {
    static constexpr std::uint64_t primes[] = {(1ULL << 61) - 1, 4611686018427387847ULL,
                                               2147483647ULL, 1000000007ULL, 998244353ULL};
    for (std::uint64_t p : primes)
      if (auto f = try_prime(s, p))
        return f;
    return std::nullopt;
  }

  std::uint64_t prime() const noexcept { return p_; }

  value_type elem(Index i) const noexcept { return residues_[i]; }
  value_type inv_diff(Index i, Index j) const noexcept { return inv_diff_[i * n_ + j]; }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type add(value_type a, value_type b) const noexcept {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type mul(value_type a, value_type b) const noexcept {
    if (mersenne_) {
      unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
      std::uint64_t lo = static_cast<std::uint64_t>(prod) & p_;
      std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
      std::uint64_t s = lo + hi;
      return s >= p_ ? s - p_ : s;
    }
    return detail::mulmod(a, b, p_);
  }

  std::optional<Index> find(value_type v) const noexcept {
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::pair<value_type, Index>{v, 0});
    if (it == lookup_.end() || it->first != v)
      return std::nullopt;
    return it->second;
  }

private:
  static std::optional<ModularField> try_prime(const NumberSet &s, std::uint64_t p) {
    ModularField f;
    f.p_ = p;
    f.mersenne_ = p == (1ULL << 61) - 1;
    f.n_ = s.size();
    for (const auto &x : s) {
      std::uint64_t den = detail::mpz_mod_u64(x.get_den(), p);
      if (den == 0)
        return std::nullopt;
      std::uint64_t num = detail::mpz_mod_u64(x.get_num(), p);
      f.residues_.push_back(detail::mulmod(num, detail::powmod(den, p - 2, p), p));
    }
    for (Index i = 0; i < f.n_; ++i)
      f.lookup_.emplace_back(f.residues_[i], i);
    std::sort(f.lookup_.begin(), f.lookup_.end());
    for (std::size_t i = 1; i < f.lookup_.size(); ++i)
      if (f.lookup_[i].first == f.lookup_[i - 1].first)
        return std::nullopt;
    f.inv_diff_.assign(f.n_ * f.n_, 0);
    for (Index i = 0; i < f.n_; ++i)
      for (Index j = 0; j < f.n_; ++j)
        if (i != j)
          f.inv_diff_[i * f.n_ + j] = detail::powmod(f.sub(f.residues_[i], f.residues_[j]), p - 2, p);
    return f;
  }

  std::uint64_t p_ = 0;
  bool mersenne_ = false;
  std::size_t n_ = 0;
  std::vector<value_type> residues_;
  std::vector<value_type> inv_diff_;
  std::vector<std::pair<value_type, Index>> lookup_;
};

/// The same interface over exact rationals.
class ExactField {
public:
  using value_type = Rational;
  static constexpr bool exact = true;

  explicit ExactField(const NumberSet &s) : n_(s.size()), values_(s.elements()) {
    inv_diff_.resize(n_ * n_);
    for (Index i = 0; i < n_; ++i) {
      lookup_.emplace(values_[i], i);
      for (Index j = 0; j < n_; ++j)
        if (i != j)
          inv_diff_[i * n_ + j] = 1 / Rational(values_[i] - values_[j]);
    }
  }

  const value_type &elem(Index i) const noexcept { return values_[i]; }
  const value_type &inv_diff(Index i, Index j) const noexcept { return inv_diff_[i * n_ + j]; }
  value_type sub(const value_type &a, const value_type &b) const { return a - b; }
  value_type add(const value_type &a, const value_type &b) const { return a + b; }
  value_type mul(const value_type &a, const value_type &b) const { return a * b; }

  std::optional<Index> find(const value_type &v) const {
    auto it = lookup_.find(v);
    if (it == lookup_.end())
      return std::nullopt;
    return it->second;
  }

private:
  std::size_t n_;
  std::vector<Rational> values_;
  std::vector<Rational> inv_diff_;
  std::unordered_map<Rational, Index, RationalHash> lookup_;
};

/// Pruned prefix search for one (set, K) pair. Not thread-safe; give each
/// worker its own instance.
template <class Field>
class OrbitSearch {
public:
  using value_type = typename Field::value_type;

  OrbitSearch(const Field &field, std::size_t n, std::size_t k)
      : field_(field), n_(n), k_(k), order_(n), used_(n, 0), diag_(k + 2, std::vector<value_type>(k + 2)) {
    if (k + 3 > n)
      throw PreconditionViolated("prefix search needs K < N-2");
  }

  /// Calls visit(order) for every ordering (element indices) that passes the
  /// field's test and starts with `prefix`. visit returns false to stop.
  /// Returns false if stopped early.
  template <class Visitor>
  bool run(Visitor &&visit, std::span<const Index> prefix = {}) {
    std::fill(used_.begin(), used_.end(), 0);
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      if (prefix[d] >= n_ || used_[prefix[d]])
        throw PreconditionViolated("invalid search prefix");
      place(d, prefix[d]);
    }
    return descend(prefix.size(), visit);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

private:
  void place(std::size_t depth, Index idx) {
    order_[depth] = idx;
    used_[idx] = 1;
    ++nodes_;
    if (depth == 0 || depth > k_ + 1)
      return;
    // transition t: order[t] -> order[t+1]
    const std::size_t t = depth - 1;
    auto &row = diag_[t];
    row[0] = field_.elem(idx);
    for (std::size_t l = 1; l <= t; ++l)
      row[l] = field_.mul(field_.sub(row[l - 1], diag_[t - 1][l - 1]),
                          field_.inv_diff(order_[t], order_[t - l]));
  }

  value_type eval_forced(Index at) const {
    // Newton form with nodes order[0..K] and coefficients diag[t][t].
    const value_type z = field_.elem(at);
    value_type acc = diag_[k_][k_];
    for (std::size_t j = k_; j-- > 0;)
      acc = field_.add(field_.mul(acc, field_.sub(z, field_.elem(order_[j]))), diag_[j][j]);
    return acc;
  }

  template <class Visitor>
  bool descend(std::size_t depth, Visitor &visit) {
    if (depth == n_)
      return visit(std::span<const Index>(order_));
    if (depth < k_ + 2) {
      for (Index c = 0; c < n_; ++c) {
        if (used_[c])
          continue;
        place(depth, c);
        bool go_on = descend(depth + 1, visit);
        used_[c] = 0;
        if (!go_on)
          return false;
      }
      return true;
    }
    auto next = field_.find(eval_forced(order_[depth - 1]));
    if (!next || used_[*next])
      return true;
    place(depth, *next);
    bool go_on = descend(depth + 1, visit);
    used_[*next] = 0;
    return go_on;
  }

  const Field &field_;
  std::size_t n_;
  std::size_t k_;
  std::vector<Index> order_;
  std::vector<char> used_;
  std::vector<std::vector<value_type>> diag_;
  std::uint64_t nodes_ = 0;
};

inline std::vector<Rational> materialize(const NumberSet &s, std::span<const Index> order) {
  std::vector<Rational> seq;
  seq.reserve(order.size());
  for (Index i : order)
    seq.push_back(s[i]);
  return seq;
}

/// Read-only search context for one set: the modular field when one exists,
/// otherwise the exact field. Safe to share between workers.
class WitnessSearch {
public:
  explicit WitnessSearch(const NumberSet &s) : set_(s), modular_(ModularField::build(s)) {
    if (!modular_)
      exact_.emplace(s);
  }

  const NumberSet &set() const noexcept { return set_; }
  bool modular() const noexcept { return modular_.has_value(); }

  /// Invokes visit(order, polynomial) for every exactly-confirmed witness with
  /// the given prefix, in lexicographic index order. visit returns false to
  /// stop. Requires K < N-2.
  template <class Visitor>
  void for_each(std::size_t k, Visitor &&visit, std::span<const Index> prefix = {}) const {
    if (modular_) {
      OrbitSearch<ModularField> search(*modular_, set_.size(), k);
      search.run(
          [&](std::span<const Index> order) {
            auto seq = materialize(set_, order);
            if (auto f = verify_sequence(seq, k))
              return visit(order, *f);
            return true;
          },
          prefix);
      return;
    }
    OrbitSearch<ExactField> search(*exact_, set_.size(), k);
    search.run(
        [&](std::span<const Index> order) {
          auto seq = materialize(set_, order);
          return visit(order, fit_transition_polynomial(seq, k));
        },
        prefix);
  }

private:
  const NumberSet &set_;
  std::optional<ModularField> modular_;
  std::optional<ExactField> exact_;
};

/// Exact number of witness orderings for K < N-2, fanned out over `jobs`
/// workers by the first two elements. The total does not depend on jobs.
inline BigInt count_witnesses_pruned(const NumberSet &s, std::size_t k, unsigned jobs = 1) {
  const std::size_t n = s.size();
  const WitnessSearch search(s);
  std::vector<std::pair<Index, Index>> items;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b)
        items.emplace_back(a, b);

  std::atomic<std::size_t> cursor{0};
  auto worker = [&](BigInt &total) {
    std::uint64_t local = 0;
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= items.size())
        break;
      const Index prefix[2] = {items[i].first, items[i].second};
      search.for_each(
          k,
          [&](std::span<const Index>, const Polynomial &) {
            ++local;
            return true;
          },
          prefix);
    }
    total += BigInt(static_cast<unsigned long>(local));
  };

  jobs = std::max(1u, jobs);
  std::vector<BigInt> totals(jobs);
  if (jobs == 1) {
    worker(totals[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] { worker(totals[j]); });
    for (auto &t : pool)
      t.join();
  }
  BigInt sum = 0;
  for (const auto &t : totals)
    sum += t;
  return sum;
}

} // namespace kcompress
