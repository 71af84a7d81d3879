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

// Instance generators for two hardness reductions, with exhaustive checkers
// that compare existence on the source and target side.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kcompress/errors.hpp"
#include "kcompress/rational.hpp"

namespace kcompress {

struct GadgetVerdict {
  bool forward_ok = false;  // source solvable => target solvable
  bool backward_ok = false; // target solvable => source solvable
  bool source_solvable = false;
  bool target_solvable = false;

  bool ok() const { return forward_ok && backward_ok; }
};

// ---------------------------------------------------------------------------
// Cardinality-constrained partition -> one signed row.

/// 1 x N row, first T entries +1 and the rest -1, acting on x = S.
struct SignedRowInstance {
  std::vector<int> row;
  std::vector<Rational> x;
  std::size_t t = 0;
};

inline SignedRowInstance partition_to_signed_row(std::vector<Rational> s, std::size_t t) {
  const std::size_t n = s.size();
  if (t < 1 || t + 1 > n)
    throw PreconditionViolated("partition size T must satisfy 1 <= T <= N-1");
  SignedRowInstance out;
  out.t = t;
  out.x = std::move(s);
  out.row.assign(n, -1);
  std::fill(out.row.begin(), out.row.begin() + static_cast<std::ptrdiff_t>(t), 1);
  return out;
}

/// A permutation pi with sum_j row_j x_{pi(j)} = 0, first in lexicographic order.
inline std::optional<std::vector<std::size_t>> solve_signed_row(const SignedRowInstance &inst) {
  std::vector<std::size_t> pi(inst.x.size());
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  do {
    Rational sum = 0;
    for (std::size_t j = 0; j < pi.size(); ++j)
      sum += inst.row[j] * inst.x[pi[j]];
    if (sum == 0)
      return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

/// A T-subset with half the total sum, as a membership mask.
inline std::optional<std::vector<bool>> solve_cardinality_partition(const std::vector<Rational> &s, std::size_t t) {
  const std::size_t n = s.size();
  Rational total = 0;
  for (const auto &v : s)
    total += v;
  std::vector<bool> mask(n, false);
  std::fill(mask.end() - static_cast<std::ptrdiff_t>(t), mask.end(), true);
  do {
    Rational sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i])
        sum += s[i];
    if (2 * sum == total)
      return mask;
  } while (std::next_permutation(mask.begin(), mask.end()));
  return std::nullopt;
}

inline GadgetVerdict brute_force_gadget_check(const SignedRowInstance &inst) {
  if (inst.x.size() > 7)
    throw BudgetExceeded("signed-row check is limited to N <= 7");
  GadgetVerdict v;
  v.source_solvable = solve_cardinality_partition(inst.x, inst.t).has_value();
  v.target_solvable = solve_signed_row(inst).has_value();
  v.forward_ok = !v.source_solvable || v.target_solvable;
  v.backward_ok = !v.target_solvable || v.source_solvable;
  return v;
}

// ---------------------------------------------------------------------------
// Doubled subset sum (gamma in {0,1,2}^N) -> cyclic adjacency-product sum.

struct DoubledSubsetSumGadget {
  std::vector<BigInt> y;
  BigInt alpha;
  std::vector<BigInt> z; // alpha * y_i
  std::size_t p = 0;     // 2N + 1
  std::vector<Rational> padded; // z, then 1/p (N+1 times), then 0 (2N+2 times)
  Rational target;              // alpha^2 / p

  std::size_t size() const noexcept { return y.size(); }
};

inline DoubledSubsetSumGadget doubled_subset_sum_to_tour(std::vector<BigInt> y, BigInt alpha) {
  if (y.empty())
    throw PreconditionViolated("need at least one weight");
  if (alpha <= 0)
    throw PreconditionViolated("alpha must be a positive integer");
  for (const auto &v : y)
    if (v <= 1)
      throw PreconditionViolated("every y_i must exceed 1");
  DoubledSubsetSumGadget g;
  const std::size_t n = y.size();
  g.p = 2 * n + 1;
  for (const auto &v : y)
    g.z.push_back(alpha * v);
  for (const auto &v : g.z)
    g.padded.emplace_back(v);
  const Rational inv_p(1, static_cast<unsigned long>(g.p));
  g.padded.insert(g.padded.end(), n + 1, inv_p);
  g.padded.insert(g.padded.end(), 2 * n + 2, Rational(0));
  g.target = Rational(alpha * alpha) / static_cast<unsigned long>(g.p);
  g.y = std::move(y);
  g.alpha = std::move(alpha);
  return g;
}

/// sum over cyclic neighbours of a_u a_{u+1}.
inline Rational cyclic_adjacency_sum(const std::vector<Rational> &a) {
  Rational s = 0;
  for (std::size_t u = 0; u < a.size(); ++u)
    s += a[u] * a[(u + 1) % a.size()];
  return s;
}

/// gamma in {0,1,2}^N with sum_i y_i gamma_i = alpha (equivalently
/// sum z_i gamma_i = alpha^2), first in lexicographic order.
inline std::optional<std::vector<int>> solve_doubled_subset_sum(const std::vector<BigInt> &y, const BigInt &alpha) {
  std::vector<int> gamma(y.size(), 0);
  while (true) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
      sum += y[i] * gamma[i];
    if (sum == alpha)
      return gamma;
    std::size_t i = y.size();
    while (i > 0 && gamma[i - 1] == 2)
      gamma[--i] = 0;
    if (i == 0)
      return std::nullopt;
    ++gamma[i - 1];
  }
}

/// Cyclic arrangement realising gamma: each z_i sits next to gamma_i copies
/// of 1/p and otherwise next to zeros. Spare 1/p copies sit between zeros.
inline std::vector<Rational> sandwich_arrangement(const DoubledSubsetSumGadget &g, const std::vector<int> &gamma) {
  const std::size_t n = g.size();
  if (gamma.size() != n)
    throw PreconditionViolated("gamma has the wrong length");
  const Rational inv_p(1, static_cast<unsigned long>(g.p));
  const Rational zero(0);
  std::vector<bool> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gamma[i] < 0 || gamma[i] > 2)
      throw PreconditionViolated("gamma entries must lie in {0,1,2}");
    right[i] = gamma[i] >= 1;
    left[i] = gamma[i] == 2;
  }
  std::size_t spare_inv = n + 1;
  std::size_t spare_zero = 2 * n + 2;
  auto take = [&](const Rational &v) -> Rational {
    std::size_t &pool = v == 0 ? spare_zero : spare_inv;
    if (pool == 0)
      throw Error("sandwich arrangement ran out of padding");
    --pool;
    return v;
  };

  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(g.z[i]);
    const bool r = right[i];
    const bool l = left[(i + 1) % n];
    if (i + 1 < n) {
      if (r && l) {
        out.push_back(take(inv_p));
      } else {
        out.push_back(take(r ? inv_p : zero));
        if (r || l)
          out.push_back(take(l ? inv_p : zero));
      }
      continue;
    }
    // Closing separator: also absorbs all spare padding.
    out.push_back(take(r ? inv_p : zero));
    const std::size_t reserve_l = l ? 1 : 0;
    while (spare_inv > reserve_l) {
      if (out.back() != 0)
        out.push_back(take(zero));
      out.push_back(take(inv_p));
    }
    if (out.back() != 0)
      out.push_back(take(zero));
    while (spare_zero > 0)
      out.push_back(take(zero));
    if (l)
      out.push_back(take(inv_p));
  }
  return out;
}

struct KnapsackCheck {
  GadgetVerdict verdict;
  bool beta_zero = true;      // no two 1/p copies adjacent in any solution
  bool no_adjacent_z = true;  // no two z values adjacent in any solution
  std::size_t arrangements = 0; // satisfying arrangements with z_1 first
  bool sandwich_ok = true;    // constructive arrangement hits the target
};

/// Exhaustive check on tiny instances (N <= 3). Values are scaled by p so
/// 1/p becomes 1 and the target becomes alpha^2 p; rotations are removed by
/// fixing z_1 in the first slot.
inline KnapsackCheck brute_force_gadget_check(const DoubledSubsetSumGadget &g) {
  const std::size_t n = g.size();
  if (n > 3)
    throw BudgetExceeded("doubled subset sum check is limited to N <= 3");
  KnapsackCheck out;
  auto gamma = solve_doubled_subset_sum(g.y, g.alpha);
  out.verdict.source_solvable = gamma.has_value();
  if (gamma)
    out.sandwich_ok = cyclic_adjacency_sum(sandwich_arrangement(g, *gamma)) == g.target;

  // codes: 0 = zero, 1 = 1/p, 2 + i = z_i
  const BigInt p(static_cast<unsigned long>(g.p));
  std::vector<BigInt> scaled(n + 2);
  scaled[0] = 0;
  scaled[1] = 1;
  for (std::size_t i = 0; i < n; ++i)
    scaled[2 + i] = g.z[i] * p;
  const BigInt target = g.alpha * g.alpha * p;

  std::vector<int> rest;
  rest.insert(rest.end(), 2 * n + 2, 0);
  rest.insert(rest.end(), n + 1, 1);
  for (std::size_t i = 1; i < n; ++i)
    rest.push_back(static_cast<int>(2 + i));
  std::sort(rest.begin(), rest.end());
  std::vector<int> cyc(rest.size() + 1);
  cyc[0] = 2;
  do {
    std::copy(rest.begin(), rest.end(), cyc.begin() + 1);
    BigInt sum = 0;
    for (std::size_t u = 0; u < cyc.size(); ++u)
      sum += scaled[cyc[u]] * scaled[cyc[(u + 1) % cyc.size()]];
    if (sum != target)
      continue;
    ++out.arrangements;
    for (std::size_t u = 0; u < cyc.size(); ++u) {
      int a = cyc[u];
      int b = cyc[(u + 1) % cyc.size()];
      if (a == 1 && b == 1)
        out.beta_zero = false;
      if (a >= 2 && b >= 2)
        out.no_adjacent_z = false;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));

  out.verdict.target_solvable = out.arrangements > 0;
  out.verdict.forward_ok = !out.verdict.source_solvable || out.verdict.target_solvable;
  out.verdict.backward_ok = !out.verdict.target_solvable || out.verdict.source_solvable;
  return out;
}

} // namespace kcompress
