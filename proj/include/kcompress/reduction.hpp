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

// Orbit question -> linear constraints on the successor assignment ->
// non-negative integer system -> one exact-cost tour.
//
// Vertex u of every instance below is column u of the constraint matrix:
// the set's elements in ascending order with the anchor moved to the end.
// A tour visits the orbit in order; the edge u -> w says "the image of
// element u is element w", and the closing edge anchor -> start carries the
// appended zero column.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "kcompress/errors.hpp"
#include "kcompress/matrix.hpp"
#include "kcompress/number_set.hpp"
#include "kcompress/rational.hpp"
#include "kcompress/search.hpp"
#include "kcompress/tour.hpp"
#include "kcompress/vandermonde.hpp"

namespace kcompress {

/// M x N rational constraints on v, last column zero.
struct ConstraintMatrix {
  RationalMatrix a;
  std::size_t anchor = 0;     // index into the set of the element assumed last
  std::vector<Index> columns; // set index of each column; columns.back() == anchor

  std::size_t rows() const noexcept { return a.rows(); }
  std::size_t cols() const noexcept { return a.cols(); }
};

/// Set indices ascending, anchor moved last.
inline std::vector<Index> anchor_last_columns(std::size_t n, std::size_t anchor) {
  if (anchor >= n)
    throw PreconditionViolated("anchor index out of range");
  std::vector<Index> cols;
  for (Index i = 0; i < n; ++i)
    if (i != anchor)
      cols.push_back(i);
  cols.push_back(static_cast<Index>(anchor));
  return cols;
}

inline std::vector<Rational> column_values(const NumberSet &s, const std::vector<Index> &columns) {
  std::vector<Rational> x;
  for (Index c : columns)
    x.push_back(s[c]);
  return x;
}

/// Rows of P - I, P = V (V^T V)^{-1} V^T the projector onto the degree-<=K
/// Vandermonde column space over the non-anchor elements, reduced to a
/// maximal independent subset (N-K-2 rows), plus a zero column.
inline ConstraintMatrix build_projector_constraints(const NumberSet &s, std::size_t anchor, std::size_t k) {
  const std::size_t n = s.size();
  if (k < 1 || k + 2 >= n)
    throw PreconditionViolated("projector constraints need 1 <= K < N-2");
  auto columns = anchor_last_columns(n, anchor);
  const std::size_t rows = n - 1;
  std::vector<Rational> xs;
  for (std::size_t r = 0; r < rows; ++r)
    xs.push_back(s[columns[r]]);
  RationalMatrix v = vandermonde_matrix(xs, k + 1);
  RationalMatrix vt = v.transpose();
  RationalMatrix gram = vt * v;

  // X = gram^{-1} V^T, one column at a time.
  RationalMatrix x(k + 1, rows);
  for (std::size_t c = 0; c < rows; ++c) {
    std::vector<Rational> rhs(k + 1);
    for (std::size_t r = 0; r <= k; ++r)
      rhs[r] = vt(r, c);
    auto sol = solve_exact_linear_system(gram, rhs);
    for (std::size_t r = 0; r <= k; ++r)
      x(r, c) = sol[r];
  }
  RationalMatrix p = v * x;
  for (std::size_t i = 0; i < rows; ++i)
    p(i, i) -= 1;

  auto keep = independent_rows(p);
  if (keep.size() != n - k - 2)
    throw Error("projector complement has unexpected rank");
  ConstraintMatrix out;
  out.anchor = anchor;
  out.columns = std::move(columns);
  out.a = RationalMatrix(keep.size(), n, Rational(0));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < rows; ++j)
      out.a(i, j) = p(keep[i], j);
  return out;
}

struct IntegerSystem {
  IntegerMatrix a;
  std::vector<BigInt> x;
  std::vector<BigInt> row_scale; // L_i > 0
  BigInt x_scale;
};

/// Scales each row of a, and x, by the LCM of their denominators.
inline IntegerSystem clear_denominators(const RationalMatrix &a, std::span<const Rational> x) {
  IntegerSystem out;
  out.a = IntegerMatrix(a.rows(), a.cols(), BigInt(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j)
      l = lcm(l, a(i, j).get_den());
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.a(i, j) = BigInt(a(i, j) * l);
    out.row_scale.push_back(l);
  }
  BigInt l = 1;
  for (const auto &v : x)
    l = lcm(l, v.get_den());
  for (const auto &v : x)
    out.x.push_back(BigInt(v * l));
  out.x_scale = l;
  return out;
}

/// b_{i,j} = a_{i,j} + m_i, y_j = x_j + n, alpha_i = n s_i + m_i s + N n m_i.
/// Then sum_j b_{i,j} y_{pi(j)} - alpha_i = sum_j a_{i,j} x_{pi(j)} for every pi.
struct ShiftedSystem {
  IntegerMatrix b;
  std::vector<BigInt> y;
  std::vector<BigInt> alpha;
  std::vector<BigInt> m;
  BigInt n;
  std::vector<BigInt> s_row;
  BigInt s;

  std::size_t criteria() const noexcept { return b.rows(); }
  std::size_t size() const noexcept { return y.size(); }
};

inline ShiftedSystem shift_nonnegative(const IntegerMatrix &a, std::span<const BigInt> x) {
  if (a.cols() != x.size())
    throw PreconditionViolated("matrix and vector sizes differ");
  const std::size_t cols = x.size();
  ShiftedSystem out;
  out.n = 0;
  out.s = 0;
  for (const auto &v : x) {
    out.n = std::max(out.n, BigInt(-v));
    out.s += v;
  }
  for (const auto &v : x)
    out.y.push_back(v + out.n);
  out.b = IntegerMatrix(a.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt mi = 0;
    BigInt si = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      mi = std::max(mi, BigInt(-a(i, j)));
      si += a(i, j);
    }
    for (std::size_t j = 0; j < cols; ++j)
      out.b(i, j) = a(i, j) + mi;
    out.m.push_back(mi);
    out.s_row.push_back(si);
    out.alpha.push_back(out.n * si + mi * out.s + BigInt(static_cast<unsigned long>(cols)) * out.n * mi);
  }
  return out;
}

/// Single-target instance: h_u = sum_i b_{i,u} base^{i-1},
/// alpha = sum_i alpha_i base^{i-1}, base = N C_max + 1.
struct TourInstance {
  std::vector<BigInt> h;
  std::vector<BigInt> y;
  BigInt alpha;
  BigInt base;
  BigInt c_max;
  // Per-criterion data, kept for serialization and digit checks.
  IntegerMatrix b;
  std::vector<BigInt> alpha_rows;

  std::size_t size() const noexcept { return h.size(); }

  /// Every alpha_i fits in one digit, so a combined hit decodes to
  /// per-criterion hits.
  bool digits_sound() const {
    const BigInt cap = BigInt(static_cast<unsigned long>(h.size())) * c_max;
    return std::all_of(alpha_rows.begin(), alpha_rows.end(), [&](const BigInt &a) { return a <= cap; });
  }
};

inline TourInstance combine_criteria(const ShiftedSystem &sys) {
  const std::size_t n = sys.size();
  TourInstance out;
  out.y = sys.y;
  out.b = sys.b;
  out.alpha_rows = sys.alpha;
  out.c_max = 0;
  for (std::size_t i = 0; i < sys.criteria(); ++i)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        out.c_max = std::max(out.c_max, BigInt(sys.b(i, u) * sys.y[v]));
  out.base = BigInt(static_cast<unsigned long>(n)) * out.c_max + 1;
  out.h.assign(n, BigInt(0));
  out.alpha = 0;
  BigInt weight = 1;
  for (std::size_t i = 0; i < sys.criteria(); ++i) {
    for (std::size_t u = 0; u < n; ++u)
      out.h[u] += sys.b(i, u) * weight;
    out.alpha += sys.alpha[i] * weight;
    weight *= out.base;
  }
  return out;
}

/// The full chain for one anchor.
struct ReductionChain {
  ConstraintMatrix constraints;
  IntegerSystem integer;
  ShiftedSystem shifted;
  TourInstance tour;
};

inline ReductionChain reduce(const NumberSet &s, std::size_t k, std::size_t anchor) {
  ReductionChain r;
  r.constraints = build_projector_constraints(s, anchor, k);
  auto x = column_values(s, r.constraints.columns);
  r.integer = clear_denominators(r.constraints.a, x);
  r.shifted = shift_nonnegative(r.integer.a, r.integer.x);
  r.tour = combine_criteria(r.shifted);
  return r;
}

/// First permutation (lexicographic) with cost exactly alpha.
inline std::optional<std::vector<Index>> search_exact_cost_tour(const TourInstance &inst, Closing closing,
                                                                std::size_t budget = default_tour_budget) {
  return search_tour_window<BigInt>(inst.h, inst.y, inst.alpha, inst.alpha, closing, budget);
}

/// Complete bipartite graph B x Y with w(e_{u,v}) = h_u y_v and target alpha.
struct MatchingInstance {
  TourInstance combined;
  IntegerMatrix weights;
};

inline MatchingInstance to_matching_instance(const ShiftedSystem &sys) {
  MatchingInstance out;
  out.combined = combine_criteria(sys);
  const std::size_t n = sys.size();
  out.weights = IntegerMatrix(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      out.weights(u, v) = out.combined.h[u] * out.combined.y[v];
  return out;
}

/// Successor map of a tour read as a cycle: succ[pi[u]] = pi[u+1].
inline std::vector<Index> cyclic_successors(std::span<const Index> pi) {
  std::vector<Index> succ(pi.size());
  for (std::size_t u = 0; u < pi.size(); ++u)
    succ[pi[u]] = pi[(u + 1) % pi.size()];
  return succ;
}

struct ReductionReport {
  std::size_t anchor = 0;
  std::size_t witnesses = 0;              // orderings ending at the anchor
  bool witnesses_satisfy_constraints = true; // A v = 0 for every witness
  std::size_t witnesses_open_ok = 0;      // witness path attains alpha, open mode
  std::size_t witnesses_cycle_ok = 0;     // witness cycle attains alpha, cycle mode
  std::size_t open_hits = 0;              // permutations attaining alpha, open mode
  std::size_t cycle_hits = 0;             // permutations attaining alpha, cycle mode
  std::size_t cycle_spurious = 0;         // cycle hits that are not rotations of a witness
  bool digits_sound = true;

  bool open_contains_witnesses() const { return witnesses_open_ok == witnesses; }
  bool cycle_contains_witnesses() const { return witnesses_cycle_ok == witnesses; }
};

/// Exhaustive comparison of direct witnesses ending at the anchor with the
/// tour condition under both closing conventions. N <= 8.
inline ReductionReport verify_reduction_equivalence(const NumberSet &s, std::size_t k, std::size_t anchor) {
  const std::size_t n = s.size();
  if (n > 8)
    throw BudgetExceeded("reduction equivalence check is limited to N <= 8");
  if (k < 1)
    throw PreconditionViolated("degree bound K must be at least 1");
  ReductionReport rep;
  rep.anchor = anchor;

  ConstraintMatrix cm;
  TourInstance inst;
  if (k + 2 >= n) {
    // Every ordering is a witness; no constraints, zero weights.
    cm.anchor = anchor;
    cm.columns = anchor_last_columns(n, anchor);
    cm.a = RationalMatrix(0, n);
    auto x = column_values(s, cm.columns);
    auto integer = clear_denominators(cm.a, x);
    inst = combine_criteria(shift_nonnegative(integer.a, integer.x));
  } else {
    auto chain = reduce(s, k, anchor);
    cm = std::move(chain.constraints);
    inst = std::move(chain.tour);
  }
  rep.digits_sound = inst.digits_sound();
  const auto x = column_values(s, cm.columns);

  auto cost = [&](std::span<const Index> pi, Closing closing) {
    return tour_cost<BigInt>(inst.h, inst.y, pi, closing);
  };

  std::set<std::vector<Index>> witness_successors;
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::vector<Rational> seq(n);
  do {
    if (perm.back() != n - 1)
      continue;
    for (std::size_t u = 0; u < n; ++u)
      seq[u] = x[perm[u]];
    bool is_witness = k + 2 >= n || verify_sequence(seq, k).has_value();
    if (!is_witness)
      continue;
    ++rep.witnesses;
    // v_j = image of column j; the anchor's slot holds the start.
    std::vector<Rational> v(n);
    for (std::size_t u = 0; u + 1 < n; ++u)
      v[perm[u]] = x[perm[u + 1]];
    v[n - 1] = x[perm[0]];
    for (const auto &r : cm.a * v)
      if (r != 0)
        rep.witnesses_satisfy_constraints = false;
    if (cost(perm, Closing::Open) == inst.alpha)
      ++rep.witnesses_open_ok;
    if (cost(perm, Closing::Cycle) == inst.alpha)
      ++rep.witnesses_cycle_ok;
    witness_successors.insert(cyclic_successors(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::iota(perm.begin(), perm.end(), Index{0});
  do {
    if (cost(perm, Closing::Open) == inst.alpha)
      ++rep.open_hits;
    if (cost(perm, Closing::Cycle) == inst.alpha) {
      ++rep.cycle_hits;
      if (!witness_successors.count(cyclic_successors(perm)))
        ++rep.cycle_spurious;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rep;
}

} // namespace kcompress
