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

// Necessary condition for a positive set to be within relative distance
// epsilon of a K-compressible set.
//
// With the anchor fixed last, the non-anchor elements x_1 < ... < x_{N-1}
// give M = N-K-2 equations sum_j a_{i,j} v_j = 0. Row i uses the points
// x_1..x_{K+1} and x_{K+1+i}; its entries are signed Vandermonde
// determinants of K+1 of those points, all other entries are zero. Every
// nonzero entry moves by at most a factor (1 +- gamma) when the points
// move inside their epsilon boxes (second-order Taylor model with a box
// bound). Shifting by D, combining rows in base N C_max + 1 and bounding
// the perturbed weights then brackets the unperturbed tour cost.
//
// Because sum_j v_j is the same for every permutation, the shifted row
// target is D sum_j x_j.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kcompress/errors.hpp"
#include "kcompress/matrix.hpp"
#include "kcompress/number_set.hpp"
#include "kcompress/rational.hpp"
#include "kcompress/reduction.hpp"
#include "kcompress/search.hpp"
#include "kcompress/tour.hpp"
#include "kcompress/vandermonde.hpp"

namespace kcompress {

/// |y - x| <= epsilon |x|
inline bool epsilon_perturbation_check(const Rational &x, const Rational &y, const Rational &epsilon) {
  if (epsilon < 0)
    throw PreconditionViolated("epsilon must be non-negative");
  return abs(y - x) <= epsilon * abs(x);
}

struct DetBounds {
  Rational d;
  Rational radius; // sum |g_i| eta_i + 1/2 sum |H_ij| eta_i eta_j
  Rational lower;  // d - radius
  Rational upper;  // d + radius
};

namespace detail {

/// Sorted boxes [x_i - eta_i, x_i + eta_i] must be pairwise disjoint.
inline void require_separated(std::vector<std::pair<Rational, Rational>> pts) {
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i].first + pts[i].second >= pts[i + 1].first - pts[i + 1].second)
      throw OrderingViolated("perturbation boxes of " + to_string(pts[i].first) + " and " +
                             to_string(pts[i + 1].first) + " overlap");
}

} // namespace detail

/// Bounds on the second-order Taylor model of d(x + xi) over |xi_i| <= eta_i.
inline DetBounds taylor_det_bounds(const PointConfiguration &points, std::span<const Rational> eta) {
  const std::size_t m = points.size();
  if (eta.size() != m)
    throw PreconditionViolated("eta must have one entry per point");
  std::vector<std::pair<Rational, Rational>> boxes;
  for (std::size_t i = 0; i < m; ++i) {
    if (eta[i] < 0)
      throw PreconditionViolated("eta must be non-negative");
    boxes.emplace_back(points[i], eta[i]);
  }
  detail::require_separated(std::move(boxes));

  DetBounds out;
  out.d = vandermonde_det(points);
  out.radius = 0;
  if (m >= 2) {
    const auto g = vandermonde_det_gradient(points);
    const auto h = vandermonde_det_hessian(points);
    Rational second = 0;
    for (std::size_t i = 0; i < m; ++i) {
      out.radius += abs(g[i]) * eta[i];
      for (std::size_t j = 0; j < m; ++j)
        second += abs(h(i, j)) * eta[i] * eta[j];
    }
    out.radius += second / 2;
  }
  out.lower = out.d - out.radius;
  out.upper = out.d + out.radius;
  return out;
}

/// Determinant-based constraint rows for one anchor. Column order is the
/// non-anchor elements ascending, then the anchor.
struct DeterminantConstraints {
  std::size_t k = 0;
  std::vector<Index> columns;
  std::vector<Rational> x;
  RationalMatrix a;

  std::size_t rows() const noexcept { return a.rows(); }

  /// Columns of the points whose Vandermonde determinant gives entry (i, j),
  /// in determinant order; empty for structural zeros.
  std::vector<std::size_t> entry_points(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> pts;
    if (j <= k) {
      for (std::size_t c = 0; c <= k; ++c)
        if (c != j)
          pts.push_back(c);
      pts.push_back(k + 1 + i);
    } else if (j == k + 1 + i) {
      for (std::size_t c = 0; c <= k; ++c)
        pts.push_back(c);
    }
    return pts;
  }

  std::vector<Rational> entry_values(std::size_t i, std::size_t j, std::span<const Rational> at) const {
    std::vector<Rational> v;
    for (std::size_t c : entry_points(i, j))
      v.push_back(at[c]);
    return v;
  }

  /// Sign of the cofactor for entry (i, j): (-1)^{K+j} with 1-based j for
  /// the first K+1 columns, + for the diagonal determinant.
  int entry_sign(std::size_t j) const {
    if (j <= k)
      return ((k + j + 1) % 2 == 0) ? 1 : -1;
    return 1;
  }

  /// The entry evaluated at arbitrary column values (used by perturbation
  /// sampling).
  Rational entry_at(std::size_t i, std::size_t j, std::span<const Rational> at) const {
    auto pts = entry_values(i, j, at);
    if (pts.empty())
      return 0;
    return entry_sign(j) * vandermonde_det(PointConfiguration(std::move(pts)));
  }
};

inline DeterminantConstraints build_determinant_constraints(std::vector<Rational> column_x, std::vector<Index> columns,
                                                            std::size_t k) {
  const std::size_t n = column_x.size();
  if (k < 1 || k + 2 >= n)
    throw PreconditionViolated("determinant constraints need 1 <= K < N-2");
  DeterminantConstraints dc;
  dc.k = k;
  dc.columns = std::move(columns);
  dc.x = std::move(column_x);
  const std::size_t m = n - k - 2;
  dc.a = RationalMatrix(m, n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      dc.a(i, j) = dc.entry_at(i, j, dc.x);
  return dc;
}

/// Unscaled version over the set itself.
inline DeterminantConstraints build_determinant_constraints(const NumberSet &s, std::size_t anchor, std::size_t k) {
  auto columns = anchor_last_columns(s.size(), anchor);
  auto x = column_values(s, columns);
  return build_determinant_constraints(std::move(x), std::move(columns), k);
}

struct PerturbationBounds {
  Rational epsilon;
  std::size_t anchor = 0;
  std::size_t k = 0;
  BigInt scale;                 // set multiplied by this to clear denominators
  std::vector<Index> columns;   // set index per column, anchor last
  std::vector<Rational> x;      // scaled column values
  std::vector<Rational> eta;    // epsilon * x
  RationalMatrix a;
  RationalMatrix gamma1, gamma2;
  BigInt shift_d;
  RationalMatrix b;
  RationalMatrix delta1, delta2;
  BigInt c_max;
  BigInt base;
  std::vector<Rational> h;
  std::vector<Rational> alpha_rows;
  Rational alpha;
  std::vector<Rational> beta1, beta2;
  Rational beta1_max, beta2_max;
  std::vector<Rational> theta1, theta2;
  Rational p1, p2, q1, q2;
  // Bracket for the unperturbed cost: (1-p1)/q2 alpha .. (1+p2)/q1 alpha.
  Rational lo, hi;
  // The other pairing, (1-p1)/q1 alpha .. (1+p2)/q2 alpha; usually empty
  // for epsilon > 0.
  Rational paired_lo, paired_hi;

  bool paired_interval_empty() const { return paired_lo > paired_hi; }
  bool contains(const Rational &cost) const { return lo <= cost && cost <= hi; }

  /// sum_u h_{pi(u)} x_{pi(u+1)} with the wrap-around term.
  Rational cost(std::span<const Index> pi) const { return tour_cost<Rational>(h, x, pi, Closing::Cycle); }

  /// Column permutation of an element ordering (orbit order). Throws if the
  /// ordering does not end at the anchor.
  std::vector<Index> permutation_of(std::span<const Rational> order, const NumberSet &s) const {
    std::vector<Index> col_of(columns.size());
    for (Index c = 0; c < columns.size(); ++c)
      col_of[columns[c]] = c;
    std::vector<Index> pi;
    for (const auto &v : order) {
      auto idx = s.index_of(v);
      if (!idx)
        throw PreconditionViolated("ordering contains an element outside the set");
      pi.push_back(col_of[*idx]);
    }
    if (pi.size() != columns.size() || pi.back() != columns.size() - 1)
      throw PreconditionViolated("ordering must list every element and end at the anchor");
    return pi;
  }
};

inline BigInt denominator_lcm(const NumberSet &s) {
  BigInt l = 1;
  for (const auto &v : s)
    l = lcm(l, v.get_den());
  return l;
}

namespace detail {

inline void require_positive(const NumberSet &s) {
  if (s[0] <= 0)
    throw PreconditionViolated("epsilon analysis needs positive elements");
}

/// (1+eps) x_i < (1-eps) x_{i+1} over the whole sorted set.
inline void require_epsilon_separation(const NumberSet &s, const Rational &eps) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if ((1 + eps) * s[i] >= (1 - eps) * s[i + 1])
      throw OrderingViolated("epsilon = " + to_string(eps) + " does not separate " + to_string(s[i]) + " and " +
                             to_string(s[i + 1]));
}

inline Rational entry_gamma(const DeterminantConstraints &dc, std::size_t i, std::size_t j,
                            std::span<const Rational> eta) {
  auto pts = dc.entry_values(i, j, dc.x);
  std::vector<Rational> e;
  for (std::size_t c : dc.entry_points(i, j))
    e.push_back(eta[c]);
  auto bounds = taylor_det_bounds(PointConfiguration(std::move(pts)), e);
  return bounds.radius / abs(bounds.d);
}

} // namespace detail

/// (gamma1, gamma2) for one structurally nonzero entry. i, j are 0-based
/// row and column indices of the determinant constraint matrix.
inline std::pair<Rational, Rational> entry_bounds(const NumberSet &s, std::size_t anchor, std::size_t k, std::size_t i,
                                                  std::size_t j, const Rational &epsilon) {
  if (epsilon < 0)
    throw PreconditionViolated("epsilon must be non-negative");
  detail::require_positive(s);
  detail::require_epsilon_separation(s, epsilon);
  auto dc = build_determinant_constraints(s, anchor, k);
  if (i >= dc.rows() || j >= dc.a.cols())
    throw PreconditionViolated("entry index out of range");
  if (dc.a(i, j) == 0)
    throw PreconditionViolated("entry is a structural zero");
  std::vector<Rational> eta;
  for (const auto &v : dc.x)
    eta.push_back(epsilon * v);
  Rational g = detail::entry_gamma(dc, i, j, eta);
  return {g, g};
}

inline PerturbationBounds epsilon_condition(const NumberSet &s, std::size_t k, const Rational &epsilon,
                                            std::size_t anchor) {
  if (epsilon < 0)
    throw PreconditionViolated("epsilon must be non-negative");
  const std::size_t n = s.size();
  if (k < 1 || k + 2 >= n)
    throw PreconditionViolated("epsilon analysis needs 1 <= K < N-2");
  detail::require_positive(s);
  detail::require_epsilon_separation(s, epsilon);

  PerturbationBounds pb;
  pb.epsilon = epsilon;
  pb.anchor = anchor;
  pb.k = k;
  pb.scale = denominator_lcm(s);
  auto columns = anchor_last_columns(n, anchor);
  std::vector<Rational> x;
  for (Index c : columns)
    x.push_back(s[c] * pb.scale);
  auto dc = build_determinant_constraints(std::move(x), std::move(columns), k);
  pb.columns = dc.columns;
  pb.x = dc.x;
  pb.a = dc.a;
  for (const auto &v : pb.x)
    pb.eta.push_back(epsilon * v);

  const std::size_t m = dc.rows();
  pb.gamma1 = RationalMatrix(m, n, Rational(0));
  pb.gamma2 = RationalMatrix(m, n, Rational(0));
  Rational widest = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (pb.a(i, j) == 0)
        continue;
      Rational g = detail::entry_gamma(dc, i, j, pb.eta);
      if (g >= 1)
        throw EpsilonTooLarge("determinant lower bound is not positive for entry (" + std::to_string(i + 1) + ", " +
                              std::to_string(j + 1) + ")");
      pb.gamma1(i, j) = g;
      pb.gamma2(i, j) = g;
      widest = std::max(widest, Rational((1 + g) * abs(pb.a(i, j))));
    }

  pb.shift_d = ceil(2 * widest);
  pb.b = RationalMatrix(m, n);
  pb.delta1 = RationalMatrix(m, n, Rational(0));
  pb.delta2 = RationalMatrix(m, n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational &a = pb.a(i, j);
      pb.b(i, j) = a + pb.shift_d;
      const Rational &b = pb.b(i, j);
      if (a >= 0) {
        pb.delta1(i, j) = pb.gamma1(i, j) * a / b;
        pb.delta2(i, j) = pb.gamma2(i, j) * a / b;
      } else {
        pb.delta1(i, j) = -pb.gamma2(i, j) * a / b;
        pb.delta2(i, j) = -pb.gamma1(i, j) * a / b;
      }
    }

  // Largest perturbed per-criterion edge cost.
  const Rational x_max = *std::max_element(pb.x.begin(), pb.x.end());
  Rational c_max = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t u = 0; u < n; ++u)
      c_max = std::max(c_max, Rational((1 + pb.delta2(i, u)) * pb.b(i, u) * (1 + epsilon) * x_max));
  pb.c_max = ceil(c_max);
  pb.base = BigInt(static_cast<unsigned long>(n)) * pb.c_max + 1;

  Rational x_sum = 0;
  Rational eta_sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    x_sum += pb.x[j];
    eta_sum += pb.eta[j];
  }
  pb.h.assign(n, Rational(0));
  pb.beta1.assign(n, Rational(0));
  pb.beta2.assign(n, Rational(0));
  pb.alpha = 0;
  Rational weight = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t u = 0; u < n; ++u) {
      pb.h[u] += pb.b(i, u) * weight;
      pb.beta1[u] += pb.delta1(i, u) * pb.b(i, u) * weight;
      pb.beta2[u] += pb.delta2(i, u) * pb.b(i, u) * weight;
    }
    pb.alpha_rows.push_back(pb.shift_d * x_sum);
    pb.theta1.push_back(eta_sum / x_sum);
    pb.theta2.push_back(eta_sum / x_sum);
    pb.alpha += pb.alpha_rows.back() * weight;
    weight *= pb.base;
  }
  for (std::size_t u = 0; u < n; ++u) {
    pb.beta1[u] /= pb.h[u];
    pb.beta2[u] /= pb.h[u];
  }
  pb.beta1_max = *std::max_element(pb.beta1.begin(), pb.beta1.end());
  pb.beta2_max = *std::max_element(pb.beta2.begin(), pb.beta2.end());
  if (pb.beta1_max >= 1)
    throw EpsilonTooLarge("beta_1,max >= 1");

  pb.p1 = 0;
  pb.p2 = 0;
  weight = 1;
  for (std::size_t i = 0; i < m; ++i) {
    pb.p1 += pb.theta1[i] * pb.alpha_rows[i] * weight;
    pb.p2 += pb.theta2[i] * pb.alpha_rows[i] * weight;
    weight *= pb.base;
  }
  pb.p1 /= pb.alpha;
  pb.p2 /= pb.alpha;
  if (pb.p1 >= 1)
    throw EpsilonTooLarge("p_1 >= 1");

  pb.q1 = (1 - pb.beta1_max) * (1 - epsilon);
  pb.q2 = (1 + pb.beta2_max) * (1 + epsilon);
  if (pb.q1 <= 0)
    throw EpsilonTooLarge("q_1 <= 0");

  pb.lo = (1 - pb.p1) / pb.q2 * pb.alpha;
  pb.hi = (1 + pb.p2) / pb.q1 * pb.alpha;
  pb.paired_lo = (1 - pb.p1) / pb.q1 * pb.alpha;
  pb.paired_hi = (1 + pb.p2) / pb.q2 * pb.alpha;
  return pb;
}

enum class WindowVerdict { Found, Empty, BudgetExceeded };

inline const char *to_string(WindowVerdict v) {
  switch (v) {
  case WindowVerdict::Found:
    return "found";
  case WindowVerdict::Empty:
    return "none";
  case WindowVerdict::BudgetExceeded:
    return "budget-exceeded";
  }
  return "?";
}

struct AnchorResult {
  std::size_t anchor = 0;
  PerturbationBounds bounds;
  WindowVerdict verdict = WindowVerdict::Empty;
  std::optional<std::vector<Index>> permutation; // columns, cycle mode
};

struct EpsilonReport {
  std::vector<AnchorResult> anchors;

  /// At least one anchor has a permutation in its window.
  bool passes() const {
    return std::any_of(anchors.begin(), anchors.end(),
                       [](const AnchorResult &a) { return a.verdict == WindowVerdict::Found; });
  }
  bool budget_hit() const {
    return std::any_of(anchors.begin(), anchors.end(),
                       [](const AnchorResult &a) { return a.verdict == WindowVerdict::BudgetExceeded; });
  }
};

/// Intervals for every anchor plus the windowed tour search in cycle mode.
inline EpsilonReport epsilon_check(const NumberSet &s, std::size_t k, const Rational &epsilon,
                                   std::size_t budget = default_tour_budget) {
  EpsilonReport rep;
  for (std::size_t anchor = 0; anchor < s.size(); ++anchor) {
    AnchorResult r;
    r.anchor = anchor;
    r.bounds = epsilon_condition(s, k, epsilon, anchor);
    if (s.size() > budget) {
      r.verdict = WindowVerdict::BudgetExceeded;
    } else {
      r.permutation = search_tour_window<Rational>(r.bounds.h, r.bounds.x, r.bounds.lo, r.bounds.hi, Closing::Cycle,
                                                   budget);
      r.verdict = r.permutation ? WindowVerdict::Found : WindowVerdict::Empty;
    }
    rep.anchors.push_back(std::move(r));
  }
  return rep;
}

} // namespace kcompress
