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

// Brute-force reference implementations. They deliberately share no code
// with the paths they check: Lagrange evaluation instead of Newton
// interpolation, plain enumeration of all permutations instead of prefix
// pruning, Bareiss determinants instead of the product formula.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "kcompress/errors.hpp"
#include "kcompress/matrix.hpp"
#include "kcompress/number_set.hpp"
#include "kcompress/rational.hpp"
#include "kcompress/search.hpp"
#include "kcompress/tour.hpp"

namespace kcompress::oracles {

struct OracleBudget {
  std::size_t max_permutations = 40320; // 8!
  std::chrono::seconds max_seconds{600};

  OracleBudget() = default;
  OracleBudget(std::size_t perms, std::chrono::seconds secs) : max_permutations(perms), max_seconds(secs) {
    if (perms == 0 || secs.count() <= 0)
      throw PreconditionViolated("oracle budget must be positive");
  }
};

namespace detail {

inline void check_budget(std::size_t n, const OracleBudget &budget) {
  std::size_t perms = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    perms *= i;
    if (perms > budget.max_permutations)
      throw BudgetExceeded(std::to_string(n) + "! permutations exceed oracle budget");
  }
}

class Deadline {
public:
  explicit Deadline(const OracleBudget &b) : end_(std::chrono::steady_clock::now() + b.max_seconds) {}
  void check() const {
    if (std::chrono::steady_clock::now() > end_)
      throw BudgetExceeded("oracle time budget exhausted");
  }

private:
  std::chrono::steady_clock::time_point end_;
};

/// Lagrange form of the interpolant through (xs[i], ys[i]), evaluated at x.
inline Rational lagrange_eval(std::span<const Rational> xs, std::span<const Rational> ys,
                              const Rational &x) {
  Rational total = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational term = ys[i];
    for (std::size_t m = 0; m < xs.size(); ++m)
      if (m != i)
        term *= (x - xs[m]) / (xs[i] - xs[m]);
    total += term;
  }
  return total;
}

} // namespace detail

/// True iff seq is an orbit prefix of some degree-<=K polynomial. Direct
/// definition via Lagrange evaluation.
inline bool is_orbit_ordering(std::span<const Rational> seq, std::size_t k) {
  if (seq.size() < k + 3)
    return true;
  auto xs = seq.subspan(0, k + 1);
  auto ys = seq.subspan(1, k + 1);
  for (std::size_t j = k + 1; j + 1 < seq.size(); ++j)
    if (detail::lagrange_eval(xs, ys, seq[j]) != seq[j + 1])
      return false;
  return true;
}

/// Counts, over all N! orderings, those that are orbit prefixes of a
/// degree-<=K polynomial.
inline BigInt brute_force_count(const NumberSet &s, std::size_t k, const OracleBudget &budget = {}) {
  detail::check_budget(s.size(), budget);
  detail::Deadline deadline(budget);
  std::vector<Rational> seq = s.elements();
  BigInt count = 0;
  std::size_t visited = 0;
  do {
    if (is_orbit_ordering(seq, k))
      ++count;
    if ((++visited & 0x3ff) == 0)
      deadline.check();
  } while (std::next_permutation(seq.begin(), seq.end()));
  return count;
}

/// All orderings that are orbit prefixes, as element sequences.
inline std::vector<std::vector<Rational>> brute_force_witnesses(const NumberSet &s, std::size_t k,
                                                               const OracleBudget &budget = {}) {
  detail::check_budget(s.size(), budget);
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> seq = s.elements();
  do {
    if (is_orbit_ordering(seq, k))
      out.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

/// Every permutation with cost in [lo, hi], by plain enumeration.
template <class Num>
std::vector<std::vector<Index>> brute_force_tour(std::span<const Num> h, std::span<const Num> y,
                                                 const Num &lo, const Num &hi, Closing closing,
                                                 const OracleBudget &budget = {}) {
  detail::check_budget(h.size(), budget);
  std::vector<Index> pi(h.size());
  std::iota(pi.begin(), pi.end(), Index{0});
  std::vector<std::vector<Index>> out;
  do {
    Num cost = 0;
    for (std::size_t u = 0; u + 1 < pi.size(); ++u)
      cost += h[pi[u]] * y[pi[u + 1]];
    if (closing == Closing::Cycle)
      cost += h[pi.back()] * y[pi.front()];
    if (lo <= cost && cost <= hi)
      out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

/// Bareiss fraction-free determinant.
inline Rational bareiss_determinant(RationalMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n)
    throw PreconditionViolated("determinant of a non-square matrix");
  Rational sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return n == 0 ? Rational(1) : Rational(sign * m(n - 1, n - 1));
}

/// Determinant of the square Vandermonde matrix built entry by entry.
inline Rational vandermonde_det_by_elimination(std::span<const Rational> points) {
  const std::size_t m = points.size();
  RationalMatrix v(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational p = 1;
    for (std::size_t c = 0; c < m; ++c) {
      v(i, c) = p;
      p *= points[i];
    }
  }
  return bareiss_determinant(std::move(v));
}

/// Product-form Vandermonde determinant on long doubles.
inline long double vandermonde_det_float(std::span<const long double> x) {
  long double d = 1;
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      d *= x[j] - x[i];
  return d;
}

/// Central-difference gradient of the Vandermonde determinant.
inline std::vector<long double> finite_difference_gradient(std::span<const long double> x,
                                                           long double step) {
  std::vector<long double> g(x.size());
  std::vector<long double> p(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    p[i] = x[i] + step;
    long double up = vandermonde_det_float(p);
    p[i] = x[i] - step;
    long double down = vandermonde_det_float(p);
    p[i] = x[i];
    g[i] = (up - down) / (2 * step);
  }
  return g;
}

/// Central-difference Hessian of the Vandermonde determinant.
inline std::vector<std::vector<long double>> finite_difference_hessian(std::span<const long double> x,
                                                                       long double step) {
  const std::size_t m = x.size();
  std::vector<std::vector<long double>> h(m, std::vector<long double>(m));
  std::vector<long double> p(x.begin(), x.end());
  auto at = [&](std::size_t i, long double di, std::size_t j, long double dj) {
    p[i] += di;
    p[j] += dj;
    long double v = vandermonde_det_float(p);
    p[i] = x[i];
    p[j] = x[j];
    return v;
  };
  const long double d0 = vandermonde_det_float(x);
  for (std::size_t i = 0; i < m; ++i) {
    h[i][i] = (at(i, step, i, 0) - 2 * d0 + at(i, -step, i, 0)) / (step * step);
    for (std::size_t j = i + 1; j < m; ++j) {
      h[i][j] = (at(i, step, j, step) - at(i, step, j, -step) - at(i, -step, j, step) +
                 at(i, -step, j, -step)) /
                (4 * step * step);
      h[j][i] = h[i][j];
    }
  }
  return h;
}

} // namespace kcompress::oracles
