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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kcompress/errors.hpp"
#include "kcompress/rational.hpp"
#include "kcompress/search.hpp"

namespace kcompress {

/// Whether the tour pays for the closing edge pi(N) -> pi(1).
enum class Closing { Cycle, Open };

inline const char *to_string(Closing c) { return c == Closing::Cycle ? "cycle" : "open"; }

inline constexpr std::size_t default_tour_budget = 12;

/// sum_u h[pi(u)] y[pi(u+1)], with the wrap-around term in cycle mode.
template <class Num>
Num tour_cost(std::span<const Num> h, std::span<const Num> y, std::span<const Index> pi,
              Closing closing) {
  Num cost = 0;
  for (std::size_t u = 0; u + 1 < pi.size(); ++u)
    cost += h[pi[u]] * y[pi[u + 1]];
  if (closing == Closing::Cycle && !pi.empty())
    cost += h[pi.back()] * y[pi.front()];
  return cost;
}

namespace detail {

/// Depth-first search for permutations with lo <= cost <= hi. Prunes with
/// rearrangement bounds on the edges still to be placed.
template <class Num>
class WindowTourSearch {
public:
  WindowTourSearch(std::span<const Num> h, std::span<const Num> y, Num lo, Num hi, Closing closing)
      : h_(h), y_(y), lo_(std::move(lo)), hi_(std::move(hi)), closing_(closing), n_(h.size()),
        order_(n_), used_(n_, 0) {
    for (std::size_t i = 0; i < n_; ++i)
      if (h_[i] < 0 || y_[i] < 0)
        throw PreconditionViolated("tour weights must be non-negative");
  }

  template <class Visitor>
  void run(Visitor &&visit) {
    if (n_ == 0)
      return;
    Num zero = 0;
    descend(0, zero, visit);
  }

private:
  // Bounds on the cost of the edges still missing after `depth` placements.
  std::pair<Num, Num> remaining_bounds(std::size_t depth) {
    hs_.clear();
    ys_.clear();
    for (std::size_t v = 0; v < n_; ++v)
      if (!used_[v]) {
        hs_.push_back(h_[v]);
        ys_.push_back(y_[v]);
      }
    std::size_t edges = hs_.size();
    hs_.push_back(h_[order_[depth - 1]]);
    if (closing_ == Closing::Cycle) {
      ys_.push_back(y_[order_[0]]);
      ++edges;
    }
    std::sort(hs_.begin(), hs_.end());
    std::sort(ys_.begin(), ys_.end());
    Num low = 0;
    Num high = 0;
    const std::size_t hn = hs_.size();
    for (std::size_t e = 0; e < edges; ++e) {
      low += hs_[e] * ys_[edges - 1 - e];
      high += hs_[hn - edges + e] * ys_[e];
    }
    return {low, high};
  }

  template <class Visitor>
  bool descend(std::size_t depth, const Num &partial, Visitor &visit) {
    if (depth == n_) {
      Num cost = partial;
      if (closing_ == Closing::Cycle)
        cost += h_[order_[n_ - 1]] * y_[order_[0]];
      if (lo_ <= cost && cost <= hi_)
        return visit(std::span<const Index>(order_));
      return true;
    }
    if (depth > 0) {
      auto [low, high] = remaining_bounds(depth);
      if (partial + low > hi_ || partial + high < lo_)
        return true;
    }
    for (Index c = 0; c < n_; ++c) {
      if (used_[c])
        continue;
      order_[depth] = c;
      used_[c] = 1;
      bool go_on = depth == 0 ? descend(1, partial, visit)
                              : descend(depth + 1, Num(partial + h_[order_[depth - 1]] * y_[c]), visit);
      used_[c] = 0;
      if (!go_on)
        return false;
    }
    return true;
  }

  std::span<const Num> h_;
  std::span<const Num> y_;
  Num lo_;
  Num hi_;
  Closing closing_;
  std::size_t n_;
  std::vector<Index> order_;
  std::vector<char> used_;
  std::vector<Num> hs_;
  std::vector<Num> ys_;
};

inline void check_tour_budget(std::size_t n, std::size_t budget) {
  if (n > budget)
    throw BudgetExceeded("tour search over " + std::to_string(n) + " vertices exceeds budget of " +
                         std::to_string(budget));
}

} // namespace detail

/// First permutation (lexicographic) whose cost lies in [lo, hi].
template <class Num>
std::optional<std::vector<Index>> search_tour_window(std::span<const Num> h, std::span<const Num> y,
                                                     const Num &lo, const Num &hi, Closing closing,
                                                     std::size_t budget = default_tour_budget) {
  if (h.size() != y.size())
    throw PreconditionViolated("h and y must have equal length");
  detail::check_tour_budget(h.size(), budget);
  std::optional<std::vector<Index>> found;
  detail::WindowTourSearch<Num>(h, y, lo, hi, closing).run([&](std::span<const Index> pi) {
    found.emplace(pi.begin(), pi.end());
    return false;
  });
  return found;
}

/// Every permutation whose cost lies in [lo, hi], in lexicographic order.
template <class Num>
std::vector<std::vector<Index>> all_tours_in_window(std::span<const Num> h, std::span<const Num> y,
                                                    const Num &lo, const Num &hi, Closing closing,
                                                    std::size_t budget = default_tour_budget) {
  if (h.size() != y.size())
    throw PreconditionViolated("h and y must have equal length");
  detail::check_tour_budget(h.size(), budget);
  std::vector<std::vector<Index>> out;
  detail::WindowTourSearch<Num>(h, y, lo, hi, closing).run([&](std::span<const Index> pi) {
    out.emplace_back(pi.begin(), pi.end());
    return true;
  });
  return out;
}

} // namespace kcompress
