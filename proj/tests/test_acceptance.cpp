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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "kcompress/kcompress.hpp"
#include "kcompress/oracles.hpp"
#include "test_support.hpp"

namespace {

using namespace kcompress;
using testing::q;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(const std::string &why) {
    pass = false;
    if (problems.size() < 5)
      problems.push_back(why);
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double v, int digits = 1) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

std::string data(const char *name) { return std::string(KCOMPRESS_DATA_DIR) + "/" + name; }

/// Runs the tables command and returns K -> count.
std::map<std::size_t, std::string> run_tables(std::size_t n, std::optional<std::size_t> k, std::string &err) {
  std::vector<std::string> args{"kcompress", "tables", "--n", std::to_string(n)};
  if (k) {
    args.push_back("--k");
    args.push_back(std::to_string(*k));
  }
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, e;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, e);
  std::map<std::size_t, std::string> rows;
  if (code != 0) {
    err = "tables --n " + std::to_string(n) + " exited " + std::to_string(code) + ": " + e.str();
    return rows;
  }
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line); // header
  while (std::getline(in, line)) {
    auto comma = line.find(',');
    rows[std::stoul(line.substr(0, comma))] = line.substr(comma + 1);
  }
  return rows;
}

using Expected = std::vector<std::pair<std::size_t, const char *>>;

void compare_rows(Outcome &o, std::size_t n, const std::map<std::size_t, std::string> &rows, const Expected &want) {
  for (const auto &[k, count] : want) {
    auto it = rows.find(k);
    if (it == rows.end())
      o.fail("N=" + std::to_string(n) + " K=" + std::to_string(k) + " missing");
    else if (it->second != count)
      o.fail("N=" + std::to_string(n) + " K=" + std::to_string(k) + ": got " + it->second + ", want " + count);
  }
}

Outcome criterion_1() {
  Outcome o;
  const std::map<std::size_t, Expected> tables{
      {6, {{4, "720"}, {3, "8"}, {2, "2"}}},
      {7, {{5, "5040"}, {4, "66"}, {3, "2"}}},
      {8, {{6, "40320"}, {5, "68"}, {4, "2"}}},
      {9, {{7, "362880"}, {6, "398"}, {5, "8"}, {4, "2"}, {3, "2"}}},
      {10, {{8, "3628800"}, {7, "1726"}, {6, "12"}, {5, "4"}, {4, "2"}}},
  };
  auto t0 = Clock::now();
  std::size_t checked = 0;
  for (const auto &[n, want] : tables) {
    std::string err;
    auto rows = run_tables(n, std::nullopt, err);
    if (!err.empty())
      o.fail(err);
    compare_rows(o, n, rows, want);
    checked += want.size();
  }
  const double t = seconds_since(t0);
  if (t > 60)
    o.fail("took " + fixed(t) + " s, limit 60 s");
  o.detail = std::to_string(checked) + " rows for N=6..10 in " + fixed(t) + " s";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  auto t0 = Clock::now();
  std::string err;
  for (std::size_t k : {8u, 7u, 6u, 5u}) {
    static const std::map<std::size_t, const char *> want{{8, "11798"}, {7, "32"}, {6, "2"}, {5, "2"}};
    auto rows = run_tables(11, k, err);
    compare_rows(o, 11, rows, {{k, want.at(k)}});
  }
  const double t11 = seconds_since(t0);
  auto t1 = Clock::now();
  compare_rows(o, 12, run_tables(12, 8, err), {{8, "28"}});
  const double t12 = seconds_since(t1);
  compare_rows(o, 12, run_tables(12, 10, err), {{10, "479001600"}});
  compare_rows(o, 13, run_tables(13, 11, err), {{11, "6227020800"}});
  compare_rows(o, 14, run_tables(14, 12, err), {{12, "87178291200"}});
  if (factorial(13) != BigInt("6227020800") || factorial(14) != BigInt("87178291200"))
    o.fail("factorial mismatch");
  // Non-trivial N=13 rows must be refused without --force.
  std::string refused;
  run_tables(13, 10, refused);
  if (refused.find("exited 3") == std::string::npos)
    o.fail("N=13 K=10 was not refused by the size guard");
  if (!err.empty())
    o.fail(err);
  if (t11 > 30 * 60)
    o.fail("N=11 took " + fixed(t11) + " s");
  if (t12 > 60 * 60)
    o.fail("N=12 K=8 took " + fixed(t12) + " s");
  o.detail = "N=11 rows in " + fixed(t11) + " s, N=12 K=8 in " + fixed(t12) + " s, 12!/13!/14! analytic";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t n = 3; n <= 7; ++n)
    for (std::size_t k = 1; k <= n - 2; ++k) {
      auto s = NumberSet::iota(n);
      if (count_compressing_sequences(s, k) != oracles::brute_force_count(s, k))
        o.fail("{1.." + std::to_string(n) + "} K=" + std::to_string(k));
      ++cases;
    }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> value(-30, 30);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial) % 4;
    std::set<long> v;
    while (v.size() < n)
      v.insert(value(rng));
    std::vector<Rational> elems(v.begin(), v.end());
    NumberSet s(elems);
    for (std::size_t k = 1; k <= n - 2; ++k) {
      if (count_compressing_sequences(s, k) != oracles::brute_force_count(s, k))
        o.fail("random set #" + std::to_string(trial) + " K=" + std::to_string(k));
      ++cases;
    }
  }
  o.detail = std::to_string(cases) + " (set, K) cases";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  std::mt19937_64 rng(404);
  const std::size_t cap[] = {0, 12, 12, 8, 7};
  std::size_t max_n = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial) % 4;
    std::uniform_int_distribution<std::size_t> size(4, cap[d]);
    const std::size_t n = size(rng);
    auto [f, orbit] = testing::random_orbit(rng, d, n);
    testing::shuffle(orbit, rng);
    NumberSet s(orbit);
    auto c = compress(s);
    if (decompress(c) != s)
      o.fail("round trip failed for " + to_string(f));
    if (c.degree_bound > d)
      o.fail("recovered K=" + std::to_string(c.degree_bound) + " > " + std::to_string(d));
    auto rec = io::parse_record(io::format_record(c));
    if (rec != c)
      o.fail("record text round trip failed");
    max_n = std::max(max_n, n);
  }
  o.detail = "200 orbits, degree 1..4, N up to " + std::to_string(max_n);
  return o;
}

Outcome criterion_5() {
  Outcome o;
  NumberSet exact = io::read_set_file(data("quadratic_orbit.set"));
  if (exact != NumberSet(testing::logistic_orbit()))
    o.fail("fixture differs from the orbit of 4x-4x^2 from 3/20");
  auto d = decide_k_compressible(exact, 2);
  if (!d)
    o.fail("exact orbit not decided 2-compressible");
  else {
    if (d->compressed.coefficients != Polynomial{0, 4, -4})
      o.fail("coefficients " + to_string(d->compressed.coefficients));
    if (d->compressed.start != q(3, 20))
      o.fail("start " + to_string(d->compressed.start));
  }
  NumberSet rounded = io::read_set_file(data("quadratic_orbit_rounded.set"));
  const bool rounded_2 = decide_k_compressible(rounded, 2).has_value();
  if (rounded_2)
    o.fail("rounded set decided 2-compressible");
  auto c = compress(rounded);
  o.detail = "exact orbit: (0,4,-4) from 3/20; 4-decimal set: not 2-compressible (minimal K=" +
             std::to_string(c.degree_bound) + ")";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + static_cast<std::size_t>(trial) % 3;
    auto [f, orbit] = testing::random_orbit(rng, k, k + 3 + static_cast<std::size_t>(trial) % 3);
    NumberSet s(orbit);
    const Rational lambda = testing::random_nonzero_rational(rng, 20, 7);
    const Rational gamma = testing::random_rational(rng, 20, 7);
    if (!decide_k_compressible(affine_image(s, lambda, gamma), k))
      o.fail(to_string(f) + " lambda=" + to_string(lambda) + " gamma=" + to_string(gamma));
  }
  o.detail = "100 triples";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  std::mt19937_64 rng(707);
  std::size_t done = 0;
  while (done < 100) {
    const std::size_t n = 5 + done % 4;
    const Rational a = testing::random_nonzero_rational(rng, 7, 3);
    const Rational b = testing::random_rational(rng, 7, 3);
    const Rational x0 = testing::random_rational(rng, 7, 3);
    std::vector<Rational> orbit;
    try {
      orbit = generate_orbit(Polynomial{b, a}, x0, n);
    } catch (const OrbitCollision &) {
      continue;
    }
    auto r = check_unique_linear(NumberSet(orbit));
    if (!r.is_1_compressible || r.witness_count != 2)
      o.fail("f=" + to_string(a) + "x+" + to_string(b) + " x0=" + to_string(x0) + ": " +
             std::to_string(r.witness_count) + " witnesses");
    ++done;
  }
  o.detail = "100 linear orbits, N=5..8";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  std::size_t witnesses = 0, open_ok = 0, cycle_ok = 0, spurious = 0, open_hits = 0;
  bool av = true;
  for (std::size_t n : {6u, 7u})
    for (std::size_t k = 1; k + 2 < n; ++k)
      for (std::size_t anchor = 0; anchor < n; ++anchor) {
        auto r = verify_reduction_equivalence(NumberSet::iota(n), k, anchor);
        witnesses += r.witnesses;
        open_ok += r.witnesses_open_ok;
        cycle_ok += r.witnesses_cycle_ok;
        spurious += r.cycle_spurious;
        open_hits += r.open_hits;
        av = av && r.witnesses_satisfy_constraints;
        if (!r.open_contains_witnesses())
          o.fail("N=" + std::to_string(n) + " K=" + std::to_string(k) + " anchor=" + std::to_string(anchor + 1) +
                 ": " + std::to_string(r.witnesses_open_ok) + "/" + std::to_string(r.witnesses) +
                 " witness paths attain alpha in open mode");
      }
  if (!av)
    o.fail("some witness violates A v = 0");
  o.detail = "A v = 0: " + std::string(av ? "all" : "not all") + " " + std::to_string(witnesses) +
             " witnesses; open mode: " + std::to_string(open_ok) + "/" + std::to_string(witnesses) +
             " attain alpha (" + std::to_string(open_hits) + " open hits overall); cycle mode (informational): " +
             std::to_string(cycle_ok) + "/" + std::to_string(witnesses) + ", " + std::to_string(spurious) +
             " spurious";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  std::size_t partitions = 0, knapsacks = 0;
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<long> value(1, 15);
  for (std::size_t n = 2; n <= 7; ++n)
    for (int rep = 0; rep < 6; ++rep) {
      std::set<long> v;
      while (v.size() < n)
        v.insert(value(rng));
      std::vector<Rational> elems(v.begin(), v.end());
      for (std::size_t t = 1; t < n; ++t) {
        auto verdict = brute_force_gadget_check(partition_to_signed_row(elems, t));
        if (!verdict.ok())
          o.fail("partition N=" + std::to_string(n) + " T=" + std::to_string(t));
        ++partitions;
      }
    }
  auto knap = [&](std::vector<BigInt> y, long alpha) {
    auto c = brute_force_gadget_check(doubled_subset_sum_to_tour(y, alpha));
    if (!c.verdict.ok() || !c.sandwich_ok)
      o.fail("knapsack alpha=" + std::to_string(alpha));
    ++knapsacks;
    return c;
  };
  for (long alpha : {4L, 5L}) {
    auto c = knap({2, 3}, alpha);
    if (!c.verdict.source_solvable || !c.verdict.target_solvable)
      o.fail("y=(2,3) alpha=" + std::to_string(alpha) + " expected solvable on both sides");
  }
  for (long y1 = 2; y1 <= 5; ++y1) {
    for (long alpha = 1; alpha <= 12; ++alpha)
      knap({y1}, alpha);
    for (long y2 = y1; y2 <= 5; ++y2)
      for (long alpha = 1; alpha <= 12; ++alpha)
        knap({y1, y2}, alpha);
  }
  for (long alpha : {1L, 5L, 9L, 12L, 18L})
    knap({2, 3, 4}, alpha);
  o.detail = std::to_string(partitions) + " partition and " + std::to_string(knapsacks) + " knapsack gadgets";
  return o;
}

// ---- criterion 10

std::set<std::vector<Index>> successor_maps(const std::vector<std::vector<Index>> &tours) {
  std::set<std::vector<Index>> out;
  for (const auto &t : tours)
    out.insert(cyclic_successors(t));
  return out;
}

void criterion_10a(Outcome &o, std::size_t &cases) {
  std::vector<NumberSet> sets{NumberSet::iota(6), NumberSet::iota(7), NumberSet{2, 3, 5, 8, 13, 21},
                              NumberSet{1, 4, 6, 7, 10, 12, 15}};
  for (const auto &s : sets) {
    const std::size_t n = s.size();
    for (std::size_t k = 1; k + 2 < n; ++k) {
      // Witness successor maps grouped by the anchor they end at.
      std::map<std::size_t, std::set<std::vector<Index>>> by_anchor;
      for (const auto &order : oracles::brute_force_witnesses(s, k)) {
        const std::size_t anchor = *s.index_of(order.back());
        auto columns = anchor_last_columns(n, anchor);
        std::vector<Index> col_of(n);
        for (Index c = 0; c < n; ++c)
          col_of[columns[c]] = c;
        std::vector<Index> pi;
        for (const auto &v : order)
          pi.push_back(col_of[*s.index_of(v)]);
        by_anchor[anchor].insert(cyclic_successors(pi));
      }
      for (std::size_t anchor = 0; anchor < n; ++anchor) {
        ++cases;
        const std::string where = "N=" + std::to_string(n) + " K=" + std::to_string(k) + " anchor " +
                                  to_string(s[anchor]);
        auto b = epsilon_condition(s, k, q(0), anchor);
        if (b.lo != b.alpha || b.hi != b.alpha || b.p1 != 0 || b.p2 != 0 || b.q1 != 1 || b.q2 != 1)
          o.fail(where + ": epsilon=0 interval is not the point alpha");
        auto eps_maps = successor_maps(all_tours_in_window<Rational>(b.h, b.x, b.lo, b.hi, Closing::Cycle));
        auto chain = reduce(s, k, anchor);
        auto exact_maps = successor_maps(
            all_tours_in_window<BigInt>(chain.tour.h, chain.tour.y, chain.tour.alpha, chain.tour.alpha, Closing::Cycle));
        if (eps_maps != exact_maps)
          o.fail(where + ": permutation sets differ from the exact pipeline");
        if (eps_maps != by_anchor[anchor])
          o.fail(where + ": permutation set differs from the direct witnesses");
      }
    }
  }
}

struct PositiveOrbit {
  Polynomial f;
  Rational x0;
  std::size_t n;
  std::size_t k;
};

void criterion_10b(Outcome &o, std::size_t &cases, std::size_t &paired_empty) {
  std::vector<PositiveOrbit> fixtures;
  for (long a : {2L, 3L})
    for (long b : {0L, 1L, 3L})
      fixtures.push_back({Polynomial{b, a}, q(1 + b), static_cast<std::size_t>(6 + (a + b) % 2), 1});
  fixtures.push_back({Polynomial{q(1, 2), q(5, 2)}, q(1), 6, 1});
  fixtures.push_back({Polynomial{q(1, 3), q(7, 3)}, q(2, 3), 7, 1});
  fixtures.push_back({Polynomial{0, 0, 1}, q(2), 6, 2});
  fixtures.push_back({Polynomial{1, 0, 1}, q(2), 6, 2});
  fixtures.push_back({Polynomial{0, 1, 1}, q(1), 6, 2});
  fixtures.push_back({Polynomial{0, 1, 1}, q(3, 2), 7, 2});
  fixtures.push_back({Polynomial{1, 1, 1}, q(1), 7, 2});
  fixtures.push_back({Polynomial{0, 0, 2}, q(1), 6, 2});
  fixtures.push_back({Polynomial{0, 1, 0, 1}, q(1), 6, 3});
  fixtures.push_back({Polynomial{1, 0, 0, 1}, q(1), 7, 3});
  fixtures.push_back({Polynomial{0, 2, 1, 1}, q(1), 7, 3});
  fixtures.push_back({Polynomial{0, 0, 1, 1}, q(2), 7, 3});
  fixtures.push_back({Polynomial{0, 3}, q(5, 7), 8, 1});
  fixtures.push_back({Polynomial{0, 1, 2}, q(1, 2), 8, 2});
  for (const auto &fx : fixtures) {
    auto orbit = generate_orbit(fx.f, fx.x0, fx.n);
    NumberSet s(orbit);
    if (!decide_k_compressible(s, fx.k))
      o.fail("fixture " + to_string(fx.f) + " is not K-compressible");
    for (Rational eps : {q(1, 1000000), q(1, 10000), q(1, 100)}) {
      ++cases;
      const std::string where = to_string(fx.f) + " from " + to_string(fx.x0) + " eps=" + to_string(eps);
      try {
        auto b = epsilon_condition(s, fx.k, eps, *s.index_of(orbit.back()));
        Rational cost = b.cost(b.permutation_of(orbit, s));
        if (!b.contains(cost))
          o.fail(where + ": witness cost outside the interval");
        if (b.paired_interval_empty())
          ++paired_empty;
      } catch (const Error &e) {
        o.fail(where + ": " + e.what());
      }
    }
  }
  if (fixtures.size() != 20)
    o.fail("expected 20 sets, have " + std::to_string(fixtures.size()));
}

std::vector<std::vector<Rational>> separated_configs() {
  return {{q(0), q(1), q(3)},
          {q(1), q(2), q(4), q(7)},
          {q(-2), q(1, 2), q(3), q(11, 2), q(9)},
          {q(1), q(3), q(7), q(15), q(31)},
          {q(1, 3), q(4, 3), q(5, 2), q(4)},
          {q(2), q(5), q(11), q(23), q(47), q(95)}};
}

void criterion_10c(Outcome &o, double &worst) {
  for (const auto &pts : separated_configs()) {
    PointConfiguration cfg(pts);
    auto g = vandermonde_det_gradient(cfg);
    auto h = vandermonde_det_hessian(cfg);
    std::vector<long double> x;
    for (const auto &p : pts)
      x.push_back(static_cast<long double>(p.get_d()));
    auto fg = oracles::finite_difference_gradient(x, 1e-6L);
    auto fh = oracles::finite_difference_hessian(x, 1e-4L);
    long double gscale = 0, hscale = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      gscale = std::max<long double>(gscale, std::fabs(static_cast<long double>(g[i].get_d())));
      for (std::size_t j = 0; j < pts.size(); ++j)
        hscale = std::max<long double>(hscale, std::fabs(static_cast<long double>(h(i, j).get_d())));
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      double eg = static_cast<double>(std::fabs(fg[i] - static_cast<long double>(g[i].get_d())) / gscale);
      worst = std::max(worst, eg);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        double eh =
            static_cast<double>(std::fabs(fh[i][j] - static_cast<long double>(h(i, j).get_d())) / hscale);
        worst = std::max(worst, eh);
      }
    }
  }
  if (worst > 1e-6)
    o.fail("finite differences disagree, worst relative error " + std::to_string(worst));
}

void criterion_10d(Outcome &o, std::size_t &samples, std::size_t &true_det_escapes) {
  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<long> unit(-1000000, 1000000);
  for (const auto &pts : separated_configs()) {
    // Shift to positive points, perturb relative to magnitude.
    Rational lo = *std::min_element(pts.begin(), pts.end());
    std::vector<Rational> p;
    for (const auto &v : pts)
      p.push_back(v - lo + 1);
    for (Rational eps : {q(1, 1000000), q(1, 1000), q(1, 100)}) {
      PointConfiguration cfg(p);
      std::vector<Rational> eta;
      for (const auto &v : p)
        eta.push_back(eps * v);
      DetBounds b;
      try {
        b = taylor_det_bounds(cfg, eta);
      } catch (const OrderingViolated &) {
        continue;
      }
      auto g = vandermonde_det_gradient(cfg);
      auto h = vandermonde_det_hessian(cfg);
      for (int sample = 0; sample < 1000; ++sample) {
        std::vector<Rational> xi, moved;
        for (std::size_t i = 0; i < p.size(); ++i) {
          xi.push_back(eta[i] * q(unit(rng), 1000000));
          moved.push_back(p[i] + xi.back());
        }
        Rational model = b.d;
        for (std::size_t i = 0; i < p.size(); ++i) {
          model += g[i] * xi[i];
          for (std::size_t j = 0; j < p.size(); ++j)
            model += h(i, j) * xi[i] * xi[j] / 2;
        }
        if (model < b.lower || model > b.upper)
          o.fail("Taylor model escaped its bounds");
        Rational exact = vandermonde_det(PointConfiguration(moved));
        if (exact < b.lower || exact > b.upper)
          ++true_det_escapes;
        ++samples;
      }
    }
  }
}

Outcome criterion_10() {
  Outcome o;
  std::size_t a_cases = 0, b_cases = 0, paired_empty = 0, samples = 0, escapes = 0;
  double worst = 0;
  criterion_10a(o, a_cases);
  criterion_10b(o, b_cases, paired_empty);
  criterion_10c(o, worst);
  criterion_10d(o, samples, escapes);
  std::ostringstream d;
  d << "(a) " << a_cases << " anchor cases; (b) " << b_cases << " containments, paired interval empty in "
    << paired_empty << "/" << b_cases << " (informational); (c) worst FD error " << std::scientific
    << std::setprecision(2) << worst << "; (d) " << samples << " samples, exact determinant outside bounds "
    << escapes << " times (informational)";
  o.detail = d.str();
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
      {"table reproduction, N=6..10", criterion_1},
      {"extended tables, N=11 and N=12 K=8", criterion_2},
      {"pruned count equals brute force", criterion_3},
      {"compression round trip", criterion_4},
      {"quadratic orbit example", criterion_5},
      {"affine images stay compressible", criterion_6},
      {"exactly two linear witnesses", criterion_7},
      {"reduction chain equivalence", criterion_8},
      {"gadget verification", criterion_9},
      {"epsilon analysis properties", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": " << criteria[i].first << " | "
              << o.detail << " | " << fixed(seconds_since(t0)) << " s\n";
    for (const auto &p : o.problems)
      std::cout << "       " << p << "\n";
    std::cout.flush();
    failures += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
