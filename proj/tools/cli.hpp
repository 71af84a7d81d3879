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

// Command-line front end. run_cli writes to the given streams so tests can
// call it in-process.
//
// Exit codes: 0 success / yes, 1 negative answer, 2 bad input or
// precondition, 3 budget refusal, 4 orbit collision, 5 epsilon refusal.

#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcompress/kcompress.hpp"

namespace kcompress::cli {

enum Exit : int {
  ok = 0,
  negative = 1,
  bad_input = 2,
  budget = 3,
  collision = 4,
  epsilon_refused = 5,
};

namespace detail {

inline std::string join(const std::vector<Rational> &v, const char *sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += sep;
    out += to_string(v[i]);
  }
  return out;
}

inline void emit(std::ostream &out, const std::string &text, const std::string &path) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw PreconditionViolated("cannot write " + path);
  f << text;
}

inline std::size_t check_anchor(const NumberSet &s, std::size_t position) {
  if (position < 1 || position > s.size())
    throw PreconditionViolated("anchor must lie in 1.." + std::to_string(s.size()));
  return position - 1;
}

inline NumberSet parse_value_list(const std::vector<std::string> &items) {
  std::vector<Rational> v;
  for (const auto &t : items)
    v.push_back(parse_rational(t));
  return NumberSet(std::move(v));
}

} // namespace detail

struct Options {
  std::string config;
  std::string set_file;
  std::string record_file;
  std::string output;
  std::size_t k = 0;
  unsigned jobs = 1;
  std::size_t n = 0;
  std::optional<std::size_t> table_k;
  bool force = false;
  std::size_t anchor = 0;
  std::string emit = "tour";
  std::string eps = "0";
  std::vector<std::string> values;
  std::size_t t = 0;
  std::vector<std::string> weights;
  std::string alpha;
  bool verify = false;
};

inline int cmd_check(const Options &o, std::ostream &out) {
  NumberSet s = io::read_set_file(o.set_file);
  auto d = decide_k_compressible(s, o.k);
  if (!d) {
    out << "compressible: no\n";
    return Exit::negative;
  }
  out << "compressible: yes\n";
  out << "degree: " << o.k << "\n";
  out << "order: " << detail::join(d->witness.order) << "\n";
  out << "coefficients: " << detail::join(d->compressed.coefficients.coefficients()) << "\n";
  out << "start: " << to_string(d->compressed.start) << "\n";
  return Exit::ok;
}

inline void require_count_budget(const BudgetConfig &cfg, std::size_t n, std::size_t k) {
  if (k + 2 < n && n > cfg.max_n_count)
    throw BudgetExceeded("counting with N = " + std::to_string(n) + " exceeds max_n_count = " +
                         std::to_string(cfg.max_n_count));
}

inline int cmd_count(const Options &o, const BudgetConfig &cfg, std::ostream &out) {
  NumberSet s = io::read_set_file(o.set_file);
  if (o.k < 1)
    throw PreconditionViolated("degree bound K must be at least 1");
  require_count_budget(cfg, s.size(), o.k);
  out << to_string(count_compressing_sequences(s, o.k, o.jobs)) << "\n";
  return Exit::ok;
}

inline int cmd_compress(const Options &o, std::ostream &out) {
  NumberSet s = io::read_set_file(o.set_file);
  detail::emit(out, io::format_record(compress(s)), o.output);
  return Exit::ok;
}

inline int cmd_decompress(const Options &o, std::ostream &out) {
  auto rec = io::parse_record(io::read_text_file(o.record_file));
  detail::emit(out, io::format_set(decompress(rec)), o.output);
  return Exit::ok;
}

inline int cmd_tables(const Options &o, const BudgetConfig &cfg, std::ostream &out, std::ostream &err) {
  const std::size_t n = o.n;
  if (n < 6)
    throw PreconditionViolated("tables need N >= 6");
  std::vector<std::size_t> ks;
  if (o.table_k) {
    if (*o.table_k < 1 || *o.table_k > n - 2)
      throw PreconditionViolated("K must lie in 1..N-2");
    ks.push_back(*o.table_k);
  } else {
    for (std::size_t k = n - 2; k >= 1; --k)
      ks.push_back(k);
  }
  if (!o.force)
    for (std::size_t k : ks)
      require_count_budget(cfg, n, k);
  NumberSet s = NumberSet::iota(n);
  out << "K,count\n";
  for (std::size_t k : ks) {
    if (k + 2 == n) {
      out << k << "," << to_string(factorial(n)) << "\n";
      err << "K=" << k << ": every ordering works, count is " << n << "!\n";
    } else {
      out << k << "," << to_string(count_compressing_sequences(s, k, o.jobs)) << "\n";
    }
    out.flush();
  }
  return Exit::ok;
}

inline int cmd_reduce(const Options &o, std::ostream &out) {
  NumberSet s = io::read_set_file(o.set_file);
  const std::size_t anchor = detail::check_anchor(s, o.anchor);
  if (o.k < 1 || o.k + 2 >= s.size())
    throw PreconditionViolated("reduce needs 1 <= K < N-2");
  auto chain = reduce(s, o.k, anchor);
  io::Json j;
  if (o.emit == "tour")
    j = io::tour_instance_to_json(s, o.k, chain);
  else if (o.emit == "matching")
    j = io::matching_instance_to_json(s, o.k, chain);
  else
    throw PreconditionViolated("--emit must be tour or matching");
  detail::emit(out, j.dump(2) + "\n", o.output);
  return Exit::ok;
}

inline int cmd_epsilon(const Options &o, const BudgetConfig &cfg, std::ostream &out) {
  NumberSet s = io::read_set_file(o.set_file);
  const Rational eps = parse_rational(o.eps);
  if (eps < 0)
    throw PreconditionViolated("epsilon must be non-negative");
  if (s.size() > cfg.max_n_tour)
    throw BudgetExceeded("tour search over N = " + std::to_string(s.size()) + " exceeds max_n_tour = " +
                         std::to_string(cfg.max_n_tour));
  Rational shift = 0;
  if (s[0] <= 0) {
    shift = 1 - s[0];
    s = affine_image(s, Rational(1), shift);
  }
  auto rep = epsilon_check(s, o.k, eps, cfg.max_n_tour);
  out << "degree: " << o.k << "\n";
  out << "epsilon: " << to_string(eps) << "\n";
  if (shift != 0)
    out << "translated by: " << to_string(shift) << "\n";
  if (!rep.anchors.empty())
    out << "scale: " << to_string(rep.anchors.front().bounds.scale) << "\n";
  for (const auto &r : rep.anchors) {
    const auto &b = r.bounds;
    out << "anchor " << to_string(s[r.anchor]) << ":\n";
    out << "  D: " << to_string(b.shift_d) << "\n";
    out << "  base: " << to_string(b.base) << "\n";
    out << "  alpha: " << to_string(b.alpha) << "\n";
    out << "  beta1_max: " << to_string(b.beta1_max) << "\n";
    out << "  beta2_max: " << to_string(b.beta2_max) << "\n";
    out << "  p1: " << to_string(b.p1) << "\n";
    out << "  p2: " << to_string(b.p2) << "\n";
    out << "  q1: " << to_string(b.q1) << "\n";
    out << "  q2: " << to_string(b.q2) << "\n";
    out << "  interval: [" << to_string(b.lo) << ", " << to_string(b.hi) << "]\n";
    out << "  paired interval: [" << to_string(b.paired_lo) << ", " << to_string(b.paired_hi) << "]"
        << (b.paired_interval_empty() ? " (empty)" : "") << "\n";
    out << "  search: " << to_string(r.verdict);
    if (r.permutation) {
      std::vector<Rational> cycle;
      for (Index c : *r.permutation)
        cycle.push_back(s[b.columns[c]] - shift);
      out << " (" << detail::join(cycle) << ")";
    }
    out << "\n";
  }
  const bool pass = rep.passes();
  out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? Exit::ok : Exit::negative;
}

inline int cmd_gadget_partition(const Options &o, const BudgetConfig &cfg, std::ostream &out) {
  NumberSet s = detail::parse_value_list(o.values);
  auto g = partition_to_signed_row(s.elements(), o.t);
  io::Json j = io::partition_gadget_to_json(g);
  int code = Exit::ok;
  if (o.verify) {
    if (s.size() > cfg.max_n_partition)
      throw BudgetExceeded("partition verification is limited to N <= " + std::to_string(cfg.max_n_partition));
    auto v = brute_force_gadget_check(g);
    j["verification"] = io::gadget_verdict_json(v);
    code = v.ok() ? Exit::ok : Exit::negative;
  }
  detail::emit(out, j.dump(2) + "\n", o.output);
  return code;
}

inline int cmd_gadget_knapsack(const Options &o, const BudgetConfig &cfg, std::ostream &out) {
  std::vector<BigInt> y;
  for (const auto &w : o.weights)
    y.push_back(parse_bigint(w));
  auto g = doubled_subset_sum_to_tour(y, parse_bigint(o.alpha));
  io::Json j = io::knapsack_gadget_to_json(g);
  int code = Exit::ok;
  if (o.verify) {
    if (g.size() > cfg.max_n_knapsack)
      throw BudgetExceeded("knapsack verification is limited to N <= " + std::to_string(cfg.max_n_knapsack));
    auto c = brute_force_gadget_check(g);
    io::Json v = io::gadget_verdict_json(c.verdict);
    v["arrangements"] = c.arrangements;
    v["no_adjacent_padding"] = c.beta_zero;
    v["no_adjacent_weights"] = c.no_adjacent_z;
    v["constructive_arrangement_ok"] = c.sandwich_ok;
    j["verification"] = std::move(v);
    code = c.verdict.ok() && c.sandwich_ok ? Exit::ok : Exit::negative;
  }
  detail::emit(out, j.dump(2) + "\n", o.output);
  return code;
}

inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact K-compressibility of finite rational sets"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "Budget config (JSON); defaults to $KCOMPRESS_CONFIG");

  auto *check = app.add_subcommand("check", "Decide whether a set is K-compressible");
  check->add_option("set", o.set_file, "Set file")->required();
  check->add_option("-k,--k", o.k, "Degree bound")->required();

  auto *count = app.add_subcommand("count", "Count compressing orderings");
  count->add_option("set", o.set_file, "Set file")->required();
  count->add_option("-k,--k", o.k, "Degree bound")->required();
  count->add_option("-j,--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto *comp = app.add_subcommand("compress", "Write the compressed record of a set");
  comp->add_option("set", o.set_file, "Set file")->required();
  comp->add_option("-o,--output", o.output, "Output file");

  auto *decomp = app.add_subcommand("decompress", "Expand a compressed record into a set file");
  decomp->add_option("record", o.record_file, "Record file")->required();
  decomp->add_option("-o,--output", o.output, "Output file");

  auto *tables = app.add_subcommand("tables", "Counts for {1..N} by degree bound");
  tables->add_option("-n,--n", o.n, "N")->required();
  tables->add_option("-k,--k", o.table_k, "Single degree bound");
  tables->add_option("-j,--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  tables->add_flag("--force", o.force, "Ignore the size guard");

  auto *red = app.add_subcommand("reduce", "Emit the tour or matching instance for one anchor");
  red->add_option("set", o.set_file, "Set file")->required();
  red->add_option("-k,--k", o.k, "Degree bound")->required();
  red->add_option("-a,--anchor", o.anchor, "Anchor position in ascending order, 1-based")->required();
  red->add_option("--emit", o.emit, "tour or matching")->check(CLI::IsMember({"tour", "matching"}));
  red->add_option("-o,--output", o.output, "Output file");

  auto *eps = app.add_subcommand("epsilon", "Necessary condition for epsilon-closeness to a K-compressible set");
  eps->add_option("set", o.set_file, "Set file")->required();
  eps->add_option("-k,--k", o.k, "Degree bound")->required();
  eps->add_option("-e,--eps", o.eps, "Relative perturbation bound")->required();

  auto *gadget = app.add_subcommand("gadget", "Hardness gadget instances");
  gadget->require_subcommand(1);
  auto *part = gadget->add_subcommand("partition", "Cardinality partition to a signed row");
  part->add_option("values", o.values, "Set elements")->required();
  part->add_option("-t,--t", o.t, "Subset size")->required();
  part->add_flag("--verify", o.verify, "Exhaustive check");
  part->add_option("-o,--output", o.output, "Output file");
  auto *knap = gadget->add_subcommand("knapsack", "Doubled subset sum to an adjacency-product tour");
  knap->add_option("-y,--y", o.weights, "Weights y_i > 1")->required();
  knap->add_option("--alpha", o.alpha, "Target")->required();
  knap->add_flag("--verify", o.verify, "Exhaustive check");
  knap->add_option("-o,--output", o.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return Exit::bad_input;
  }

  try {
    BudgetConfig cfg = load_budget_config(o.config.empty() ? std::nullopt : std::optional<std::string>(o.config));
    if (check->parsed())
      return cmd_check(o, out);
    if (count->parsed())
      return cmd_count(o, cfg, out);
    if (comp->parsed())
      return cmd_compress(o, out);
    if (decomp->parsed())
      return cmd_decompress(o, out);
    if (tables->parsed())
      return cmd_tables(o, cfg, out, err);
    if (red->parsed())
      return cmd_reduce(o, out);
    if (eps->parsed())
      return cmd_epsilon(o, cfg, out);
    if (part->parsed())
      return cmd_gadget_partition(o, cfg, out);
    if (knap->parsed())
      return cmd_gadget_knapsack(o, cfg, out);
  } catch (const BudgetExceeded &e) {
    err << "refused: " << e.what() << "\n";
    return Exit::budget;
  } catch (const OrbitCollision &e) {
    err << "error: " << e.what() << "\n";
    return Exit::collision;
  } catch (const OrderingViolated &e) {
    err << "epsilon: " << e.what() << "\n";
    return Exit::epsilon_refused;
  } catch (const EpsilonTooLarge &e) {
    err << "epsilon: " << e.what() << "\n";
    return Exit::epsilon_refused;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return Exit::bad_input;
  }
  return Exit::bad_input;
}

} // namespace kcompress::cli
