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

// Text and JSON formats. Every number is written as an exact decimal
// integer or "p/q" string.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kcompress/compressibility.hpp"
#include "kcompress/errors.hpp"
#include "kcompress/gadgets.hpp"
#include "kcompress/number_set.hpp"
#include "kcompress/rational.hpp"
#include "kcompress/reduction.hpp"

namespace kcompress::io {

using Json = nlohmann::ordered_json;

inline constexpr int format_version = 1;
inline constexpr const char *record_format = "kcompress-record";
inline constexpr const char *instance_format = "kcompress-instance";

// ---------------------------------------------------------------------------
// Set files: one literal per line, '#' starts a comment.

inline NumberSet parse_set_text(std::string_view text) {
  std::vector<Rational> values;
  std::map<Rational, std::size_t> first_line;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
      line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.remove_suffix(1);
    if (line.empty())
      continue;
    Rational v;
    try {
      v = parse_rational(line);
    } catch (const ParseError &e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    auto [it, inserted] = first_line.emplace(v, line_no);
    if (!inserted)
      throw ParseError("line " + std::to_string(line_no) + ": " + to_string(v) + " duplicates line " +
                       std::to_string(it->second));
    values.push_back(std::move(v));
  }
  if (values.size() < 2)
    throw ParseError("a set file needs at least two elements");
  return NumberSet(std::move(values));
}

inline std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline NumberSet read_set_file(const std::string &path) { return parse_set_text(read_text_file(path)); }

/// Ascending, one element per line.
inline std::string format_set(const NumberSet &s) {
  std::string out;
  for (const auto &v : s) {
    out += to_string(v);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compressed records. Coefficients are listed by ascending power.

inline Json record_to_json(const CompressedSet &c) {
  Json j;
  j["format"] = record_format;
  j["version"] = format_version;
  j["degree"] = c.degree_bound;
  Json coeffs = Json::array();
  for (const auto &a : c.coefficients.coefficients())
    coeffs.push_back(to_string(a));
  j["coefficients"] = std::move(coeffs);
  j["start"] = to_string(c.start);
  j["length"] = c.length;
  return j;
}

namespace detail {

inline const Json &field(const Json &j, const char *name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

inline std::size_t size_field(const Json &j, const char *name) {
  const Json &v = field(j, name);
  if (!v.is_number_unsigned())
    throw ParseError(std::string("field \"") + name + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

inline Rational rational_field(const Json &v, const char *name) {
  if (!v.is_string())
    throw ParseError(std::string("field \"") + name + "\" must hold rational strings");
  return parse_rational(v.get<std::string>());
}

inline BigInt bigint_value(const Json &v, const char *name) {
  if (!v.is_string())
    throw ParseError(std::string("field \"") + name + "\" must hold integer strings");
  return parse_bigint(v.get<std::string>());
}

inline std::vector<BigInt> bigint_array(const Json &j, const char *name) {
  const Json &v = field(j, name);
  if (!v.is_array())
    throw ParseError(std::string("field \"") + name + "\" must be an array");
  std::vector<BigInt> out;
  for (const auto &e : v)
    out.push_back(bigint_value(e, name));
  return out;
}

inline void check_header(const Json &j, const char *format) {
  const Json &f = field(j, "format");
  if (!f.is_string() || f.get<std::string>() != format)
    throw ParseError(std::string("expected format \"") + format + "\"");
  const Json &v = field(j, "version");
  if (!v.is_number_integer() || v.get<int>() != format_version)
    throw ParseError("unsupported format version");
}

template <class T>
Json string_array(const std::vector<T> &v) {
  Json a = Json::array();
  for (const auto &e : v)
    a.push_back(to_string(e));
  return a;
}

inline Json string_matrix(const IntegerMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace detail

inline CompressedSet record_from_json(const Json &j) {
  detail::check_header(j, record_format);
  CompressedSet c;
  c.degree_bound = detail::size_field(j, "degree");
  const Json &coeffs = detail::field(j, "coefficients");
  if (!coeffs.is_array() || coeffs.empty())
    throw ParseError("\"coefficients\" must be a non-empty array");
  std::vector<Rational> a;
  for (const auto &e : coeffs)
    a.push_back(detail::rational_field(e, "coefficients"));
  if (a.size() > c.degree_bound + 1)
    throw ParseError("more coefficients than the degree allows");
  c.coefficients = Polynomial(std::move(a));
  c.start = detail::rational_field(detail::field(j, "start"), "start");
  c.length = detail::size_field(j, "length");
  if (c.degree_bound < 1)
    throw ParseError("degree must be at least 1");
  if (c.length < 2)
    throw ParseError("length must be at least 2");
  return c;
}

inline std::string format_record(const CompressedSet &c) { return record_to_json(c).dump(2) + "\n"; }

inline CompressedSet parse_record(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
  return record_from_json(j);
}

// ---------------------------------------------------------------------------
// Reduction and gadget instances.

inline Json header(const char *kind) {
  Json j;
  j["format"] = instance_format;
  j["version"] = format_version;
  j["kind"] = kind;
  return j;
}

inline Json element_columns(const NumberSet &s, const std::vector<Index> &columns) {
  Json a = Json::array();
  for (Index c : columns)
    a.push_back(to_string(s[c]));
  return a;
}

inline Json tour_instance_to_json(const NumberSet &s, std::size_t k, const ReductionChain &chain) {
  const TourInstance &t = chain.tour;
  Json j = header("tour");
  j["degree"] = k;
  j["anchor"] = to_string(s[chain.constraints.anchor]);
  j["columns"] = element_columns(s, chain.constraints.columns);
  j["n"] = t.size();
  j["m_criteria"] = t.b.rows();
  j["closing"] = to_string(Closing::Open);
  j["base"] = to_string(t.base);
  j["c_max"] = to_string(t.c_max);
  j["alpha"] = to_string(t.alpha);
  j["h"] = detail::string_array(t.h);
  j["y"] = detail::string_array(t.y);
  j["b"] = detail::string_matrix(t.b);
  j["alpha_rows"] = detail::string_array(t.alpha_rows);
  return j;
}

/// Reads back the searchable part of a tour instance.
inline TourInstance tour_instance_from_json(const Json &j) {
  detail::check_header(j, instance_format);
  if (detail::field(j, "kind") != "tour")
    throw ParseError("expected a tour instance");
  TourInstance t;
  t.h = detail::bigint_array(j, "h");
  t.y = detail::bigint_array(j, "y");
  t.alpha = detail::bigint_value(detail::field(j, "alpha"), "alpha");
  t.base = detail::bigint_value(detail::field(j, "base"), "base");
  t.c_max = detail::bigint_value(detail::field(j, "c_max"), "c_max");
  t.alpha_rows = detail::bigint_array(j, "alpha_rows");
  const Json &b = detail::field(j, "b");
  const std::size_t n = detail::size_field(j, "n");
  const std::size_t m = detail::size_field(j, "m_criteria");
  if (t.h.size() != n || t.y.size() != n || !b.is_array() || b.size() != m || t.alpha_rows.size() != m)
    throw ParseError("instance dimensions disagree");
  t.b = IntegerMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!b[i].is_array() || b[i].size() != n)
      throw ParseError("instance dimensions disagree");
    for (std::size_t u = 0; u < n; ++u)
      t.b(i, u) = detail::bigint_value(b[i][u], "b");
  }
  return t;
}

inline Json matching_instance_to_json(const NumberSet &s, std::size_t k, const ReductionChain &chain) {
  const MatchingInstance mi = to_matching_instance(chain.shifted);
  Json j = header("matching");
  j["degree"] = k;
  j["anchor"] = to_string(s[chain.constraints.anchor]);
  j["columns"] = element_columns(s, chain.constraints.columns);
  j["n"] = mi.combined.size();
  j["m_criteria"] = mi.combined.b.rows();
  j["alpha"] = to_string(mi.combined.alpha);
  j["h"] = detail::string_array(mi.combined.h);
  j["y"] = detail::string_array(mi.combined.y);
  j["weights"] = detail::string_matrix(mi.weights);
  return j;
}

inline Json gadget_verdict_json(const GadgetVerdict &v) {
  Json j;
  j["source_solvable"] = v.source_solvable;
  j["target_solvable"] = v.target_solvable;
  j["forward_ok"] = v.forward_ok;
  j["backward_ok"] = v.backward_ok;
  return j;
}

inline Json partition_gadget_to_json(const SignedRowInstance &g) {
  Json j = header("gadget-partition");
  j["t"] = g.t;
  j["x"] = detail::string_array(g.x);
  j["row"] = g.row;
  return j;
}

inline Json knapsack_gadget_to_json(const DoubledSubsetSumGadget &g) {
  Json j = header("gadget-knapsack");
  j["y"] = detail::string_array(g.y);
  j["alpha"] = to_string(g.alpha);
  j["p"] = g.p;
  j["z"] = detail::string_array(g.z);
  j["values"] = detail::string_array(g.padded);
  j["target"] = to_string(g.target);
  return j;
}

} // namespace kcompress::io
