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

#include <cctype>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "kcompress/errors.hpp"

namespace kcompress {

using BigInt = mpz_class;

/// Exact rational scalar. GMP keeps every value canonical: gcd(|num|, den) = 1
/// and den > 0, so structural equality is numeric equality.
using Rational = mpq_class;

inline Rational make_rational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw PreconditionViolated("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

inline BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

} // namespace detail

/// Parses "p/q", an integer, or a decimal literal such as "0.15" or "-1.5e-3".
/// Decimals are read exactly ("0.15" is 3/20), never through a float.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ParseError("not a rational literal: '" + std::string(text) + "'"); };

  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty())
    throw fail();

  bool negative = false;
  std::string_view body = text;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw fail();
    BigInt d(std::string(den), 10);
    if (d == 0)
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = make_rational(BigInt(std::string(num), 10), d);
  } else {
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!detail::all_digits(exp_text) || exp_text.size() > 6)
        throw fail();
      exponent = std::stol(std::string(exp_text));
      if (exp_negative)
        exponent = -exponent;
      body = body.substr(0, e);
    }
    std::string_view int_part = body;
    std::string_view frac_part;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
      int_part = body.substr(0, dot);
      frac_part = body.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
      throw fail();
    if ((!int_part.empty() && !detail::all_digits(int_part)) ||
        (!frac_part.empty() && !detail::all_digits(frac_part)))
      throw fail();
    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt num(digits, 10);
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0)
      value = Rational(num * detail::pow10(static_cast<unsigned long>(exponent)));
    else
      value = make_rational(num, detail::pow10(static_cast<unsigned long>(-exponent)));
  }
  return negative ? Rational(-value) : value;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational &r) { return r.get_str(10); }

inline std::string to_string(const BigInt &z) { return z.get_str(10); }

inline BigInt parse_bigint(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  if (!detail::all_digits(body))
    throw ParseError("not an integer literal: '" + std::string(text) + "'");
  return BigInt(std::string(text.front() == '+' ? text.substr(1) : text), 10);
}

inline Rational abs(const Rational &r) { return r < 0 ? Rational(-r) : r; }

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt lcm(const BigInt &a, const BigInt &b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Smallest integer >= r.
inline BigInt ceil(const Rational &r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

struct RationalHash {
  std::size_t operator()(const Rational &r) const noexcept {
    auto limb = [](mpz_srcptr z) -> std::size_t {
      return z->_mp_size == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z, 0)) ^
                                        static_cast<std::size_t>(z->_mp_size);
    };
    std::size_t h = limb(r.get_num_mpz_t());
    return h ^ (limb(r.get_den_mpz_t()) * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

} // namespace kcompress
