// Copyright 2026 The dioph Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIOPH_NUMERIC_HPP
#define DIOPH_NUMERIC_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "dioph/error.hpp"

namespace dioph {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer pow10(unsigned long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

inline Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline Integer isqrt(const Integer& n) {
  require(n >= 0, "isqrt of a negative integer");
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

inline bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Number of bits in |n|; zero for n = 0.
inline std::uint32_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  return static_cast<std::uint32_t>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

inline Integer floor_of(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

inline Integer ceil_of(const Rational& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

/// Nearest integer, halves rounded up.
inline Integer nearest_of(const Rational& x) {
  return floor_of(x + Rational(1, 2));
}

inline Rational frac_of(const Rational& x) { return x - Rational(floor_of(x)); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, "zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

/// Exact sign of u + v*sqrt(d) for a non-square d > 0.
inline int surd_sign(const Integer& u, const Integer& v, const Integer& d) {
  const int su = sgn(u);
  const int sv = sgn(v);
  if (su >= 0 && sv >= 0) return (su > 0 || sv > 0) ? 1 : 0;
  if (su <= 0 && sv <= 0) return -1;
  const Integer uu = u * u;
  const Integer vv = v * v * d;
  return uu > vv ? su : sv;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

inline Integer parse_integer(std::string_view text) {
  std::string_view s = detail::trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!detail::all_digits(s)) fail(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  Integer out(std::string(s), 10);
  return negative ? Integer(-out) : out;
}

/// Parses "p/q", "-12", "0.125", "1e-6" or "2.5E3" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(s.substr(0, slash));
    const Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
  }
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const Integer ex = parse_integer(s.substr(e + 1));
    if (!ex.fits_slong_p() || abs(ex) > 100000) fail(ErrorCode::ParseError, "exponent out of range");
    exponent = ex.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view fraction = s.substr(dot + 1);
    if ((!whole.empty() && !detail::all_digits(whole)) || (!fraction.empty() && !detail::all_digits(fraction)) ||
        (whole.empty() && fraction.empty())) {
      fail(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(fraction);
    exponent -= static_cast<long>(fraction.size());
  } else {
    if (!detail::all_digits(s)) fail(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
    digits = std::string(s);
  }
  Rational out{Integer(digits, 10)};
  if (exponent > 0) out *= Rational(pow10(static_cast<unsigned long>(exponent)));
  if (exponent < 0) out /= Rational(pow10(static_cast<unsigned long>(-exponent)));
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace dioph

#endif  // DIOPH_NUMERIC_HPP
