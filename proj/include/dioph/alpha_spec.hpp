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

#ifndef DIOPH_ALPHA_SPEC_HPP
#define DIOPH_ALPHA_SPEC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dioph/continued_fraction.hpp"
#include "dioph/error.hpp"
#include "dioph/gpoly.hpp"
#include "dioph/numeric.hpp"
#include "dioph/real_source.hpp"
#include "dioph/schedule.hpp"

namespace dioph {

/// Grammar of the text formats, as printed by `--help formats`.
inline constexpr const char* kFormatHelp = R"(alpha specs
  surd:(p,q,d,r)            (p + q sqrt(d)) / r, d > 0 not a square, q, r != 0
  sqrt:d                    sqrt(d)
  phi                       golden ratio (1 + sqrt 5)/2
  e                         Euler's number
  pi | pi*s | pi*s/t        rational multiple of pi
  rat:p/q | p/q | 0.25      rational number
  cf:[a0; a1, a2, ...]      finite continued fraction (a trailing 1 is folded)
  cf-rule:periodic(a0,b1,..|c1,..)
                            a0, preperiod b, then period c forever
  cf-rule:affine(es,eo,os,oo)
                            a_{2i} = es*i + eo, a_{2i+1} = os*i + oo
  cf-rule:e                 [2; 1, 2, 1, 1, 4, 1, 1, 6, ...]
  decseq:[d1,d2,...]        sum of 10^-d_i, finite
  decseq-rule:doubling-after(d1,..,dk)
                            listed exponents, then d_{i+1} = 2 d_i
  decseq-rule:doubling(d1)  d_{i+1} = 2 d_i from d1
  decseq-rule:factorial     d_i = i!

g expressions
  poly:[c0,c1,...]          g(y) = sum c_j y^j, rational c_j, g(1) = 1, |g| <= 1 on [-1, 1]

f expressions
  pow:beta                  n^-beta, beta > 0
  loginv                    1 / ln n
  expinv:lambda             e^-(lambda n), lambda > 0

rationals
  p/q, integers, decimals and exponents (0.5, 1e-6) are all read exactly
)";

namespace detail {

inline bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

/// Contents between a leading `open` and trailing `close`.
inline std::string_view enclosed(std::string_view s, char open, char close, std::string_view what) {
  s = detail::trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    fail(ErrorCode::ParseError, std::string("expected ") + open + "..." + close + " in " + std::string(what));
  }
  return s.substr(1, s.size() - 2);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (detail::trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(detail::trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline std::vector<Integer> integer_list(std::string_view s) {
  std::vector<Integer> out;
  for (auto part : split(s, ',')) out.push_back(parse_integer(part));
  return out;
}

inline std::vector<std::uint64_t> exponent_list(std::string_view s) {
  std::vector<std::uint64_t> out;
  for (const auto& v : integer_list(s)) {
    if (v < 1 || !v.fits_ulong_p()) fail(ErrorCode::ParseError, "decimal exponents must be positive 64-bit integers");
    out.push_back(v.get_ui());
  }
  return out;
}

inline std::int64_t small_int(const Integer& v) {
  if (!v.fits_slong_p()) fail(ErrorCode::ParseError, "rule parameter out of range");
  return v.get_si();
}

inline QuotientRule parse_rule(std::string_view body) {
  if (body == "e") return EulerRule{};
  if (starts_with(body, "periodic")) {
    const auto inner = enclosed(body.substr(8), '(', ')', body);
    const auto bar = inner.find('|');
    if (bar == std::string_view::npos) fail(ErrorCode::ParseError, "periodic rule needs '|' before the period");
    const auto head = integer_list(inner.substr(0, bar));
    if (head.empty()) fail(ErrorCode::ParseError, "periodic rule needs a0");
    PeriodicRule r;
    r.a0 = head[0];
    r.preperiod.assign(head.begin() + 1, head.end());
    r.period = integer_list(inner.substr(bar + 1));
    return r;
  }
  if (starts_with(body, "affine")) {
    const auto v = integer_list(enclosed(body.substr(6), '(', ')', body));
    if (v.size() != 4) fail(ErrorCode::ParseError, "affine rule takes four parameters");
    return AffineRule{small_int(v[0]), small_int(v[1]), small_int(v[2]), small_int(v[3])};
  }
  fail(ErrorCode::ParseError, "unknown continued-fraction rule '" + std::string(body) + "'");
}

}  // namespace detail

inline RealSource parse_alpha(std::string_view text) {
  using detail::starts_with;
  const std::string_view s = detail::trim(text);
  try {
    if (s == "phi") return RealSource::golden_ratio();
    if (s == "e") return RealSource::euler();
    if (s == "pi") return RealSource::pi_multiple(1);
    if (starts_with(s, "pi*")) return RealSource::pi_multiple(parse_rational(s.substr(3)));
    if (starts_with(s, "sqrt:")) return RealSource::sqrt_of(parse_integer(s.substr(5)));
    if (starts_with(s, "surd:")) {
      const auto v = detail::integer_list(detail::enclosed(s.substr(5), '(', ')', s));
      if (v.size() != 4) fail(ErrorCode::ParseError, "surd takes (p,q,d,r)");
      return RealSource::surd(v[0], v[1], v[2], v[3]);
    }
    if (starts_with(s, "rat:")) return RealSource::rational(parse_rational(s.substr(4)));
    if (starts_with(s, "cf:")) {
      std::string inner(detail::enclosed(s.substr(3), '[', ']', s));
      for (char& c : inner) {
        if (c == ';') c = ',';
      }
      return RealSource::continued_fraction(ContinuedFraction::exact_normalized(detail::integer_list(inner)));
    }
    if (starts_with(s, "cf-rule:")) {
      return RealSource::continued_fraction(ContinuedFraction::from_rule(detail::parse_rule(detail::trim(s.substr(8)))));
    }
    if (starts_with(s, "decseq:")) {
      DecimalSeries d{detail::exponent_list(detail::enclosed(s.substr(7), '[', ']', s)), DecimalTail::None};
      return RealSource::decimal_series(std::move(d));
    }
    if (starts_with(s, "decseq-rule:")) {
      const std::string_view body = detail::trim(s.substr(12));
      if (body == "factorial") return RealSource::decimal_series({{}, DecimalTail::Factorial});
      std::string_view args;
      if (starts_with(body, "doubling-after")) {
        args = detail::enclosed(body.substr(14), '(', ')', s);
      } else if (starts_with(body, "doubling")) {
        args = detail::enclosed(body.substr(8), '(', ')', s);
        if (detail::split(args, ',').size() != 1) fail(ErrorCode::ParseError, "doubling takes one exponent");
      } else {
        fail(ErrorCode::ParseError, "unknown decimal rule '" + std::string(body) + "'");
      }
      return RealSource::decimal_series({detail::exponent_list(args), DecimalTail::Doubling});
    }
    return RealSource::rational(parse_rational(s));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(ErrorCode::ParseError, "bad alpha spec '" + std::string(s) + "': " + e.what());
  }
}

inline GPoly parse_gpoly(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (detail::starts_with(s, "poly:")) s = s.substr(5);
  std::vector<Rational> c;
  for (auto part : detail::split(detail::enclosed(s, '[', ']', text), ',')) c.push_back(parse_rational(part));
  return GPoly::make(std::move(c));
}

inline FSpec parse_fspec(std::string_view text) {
  const std::string_view s = detail::trim(text);
  try {
    if (s == "loginv") return FSpec::log_inverse();
    if (detail::starts_with(s, "pow:")) return FSpec::power(parse_rational(s.substr(4)));
    if (detail::starts_with(s, "expinv:")) return FSpec::exp_inverse(parse_rational(s.substr(7)));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(ErrorCode::ParseError, "bad f spec '" + std::string(s) + "': " + e.what());
  }
  fail(ErrorCode::ParseError, "unknown f spec '" + std::string(s) + "'");
}

}  // namespace dioph

#endif  // DIOPH_ALPHA_SPEC_HPP
