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

#ifndef DIOPH_REAL_SOURCE_HPP
#define DIOPH_REAL_SOURCE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dioph/ball.hpp"
#include "dioph/continued_fraction.hpp"
#include "dioph/error.hpp"
#include "dioph/numeric.hpp"

namespace dioph {

struct RationalValue {
  Rational value;
};

/// (p + q sqrt(d)) / r with d > 0 non-square, q != 0, r != 0.
struct QuadraticSurd {
  Integer p;
  Integer q;
  Integer d;
  Integer r;
};

struct CFDefined {
  ContinuedFraction cf;
};

enum class DecimalTail {
  None,       ///< finite: the listed exponents are all there is
  Doubling,   ///< after the listed exponents, d_{i+1} = 2 d_i forever
  Factorial,  ///< d_i = i! (no listed exponents)
};

/// sum_i 10^{-d_i} over a strictly increasing exponent sequence.
struct DecimalSeries {
  std::vector<std::uint64_t> exponents;
  DecimalTail tail = DecimalTail::None;

  bool is_finite() const noexcept { return tail == DecimalTail::None; }

  /// d_i for 0-based i; nullopt past a finite end or beyond 64-bit range.
  std::optional<std::uint64_t> exponent(std::size_t i) const {
    if (tail == DecimalTail::Factorial) {
      std::uint64_t f = 1;
      for (std::uint64_t k = 2; k <= i + 1; ++k) {
        if (f > std::numeric_limits<std::uint64_t>::max() / k) return std::nullopt;
        f *= k;
      }
      return f;
    }
    if (i < exponents.size()) return exponents[i];
    if (tail == DecimalTail::None || exponents.empty()) return std::nullopt;
    std::uint64_t d = exponents.back();
    for (std::size_t k = exponents.size(); k <= i; ++k) {
      if (d > std::numeric_limits<std::uint64_t>::max() / 2) return std::nullopt;
      d *= 2;
    }
    return d;
  }
};

struct PiMultiple {
  Rational s;
};

enum class NamedConstant { E };

/// A real number that can be enclosed to any requested accuracy.
class RealSource {
 public:
  using Variant = std::variant<RationalValue, QuadraticSurd, CFDefined, DecimalSeries, PiMultiple, NamedConstant>;

  static RealSource rational(Rational q) {
    q.canonicalize();
    return RealSource(RationalValue{std::move(q)});
  }
  static RealSource surd(Integer p, Integer q, Integer d, Integer r) {
    require(d > 0 && !is_perfect_square(d), "surd radicand must be a positive non-square");
    require(q != 0, "surd coefficient of sqrt(d) must be non-zero");
    require(r != 0, "surd denominator must be non-zero");
    return RealSource(QuadraticSurd{std::move(p), std::move(q), std::move(d), std::move(r)});
  }
  static RealSource sqrt_of(const Integer& d) { return surd(0, 1, d, 1); }
  static RealSource golden_ratio() { return surd(1, 1, 5, 2); }
  static RealSource continued_fraction(ContinuedFraction cf) {
    require(cf.kind() != ContinuedFraction::Kind::Prefix, "a prefix does not define a real number");
    return RealSource(CFDefined{std::move(cf)});
  }
  static RealSource decimal_series(DecimalSeries series) {
    if (series.tail != DecimalTail::Factorial) {
      require(!series.exponents.empty(), "decimal series needs at least one exponent");
      require(series.exponents.front() >= 1, "decimal exponents must be positive");
      for (std::size_t i = 1; i < series.exponents.size(); ++i) {
        require(series.exponents[i - 1] < series.exponents[i], "decimal exponents must be strictly increasing");
      }
    }
    return RealSource(std::move(series));
  }
  static RealSource pi_multiple(Rational s) {
    s.canonicalize();
    return RealSource(PiMultiple{std::move(s)});
  }
  static RealSource euler() { return RealSource(NamedConstant::E); }

  const Variant& variant() const noexcept { return value_; }

  template <typename T>
  const T* as() const noexcept {
    return std::get_if<T>(&value_);
  }

  /// The exact value when it is rational (rationals, finite CFs, finite decimals, 0*pi).
  std::optional<Rational> exact_rational() const {
    if (const auto* r = as<RationalValue>()) return r->value;
    if (const auto* c = as<CFDefined>(); c && c->cf.is_finite()) return evaluate(c->cf);
    if (const auto* d = as<DecimalSeries>(); d && d->is_finite()) {
      Rational sum = 0;
      for (auto e : d->exponents) sum += Rational(Integer(1), pow10(e));
      return sum;
    }
    if (const auto* m = as<PiMultiple>(); m && m->s == 0) return Rational(0);
    return std::nullopt;
  }

  bool is_rational() const { return exact_rational().has_value(); }

  std::string describe() const;

 private:
  explicit RealSource(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

// ---------------------------------------------------------------------------
// Exact expansion of quadratic surds.

/// Periodic expansion of (p + q sqrt(d))/r by the integer recurrence on
/// complete quotients (P + sqrt(D))/Q, stopping at the first repeated state.
inline PeriodicRule surd_expansion(const QuadraticSurd& s) {
  Integer p = s.p;
  Integer q = s.q;
  Integer r = s.r;
  if (q < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  Integer big_d = q * q * s.d;
  Integer big_p = p;
  Integer big_q = r;
  if (((big_d - big_p * big_p) % big_q) != 0) {
    const Integer ar = abs(r);
    big_p *= ar;
    big_d *= r * r;
    big_q *= ar;
  }
  const Integer root = isqrt(big_d);
  std::vector<Integer> terms;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  while (true) {
    auto key = std::make_pair(big_p, big_q);
    if (auto it = seen.find(key); it != seen.end()) {
      const std::size_t start = it->second;
      PeriodicRule rule;
      rule.a0 = terms[0];
      rule.preperiod.assign(terms.begin() + 1, terms.begin() + static_cast<std::ptrdiff_t>(start));
      rule.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.end());
      return rule;
    }
    if (!terms.empty()) seen.emplace(std::move(key), terms.size());
    // floor((P + sqrt D)/Q) using floor(sqrt D) since sqrt D is irrational.
    // For Q < 0 the quotient is decreasing in sqrt D, so use floor(sqrt D) + 1.
    Integer a;
    const Integer num = big_q > 0 ? Integer(big_p + root) : Integer(big_p + root + 1);
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), big_q.get_mpz_t());
    terms.push_back(a);
    big_p = a * big_q - big_p;
    big_q = (big_d - big_p * big_p) / big_q;
  }
}

/// An exact description of the expansion when one is known: rule CFs,
/// periodic surds, e, and rationals. Nullopt otherwise.
inline std::optional<ContinuedFraction> known_expansion(const RealSource& x) {
  if (const auto* c = x.as<CFDefined>()) return c->cf;
  if (const auto* s = x.as<QuadraticSurd>()) return ContinuedFraction::from_rule(surd_expansion(*s));
  if (x.as<NamedConstant>() != nullptr) return ContinuedFraction::from_rule(EulerRule{});
  if (auto q = x.exact_rational()) return expand_rational(*q);
  return std::nullopt;
}

inline std::string RealSource::describe() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<V, RationalValue>) {
          os << "rat:" << to_string(v.value);
        } else if constexpr (std::is_same_v<V, QuadraticSurd>) {
          os << "surd:(" << v.p.get_str() << "," << v.q.get_str() << "," << v.d.get_str() << "," << v.r.get_str()
             << ")";
        } else if constexpr (std::is_same_v<V, CFDefined>) {
          if (const auto* rule = v.cf.rule()) {
            os << "cf-rule:" << rule_name(*rule);
          } else {
            os << "cf:" << v.cf.to_string();
          }
        } else if constexpr (std::is_same_v<V, DecimalSeries>) {
          if (v.tail == DecimalTail::Factorial) {
            os << "decseq-rule:factorial";
          } else {
            os << (v.tail == DecimalTail::Doubling ? "decseq-rule:doubling-after(" : "decseq:[");
            for (std::size_t i = 0; i < v.exponents.size(); ++i) os << (i ? "," : "") << v.exponents[i];
            os << (v.tail == DecimalTail::Doubling ? ")" : "]");
          }
        } else if constexpr (std::is_same_v<V, PiMultiple>) {
          os << "pi*" << v.s.get_num().get_str() << "/" << v.s.get_den().get_str();
        } else {
          os << "e";
        }
        return os.str();
      },
      value_);
}

// ---------------------------------------------------------------------------
// Certified enclosures.

namespace detail {

inline Ball surd_ball(const QuadraticSurd& s, Bits w) {
  const Ball root = sqrt(Ball::from_integer(s.d, w));
  return (root * s.q + s.p) / Rational(s.r);
}

/// Encloses an infinite CF between two consecutive convergents.
inline Ball cf_rule_ball(const ContinuedFraction& cf, Bits bits) {
  Integer p_prev = 1;
  Integer q_prev = 0;
  Integer p = cf.quotient(0);
  Integer q = 1;
  for (std::size_t n = 1;; ++n) {
    const Integer a = cf.quotient(n);
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    // |x - p/q| < 1/(q q_next); stop once that is below 2^-(bits+1).
    if (bit_length(q * q_next) > bits + 2) {
      const Rational lo = make_rational(p, q);
      const Rational hi = make_rational(p_next, q_next);
      return Ball::from_rational_endpoints(std::min(lo, hi), std::max(lo, hi), bits + 8);
    }
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
}

/// sum_{i : d_i <= digits} 10^{-d_i} as an exact rational, and the index of
/// the first term left out (if any).
struct DecimalPrefix {
  Rational value;
  std::optional<std::uint64_t> next_exponent;
  bool has_more = false;
};

inline DecimalPrefix decimal_prefix(const DecimalSeries& s, std::uint64_t digits) {
  DecimalPrefix out;
  out.value = 0;
  for (std::size_t i = 0;; ++i) {
    const auto d = s.exponent(i);
    if (!d) {
      // Either the series ended, or the exponent no longer fits in 64 bits.
      out.has_more = !s.is_finite() && (s.tail == DecimalTail::Factorial || i >= s.exponents.size());
      return out;
    }
    if (*d > digits) {
      out.has_more = true;
      out.next_exponent = *d;
      return out;
    }
    out.value += Rational(Integer(1), pow10(*d));
  }
}

/// Tail sum_{j >= next} 10^{-d_j} lies in [10^{-next}, 2*10^{-next}]; when the
/// next exponent is unknown or huge, fall back to [0, 2*10^{-(digits+1)}].
inline std::pair<Rational, Rational> decimal_tail_bounds(const DecimalPrefix& prefix, std::uint64_t digits,
                                                         const Integer& scale) {
  if (!prefix.has_more) return {Rational(0), Rational(0)};
  if (prefix.next_exponent && *prefix.next_exponent <= 4 * digits + 64) {
    const Rational unit(scale, pow10(*prefix.next_exponent));
    return {unit, 2 * unit};
  }
  return {Rational(0), Rational(2 * scale, pow10(digits + 1))};
}

inline std::uint64_t digits_for_bits(Bits bits) { return static_cast<std::uint64_t>(std::ceil(bits * 0.30103)) + 2; }

}  // namespace detail

/// Ball containing x with rad <= 2^-bits.
inline Ball approximate(const RealSource& x, Bits bits, const PrecisionPolicy& policy = {}) {
  require(bits >= 2, "approximate needs at least 2 bits");
  if (bits > policy.cap_bits) fail(ErrorCode::PrecisionExhausted, "requested accuracy exceeds the precision cap");
  if (auto q = x.exact_rational()) return Ball::from_rational(*q, bits + 8);

  if (const auto* s = x.as<QuadraticSurd>()) {
    Bits w = bits + 16 + bit_length(s->p) + bit_length(s->q) + bit_length(s->d);
    for (;; w *= 2) {
      Ball b = detail::surd_ball(*s, w);
      if (b.radius_within(-static_cast<long>(bits))) return b;
      if (w > policy.cap_bits) break;
    }
  } else if (const auto* c = x.as<CFDefined>()) {
    return detail::cf_rule_ball(c->cf, bits);
  } else if (const auto* d = x.as<DecimalSeries>()) {
    const std::uint64_t digits = detail::digits_for_bits(bits);
    const auto prefix = detail::decimal_prefix(*d, digits);
    const auto [tlo, thi] = detail::decimal_tail_bounds(prefix, digits, 1);
    return Ball::from_rational_endpoints(prefix.value + tlo, prefix.value + thi, bits + 8);
  } else if (const auto* m = x.as<PiMultiple>()) {
    for (Bits w = bits + 16 + bit_length(m->s.get_num()); ; w *= 2) {
      Ball b = Ball::pi(w) * m->s;
      if (b.radius_within(-static_cast<long>(bits))) return b;
      if (w > policy.cap_bits) break;
    }
  } else if (x.as<NamedConstant>() != nullptr) {
    for (Bits w = bits + 16;; w *= 2) {
      Ball b = Ball::euler(w);
      if (b.radius_within(-static_cast<long>(bits))) return b;
      if (w > policy.cap_bits) break;
    }
  }
  fail(ErrorCode::PrecisionExhausted, "could not enclose " + x.describe() + " to 2^-" + std::to_string(bits));
}

}  // namespace dioph

#endif  // DIOPH_REAL_SOURCE_HPP
