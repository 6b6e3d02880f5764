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

#ifndef DIOPH_HP_REAL_HPP
#define DIOPH_HP_REAL_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "dioph/ball.hpp"
#include "dioph/error.hpp"
#include "dioph/numeric.hpp"
#include "dioph/real_source.hpp"

namespace dioph {

/// Any procedure returning a ball of radius <= 2^-bits around a fixed real.
using Enclosure = std::function<Ball(Bits)>;

inline Enclosure enclosure_of(RealSource x, PrecisionPolicy policy = {}) {
  return [x = std::move(x), policy](Bits bits) { return approximate(x, bits, policy); };
}

inline Enclosure enclosure_of(Rational q) {
  return [q = std::move(q)](Bits bits) { return Ball::from_rational(q, bits + 8); };
}

/// Default accuracy of certified sequence values.
inline constexpr Bits kDefaultTargetBits = 53;

/// {n x} as an exact rational when the source is rational, plus its ball.
struct Phase {
  std::optional<Rational> exact;
  Ball ball;
};

/// Certified evaluation of {n x}, {n x}^n and |cos(n pi x)|^n for one source.
/// Keeps a cache of the widest enclosure computed so far; not thread-safe,
/// use one evaluator per thread.
class Evaluator {
 public:
  explicit Evaluator(RealSource source, PrecisionPolicy policy = {})
      : source_(std::move(source)), policy_(policy), exact_(source_.exact_rational()) {}

  const RealSource& source() const noexcept { return source_; }
  const PrecisionPolicy& policy() const noexcept { return policy_; }

  Ball enclosure(Bits bits) {
    if (!cached_ || cached_bits_ < bits) {
      cached_ = approximate(source_, bits, policy_);
      cached_bits_ = bits;
    }
    return *cached_;
  }

  /// {n x} with rad <= 2^-bits. Escalates precision while n x straddles an
  /// integer and reports PrecisionExhausted at the cap.
  Phase reduce(const Integer& n, Bits bits) {
    require(n >= 1, "index n must be positive");
    const Bits out_precision = bits + 16;
    if (exact_) {
      Rational t = frac_of(*exact_ * Rational(n));
      Ball b = Ball::from_rational(t, out_precision);
      return {std::move(t), std::move(b)};
    }
    if (const auto* s = source_.as<DecimalSeries>()) return {std::nullopt, reduce_decimal(*s, n, bits)};
    Bits work = bits + 8;
    while (true) {
      const Ball nx = enclosure(work) * n;
      if (auto fl = nx.unique_floor()) {
        Ball t = nx - *fl;
        if (t.radius_within(-static_cast<long>(bits))) return {std::nullopt, std::move(t)};
      }
      if (work >= policy_.cap_bits) {
        fail(ErrorCode::PrecisionExhausted,
             "n*x is within the precision cap of an integer (n = " + n.get_str() + ", x = " + source_.describe() + ")");
      }
      work = std::min(policy_.cap_bits, 2 * work);
    }
  }

  Ball frac_part(const Integer& n, Bits target = kDefaultTargetBits) { return reduce(n, target).ball; }

  /// {n x}^n, computed as exp(n log {n x}).
  Ball pow_frac(const Integer& n, Bits target = kDefaultTargetBits) {
    Bits bits = target + bit_length(n) + 8;
    while (true) {
      Phase ph = reduce(n, bits);
      if (ph.exact && *ph.exact == 0) return Ball::from_integer(0, bits);
      Ball v = pow_nonneg(widen_precision(ph.ball, bits + bit_length(n)), n);
      if (v.radius_within(-static_cast<long>(target))) return v;
      bits = escalate(bits);
    }
  }

  /// |cos(n pi x)|^n. The argument is reduced to t = {n x} first so that pi
  /// only enters as cos(pi t) with t in [0, 1).
  Ball cos_pow(const Integer& n, Bits target = kDefaultTargetBits) {
    Bits bits = target + bit_length(n) + 8;
    while (true) {
      Phase ph = reduce(n, bits);
      if (ph.exact) {
        const Rational& t = *ph.exact;
        if (t == 0) return Ball::from_integer(1, bits);
        if (t == Rational(1, 2)) return Ball::from_integer(0, bits);
        if (t == Rational(1, 3) || t == Rational(2, 3)) {
          if (n.fits_ulong_p() && n.get_ui() < (1ul << 40)) {
            Float half(bits);
            mpfr_set_ui_2exp(half.get(), 1, -static_cast<mpfr_exp_t>(n.get_ui()), MPFR_RNDN);
            return Ball(std::move(half), Float(kRadiusBits));
          }
        }
      }
      const Bits p = bits + bit_length(n);
      const Ball t = widen_precision(ph.ball, p);
      const Ball c = abs(cos(Ball::pi(p + 4) * t));
      Ball v = pow_nonneg(c, n);
      if (v.radius_within(-static_cast<long>(target))) return v;
      bits = escalate(bits);
    }
  }

 private:
  Bits escalate(Bits bits) const {
    if (bits >= policy_.cap_bits) fail(ErrorCode::PrecisionExhausted, "sequence value not certified within the cap");
    return std::min(policy_.cap_bits, 2 * bits);
  }

  /// Re-rounds a ball onto a wider midpoint so later steps keep relative precision.
  static Ball widen_precision(const Ball& b, Bits precision) {
    if (b.precision() >= precision) return b;
    Float mid(precision);
    mpfr_set(mid.get(), b.mid().get(), MPFR_RNDN);
    return Ball(std::move(mid), b.rad());
  }

  /// Exact decimal reduction: n * (sum of the leading terms) mod 1, plus a
  /// certified bound on n times the tail.
  Ball reduce_decimal(const DecimalSeries& s, const Integer& n, Bits bits) const {
    std::uint64_t digits = detail::digits_for_bits(bits + bit_length(n) + 8);
    const std::uint64_t digit_cap = detail::digits_for_bits(policy_.cap_bits) + bit_length(n);
    while (true) {
      const auto prefix = detail::decimal_prefix(s, digits);
      const Rational f = frac_of(prefix.value * Rational(n));
      const auto [tlo, thi] = detail::decimal_tail_bounds(prefix, digits, n);
      const Rational lo = f + tlo;
      const Rational hi = f + thi;
      if (hi < 1) return Ball::from_rational_endpoints(lo, hi, bits + 16);
      if (digits >= digit_cap) fail(ErrorCode::PrecisionExhausted, "decimal reduction does not separate from 1");
      digits = std::min(digit_cap, 2 * digits);
    }
  }

  RealSource source_;
  PrecisionPolicy policy_;
  std::optional<Rational> exact_;
  std::optional<Ball> cached_;
  Bits cached_bits_ = 0;
};

inline Ball frac_part(const Integer& n, const RealSource& x, Bits target = kDefaultTargetBits,
                      const PrecisionPolicy& policy = {}) {
  return Evaluator(x, policy).frac_part(n, target);
}

inline Ball pow_frac(const Integer& n, const RealSource& x, Bits target = kDefaultTargetBits,
                     const PrecisionPolicy& policy = {}) {
  return Evaluator(x, policy).pow_frac(n, target);
}

inline Ball cos_pow(const Integer& n, const RealSource& x, Bits target = kDefaultTargetBits,
                    const PrecisionPolicy& policy = {}) {
  return Evaluator(x, policy).cos_pow(n, target);
}

/// Decides `strictly below` / `strictly above` for an enclosure, escalating
/// precision up to the cap; Unresolved only when the cap is reached.
inline CertifiedOrder certified_compare(const Enclosure& value, const Rational& threshold, Bits start, Bits cap) {
  for (Bits bits = start;; bits = std::min(cap, 2 * bits)) {
    const auto order = compare(value(bits), threshold);
    if (order != CertifiedOrder::Unresolved || bits >= cap) return order;
  }
}

}  // namespace dioph

#endif  // DIOPH_HP_REAL_HPP
