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

#ifndef DIOPH_EXPANSION_HPP
#define DIOPH_EXPANSION_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "dioph/ball.hpp"
#include "dioph/continued_fraction.hpp"
#include "dioph/error.hpp"
#include "dioph/hp_real.hpp"
#include "dioph/numeric.hpp"
#include "dioph/real_source.hpp"

namespace dioph {

/// Quotient extraction is ill-conditioned near rationals, hence the large cap.
inline constexpr PrecisionPolicy kExpansionPolicy{64, 1u << 20};

namespace detail {

inline Rational to_rational(const Float& f) {
  Rational out;
  mpfr_get_q(out.get_mpq_t(), f.get());
  return out;
}

/// Runs Euclid on both ends of [lo, hi] and keeps the quotients they share.
/// `terminated` is set when the interval is a single rational point.
inline std::vector<Integer> shared_quotients(Rational lo, Rational hi, std::size_t max_terms, bool& terminated) {
  std::vector<Integer> terms;
  terminated = false;
  while (terms.size() < max_terms) {
    const Integer a = floor_of(lo);
    if (floor_of(hi) != a) break;
    if (lo == hi) {
      terms.push_back(a);
      if (Rational(a) == lo) {
        terminated = true;
        break;
      }
      lo = hi = 1 / (lo - Rational(a));
      continue;
    }
    // lo == a leaves open whether x itself is the integer a.
    if (Rational(a) == lo) break;
    terms.push_back(a);
    Rational next_lo = 1 / (hi - Rational(a));
    Rational next_hi = 1 / (lo - Rational(a));
    lo = std::move(next_lo);
    hi = std::move(next_hi);
  }
  return terms;
}

}  // namespace detail

/// Certified partial quotients of the real enclosed by `x`. Every quotient is
/// emitted only once the enclosure pins it down; precision doubles from
/// policy.start_bits up to policy.cap_bits. Returns an Exact expansion when x
/// is certified rational (exact enclosure), a Prefix of max_terms otherwise.
inline ContinuedFraction expand_real(const Enclosure& x, std::size_t max_terms,
                                     const PrecisionPolicy& policy = kExpansionPolicy) {
  require(max_terms >= 1, "max_terms must be positive");
  for (Bits bits = policy.start_bits;; bits = std::min(policy.cap_bits, 2 * bits)) {
    const Ball b = x(bits);
    bool terminated = false;
    auto terms =
        detail::shared_quotients(detail::to_rational(b.lower()), detail::to_rational(b.upper()), max_terms, terminated);
    if (terminated) return ContinuedFraction::exact(std::move(terms));
    if (terms.size() == max_terms) return ContinuedFraction::prefix(std::move(terms));
    if (bits >= policy.cap_bits) {
      fail(ErrorCode::PrecisionExhausted, "could only certify " + std::to_string(terms.size()) + " of " +
                                              std::to_string(max_terms) + " partial quotients");
    }
  }
}

inline ContinuedFraction expand_real(const RealSource& x, std::size_t max_terms,
                                     const PrecisionPolicy& policy = kExpansionPolicy) {
  require(max_terms >= 1, "max_terms must be positive");
  if (auto q = x.exact_rational()) {
    ContinuedFraction cf = expand_rational(*q);
    if (cf.size() <= max_terms) return cf;
    std::vector<Integer> head(cf.terms().begin(), cf.terms().begin() + static_cast<std::ptrdiff_t>(max_terms));
    return ContinuedFraction::prefix(std::move(head));
  }
  return expand_real(enclosure_of(x, policy), max_terms, policy);
}

/// Decides |x - p/q| < 1/(sqrt(5) q^2), i.e. 5 q^2 (q x - p)^2 < 1.
/// Exact in Z[sqrt d] for quadratic surds, certified balls otherwise.
inline bool hurwitz_quality(const RealSource& x, const Convergent& c, const PrecisionPolicy& policy = {}) {
  const Integer qq5 = 5 * c.q * c.q;
  if (const auto* s = x.as<QuadraticSurd>()) {
    // q x - p = (A + B sqrt d)/R with A = qP - pR, B = qQ.
    const Integer a = c.q * s->p - c.p * s->r;
    const Integer b = c.q * s->q;
    const Integer u = s->r * s->r - qq5 * (a * a + b * b * s->d);
    const Integer v = -2 * qq5 * a * b;
    return surd_sign(u, v, s->d) > 0;
  }
  if (auto exact = x.exact_rational()) {
    const Rational e = Rational(c.q) * *exact - Rational(c.p);
    return Rational(qq5) * e * e < 1;
  }
  const Bits start = 2 * bit_length(c.q) + 64;
  const auto order = certified_compare(
      [&](Bits bits) {
        const Ball e = approximate(x, bits, policy) * c.q - c.p;
        return square(e) * qq5;
      },
      Rational(1), start, policy.cap_bits);
  if (order == CertifiedOrder::Unresolved) {
    fail(ErrorCode::PrecisionExhausted, "Hurwitz comparison undecided for convergent " + std::to_string(c.index));
  }
  return order == CertifiedOrder::Less;
}

/// The convergents among the first k with |x - p/q| < 1/(sqrt(5) q^2).
inline std::vector<Convergent> hurwitz_filter(const RealSource& x, std::size_t k,
                                              const PrecisionPolicy& policy = kExpansionPolicy) {
  require(k >= 1, "k must be positive");
  const ContinuedFraction cf = expand_real(x, k, policy);
  if (cf.kind() == ContinuedFraction::Kind::Exact) {
    fail(ErrorCode::NotIrrational, x.describe() + " has a terminating expansion " + cf.to_string());
  }
  std::vector<Convergent> out;
  for (auto& c : convergents(cf, k)) {
    if (hurwitz_quality(x, c, policy)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace dioph

#endif  // DIOPH_EXPANSION_HPP
