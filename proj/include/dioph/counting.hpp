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

#ifndef DIOPH_COUNTING_HPP
#define DIOPH_COUNTING_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dioph/ball.hpp"
#include "dioph/error.hpp"
#include "dioph/expansion.hpp"
#include "dioph/hp_real.hpp"
#include "dioph/numeric.hpp"
#include "dioph/real_source.hpp"

namespace dioph {

/// |{n <= N : r < |cos(n pi x)|^n}| split into certain and undecided indices.
/// The true count lies in [count_certain, count_certain + count_unresolved].
struct CountReport {
  std::uint64_t N = 0;
  Rational r;
  std::uint64_t count_certain = 0;
  std::uint64_t count_unresolved = 0;
  double elapsed_seconds = 0;  ///< informational only
};

struct CountOptions {
  unsigned threads = 0;  ///< 0 picks the hardware concurrency
  Bits base_bits = 64;
};

namespace detail {

inline unsigned thread_count(unsigned requested, std::uint64_t work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (work < 4096) t = 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(1, work)));
}

/// Runs body(lo, hi, slot) on contiguous index ranges covering 1..n.
template <typename Body>
void partitioned(std::uint64_t n, unsigned threads, Body body) {
  if (threads <= 1) {
    body(1, n, 0u);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (n + threads - 1) / threads;
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint64_t lo = 1 + i * chunk;
    const std::uint64_t hi = std::min(n, lo + chunk - 1);
    if (lo > hi) break;
    pool.emplace_back([=] { body(lo, hi, i); });
  }
  for (auto& th : pool) th.join();
}

/// r < cos_pow(n): tries the base accuracy, then once more with more bits.
inline CertifiedOrder exceeds(Evaluator& ev, const Integer& n, const Rational& r, Bits base_bits) {
  const Bits first = base_bits;
  const Bits second = 2 * base_bits + bit_length(n);
  for (Bits target : {first, second}) {
    try {
      const auto order = compare(ev.cos_pow(n, target), r);
      if (order != CertifiedOrder::Unresolved) return order;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
    }
  }
  return CertifiedOrder::Unresolved;
}

}  // namespace detail

inline CountReport count_exceed(const RealSource& x, const Rational& r, std::uint64_t N, const CountOptions& options = {},
                                const PrecisionPolicy& policy = {}) {
  require(r > 0 && r < 1, "r must lie in (0, 1)");
  const auto start = std::chrono::steady_clock::now();
  const unsigned threads = detail::thread_count(options.threads, N);
  std::vector<std::uint64_t> certain(threads, 0);
  std::vector<std::uint64_t> unresolved(threads, 0);
  detail::partitioned(N, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
    Evaluator ev(x, policy);
    for (std::uint64_t i = lo; i <= hi; ++i) {
      const auto order = detail::exceeds(ev, Integer(static_cast<unsigned long>(i)), r, options.base_bits);
      if (order == CertifiedOrder::Greater) ++certain[slot];
      if (order == CertifiedOrder::Unresolved) ++unresolved[slot];
    }
  });
  CountReport out;
  out.N = N;
  out.r = r;
  for (unsigned i = 0; i < threads; ++i) {
    out.count_certain += certain[i];
    out.count_unresolved += unresolved[i];
  }
  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

struct CloseRationalCount {
  std::uint64_t count = 0;
  std::uint64_t unresolved = 0;
  std::vector<std::pair<Integer, Integer>> hits;  ///< (n, m), increasing n
  std::vector<Integer> skipped;
};

/// Counts n <= N with |x - m/n| < a / n^{3/2} for m the nearest integer to
/// n x, i.e. n (n x - m)^2 < a^2. `a` is an enclosure so that irrational
/// constants such as sqrt(1 - r)/pi can be used.
inline CloseRationalCount close_rational_count(const RealSource& x, const Enclosure& a, std::uint64_t N,
                                               const PrecisionPolicy& policy = {}) {
  require(compare(a(64), Rational(0)) == CertifiedOrder::Greater, "a must be positive");
  CloseRationalCount out;
  const auto exact = x.exact_rational();
  Evaluator ev(x, policy);
  const Bits cap = std::min<Bits>(policy.cap_bits, 1u << 12);
  for (std::uint64_t i = 1; i <= N; ++i) {
    const Integer n(static_cast<unsigned long>(i));
    std::optional<bool> decided;
    Integer m;
    for (Bits w = 64 + 2 * bit_length(n);; w = std::min(cap, 2 * w)) {
      std::optional<Ball> dist;
      if (exact) {
        const Rational nx = *exact * Rational(n);
        m = nearest_of(nx);
        dist = Ball::from_rational(nx - Rational(m), w);
      } else {
        const Ball nx = ev.enclosure(w) * n;
        if (auto mm = nx.unique_nearest()) {
          m = *mm;
          dist = nx - m;
        }
      }
      if (dist) {
        const auto order = compare(square(*dist) * n, square(a(w)));
        if (order != CertifiedOrder::Unresolved) {
          decided = order == CertifiedOrder::Less;
          break;
        }
      }
      if (w >= cap) break;
    }
    if (!decided) {
      ++out.unresolved;
      out.skipped.push_back(n);
    } else if (*decided) {
      ++out.count;
      out.hits.emplace_back(n, m);
    }
  }
  return out;
}

inline CloseRationalCount close_rational_count(const RealSource& x, const Rational& a, std::uint64_t N,
                                               const PrecisionPolicy& policy = {}) {
  return close_rational_count(x, enclosure_of(a), N, policy);
}

/// 5^{1/4} (1 - r)^{1/4} N^{1/4} / (2 sqrt(pi)) as a ball with rad <= 2^-40.
inline Ball quarter_power_bound(const Rational& r, const Integer& N) {
  require(r > 0 && r < 1, "r must lie in (0, 1)");
  require(N >= 1, "N must be positive");
  const Bits w = 128;
  const Ball inner = Ball::from_rational(Rational(5) * (1 - r) * Rational(N), w);
  return pow(inner, Rational(1, 4)) / (sqrt(Ball::pi(w)) * Integer(2));
}

/// a = sqrt(1 - r) / pi, the closeness constant that forces cos_pow above r.
inline Enclosure closeness_constant(const Rational& r) {
  require(r > 0 && r < 1, "r must lie in (0, 1)");
  return [r](Bits bits) { return sqrt(Ball::from_rational(1 - r, bits + 16)) / Ball::pi(bits + 16); };
}

/// The t-th (1-based) distinct denominator among convergents with
/// |x - p/q| < 1/(sqrt(5) q^2).
inline Convergent hurwitz_convergent(const RealSource& x, std::size_t t, const PrecisionPolicy& policy = {}) {
  require(t >= 1, "t must be positive");
  for (std::size_t k = 3 * t + 6;; k *= 2) {
    const auto passing = hurwitz_filter(x, k, policy);
    std::vector<Convergent> distinct;
    for (const auto& c : passing) {
      if (distinct.empty() || c.q > distinct.back().q) distinct.push_back(c);
    }
    if (distinct.size() >= t) return distinct[t - 1];
    if (k > 1u << 14) fail(ErrorCode::DepthExceeded, "too few Hurwitz convergents found");
  }
}

struct MultiplesWitness {
  std::size_t t = 0;
  Convergent convergent;   ///< u_t / v_t
  Ball scale;              ///< 5^{1/3} a^{2/3} v_t^{1/3}
  Integer d_max;           ///< floor(scale)
  Integer N;               ///< d_max v_t
  bool multiples_certified = false;  ///< each d v_t, d <= d_max, is close
};

/// N_t = floor(5^{1/3} a^{2/3} v_t^{1/3}) v_t for the t-th Hurwitz
/// denominator v_t. TooSmall unless the scale is certified above 2.
inline MultiplesWitness hurwitz_multiples_witness(const RealSource& x, const Enclosure& a, std::size_t t,
                                                  const PrecisionPolicy& policy = {}) {
  MultiplesWitness out;
  out.t = t;
  out.convergent = hurwitz_convergent(x, t, policy);
  const Integer& v = out.convergent.q;
  const Integer& u = out.convergent.p;
  std::optional<Integer> floor_value;
  for (Bits w = 64;; w *= 2) {
    out.scale = pow(square(a(w)) * Integer(5 * v), Rational(1, 3));
    const auto above_two = compare(out.scale, Rational(2));
    if (above_two == CertifiedOrder::Less) break;
    if (above_two == CertifiedOrder::Greater && (floor_value = out.scale.unique_floor())) break;
    if (w >= 4096) break;
  }
  if (!floor_value) {
    fail(ErrorCode::TooSmall, "5^(1/3) a^(2/3) v^(1/3) = " + out.scale.to_string(8) + " is not above 2 for v = " +
                                  v.get_str() + "; use a later convergent");
  }
  out.d_max = *floor_value;
  out.N = out.d_max * v;
  // (v x - u)^2 d^3 v < a^2 for every d <= d_max; the largest d is the binding one.
  const Integer d3v = out.d_max * out.d_max * out.d_max * v;
  Evaluator ev(x, policy);
  for (Bits w = 64 + 2 * bit_length(v);; w *= 2) {
    const Ball gap = ev.enclosure(w) * v - u;
    const auto order = compare(square(gap) * d3v, square(a(w)));
    if (order != CertifiedOrder::Unresolved) {
      out.multiples_certified = order == CertifiedOrder::Less;
      break;
    }
    if (w >= 4096) break;
  }
  return out;
}

/// Result of checking the quarter-power lower bound at one Hurwitz level.
struct QuarterPowerVerification {
  MultiplesWitness witness;
  Ball bound;
  CountReport count;
  /// count_certain >= upper end of the bound enclosure.
  bool pass = false;
  /// cos_pow(d v_t) > r certified for every d <= d_max.
  bool implication_holds = false;
  std::vector<std::pair<Integer, Ball>> multiples;
};

inline QuarterPowerVerification verify_quarter_power(const RealSource& x, const Rational& r, std::size_t t,
                                                     const CountOptions& options = {},
                                                     const PrecisionPolicy& policy = {}) {
  require(r > 0 && r < 1, "r must lie in (0, 1)");
  if (x.is_rational()) fail(ErrorCode::NotIrrational, "x must be irrational");
  QuarterPowerVerification out;
  const Enclosure a = closeness_constant(r);
  out.witness = hurwitz_multiples_witness(x, a, t, policy);
  require(out.witness.N.fits_ulong_p(), "N_t exceeds the scan range");
  out.count = count_exceed(x, r, out.witness.N.get_ui(), options, policy);
  out.bound = quarter_power_bound(r, out.witness.N);
  out.pass = mpfr_cmp_ui(out.bound.upper().get(), out.count.count_certain) <= 0;
  Evaluator ev(x, policy);
  out.implication_holds = out.witness.multiples_certified;
  for (Integer d = 1; d <= out.witness.d_max; ++d) {
    const Integer n = d * out.witness.convergent.q;
    Ball v = ev.cos_pow(n, 64);
    if (compare(v, r) != CertifiedOrder::Greater) out.implication_holds = false;
    out.multiples.emplace_back(n, std::move(v));
  }
  return out;
}

}  // namespace dioph

#endif  // DIOPH_COUNTING_HPP
