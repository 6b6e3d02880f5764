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

#ifndef DIOPH_SCHEDULE_HPP
#define DIOPH_SCHEDULE_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dioph/ball.hpp"
#include "dioph/counting.hpp"
#include "dioph/error.hpp"
#include "dioph/hp_real.hpp"
#include "dioph/numeric.hpp"
#include "dioph/real_source.hpp"

namespace dioph {

/// A decaying function f with f(n) -> 0: n^-beta, 1/ln n, or e^{-lambda n}.
struct FSpec {
  enum class Kind { Power, LogInverse, ExpInverse };
  Kind kind = Kind::Power;
  Rational param = 1;  ///< beta or lambda; unused for LogInverse

  static FSpec power(Rational beta) {
    require(beta > 0, "pow exponent must be positive");
    return {Kind::Power, std::move(beta)};
  }
  static FSpec log_inverse() { return {Kind::LogInverse, Rational(0)}; }
  static FSpec exp_inverse(Rational lambda) {
    require(lambda > 0, "expinv rate must be positive");
    return {Kind::ExpInverse, std::move(lambda)};
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Power: return "pow:" + dioph::to_string(param);
      case Kind::LogInverse: return "loginv";
      case Kind::ExpInverse: return "expinv:" + dioph::to_string(param);
    }
    return "?";
  }

  Ball operator()(const Integer& n, Bits bits) const {
    const Ball nb = Ball::from_integer(n, bits);
    switch (kind) {
      case Kind::Power: return exp(log(nb) * Rational(-param));
      case Kind::LogInverse: return Ball::from_integer(1, bits) / log(nb);
      case Kind::ExpInverse: return exp(nb * Rational(-param));
    }
    return nb;
  }
};

namespace detail {

/// Sign of an enclosure-defined difference, escalating precision; throws
/// PrecisionExhausted when still undecided at the cap.
template <typename F>
int certified_sign(F diff, const std::string& what) {
  for (Bits w = 128; w <= 1u << 14; w *= 2) {
    const auto order = compare(diff(w), Rational(0));
    if (order == CertifiedOrder::Less) return -1;
    if (order == CertifiedOrder::Greater) return 1;
  }
  fail(ErrorCode::PrecisionExhausted, "could not decide " + what);
}

inline Integer root_ceil(const Integer& value, unsigned long k) {
  Integer r;
  mpz_root(r.get_mpz_t(), value.get_mpz_t(), k);
  if (ipow(r, k) < value) r += 1;
  return r;
}

}  // namespace detail

/// f(n) <= 10^-d.
inline bool decays_below(const FSpec& f, const Integer& n, std::uint64_t d) {
  switch (f.kind) {
    case FSpec::Kind::Power:
      // n^{-p/q} <= 10^{-d}  <=>  n^p >= 10^{dq}
      return ipow(n, f.param.get_num().get_ui()) >= pow10(d * f.param.get_den().get_ui());
    case FSpec::Kind::LogInverse:
      if (n < 2) return false;
      return detail::certified_sign([&](Bits w) { return log(Ball::from_integer(n, w)) - Rational(pow10(d)); },
                                    "ln n >= 10^d") >= 0;
    case FSpec::Kind::ExpInverse:
      return detail::certified_sign(
                 [&](Bits w) { return Ball::from_rational(f.param * Rational(n), w) - log(Ball::from_integer(10, w)) * Integer(d); },
                 "lambda n >= d ln 10") >= 0;
  }
  return false;
}

/// f(n) < 1.
inline bool below_one(const FSpec& f, const Integer& n) {
  switch (f.kind) {
    case FSpec::Kind::Power: return n > 1;
    case FSpec::Kind::LogInverse: return n >= 3;  // ln 2 < 1 < ln 3
    case FSpec::Kind::ExpInverse: return n >= 1;
  }
  return false;
}

/// n f(n) <= k.
inline bool scaled_at_most(const FSpec& f, const Integer& n, const Integer& k) {
  if (f.kind == FSpec::Kind::Power) {
    // n^{1 - p/q} <= k  <=>  n^q <= k^q n^p
    const unsigned long p = f.param.get_num().get_ui();
    const unsigned long q = f.param.get_den().get_ui();
    return ipow(n, q) <= ipow(k, q) * ipow(n, p);
  }
  return detail::certified_sign([&](Bits w) { return Ball::from_integer(k, w) - f(n, w) * n; }, "n f(n) <= k") >= 0;
}

/// Least n >= lo with f(n) <= 10^-d, or nullopt past `cap`.
inline std::optional<Integer> least_decayed(const FSpec& f, const Integer& lo, std::uint64_t d, const Integer& cap) {
  Integer guess = lo;
  switch (f.kind) {
    case FSpec::Kind::Power: {
      const unsigned long p = f.param.get_num().get_ui();
      const unsigned long q = f.param.get_den().get_ui();
      // Quick reject before building a huge power.
      if (static_cast<double>(d) * q / p > std::log10(cap.get_d()) + 1) return std::nullopt;
      guess = detail::root_ceil(pow10(d * q), p);
      break;
    }
    case FSpec::Kind::LogInverse: {
      // n >= e^{10^d}; beyond the cap as soon as 10^d > ln cap.
      if (std::pow(10.0, static_cast<double>(d)) > std::log(cap.get_d())) return std::nullopt;
      Ball e = exp(Ball::from_integer(pow10(d), 128));
      mpfr_get_z(guess.get_mpz_t(), e.lower().get(), MPFR_RNDD);
      break;
    }
    case FSpec::Kind::ExpInverse: {
      const double g = static_cast<double>(d) * std::log(10.0) / f.param.get_d();
      if (g > cap.get_d()) return std::nullopt;
      guess = Integer(std::max(0.0, std::floor(g) - 1));
      break;
    }
  }
  if (guess < lo) guess = lo;
  while (guess > lo && decays_below(f, guess - 1, d)) guess -= 1;
  while (!decays_below(f, guess, d)) {
    guess += 1;
    if (guess > cap) return std::nullopt;
  }
  if (guess > cap) return std::nullopt;
  return guess;
}

struct ScheduleStep {
  std::uint64_t d = 0;
  Integer N;
};

/// The recursion (d_i, N_i) behind the sparse decimal alpha = sum 10^{-d_i}.
struct DecimalSchedule {
  Rational r;
  Rational r_prime;
  FSpec f;
  bool literal_least = false;
  std::vector<ScheduleStep> steps;
};

struct ScheduleOptions {
  std::optional<Rational> r_prime;  ///< defaults to (1 + r)/2
  /// N_{i+1} = least n > N_i with f(n) <= 10^{-d_i}, without the count condition.
  bool literal_least = false;
  Integer magnitude_cap = pow10(12);
};

namespace detail {

/// 10^{2d} (-2 ln r') >= 4 pi^2 N^3, i.e. d >= log10(2 pi N^{3/2} / sqrt(-2 ln r')).
inline int precision_margin_sign(const Rational& r_prime, const Integer& N, std::uint64_t d) {
  return certified_sign(
      [&](Bits w) {
        const Ball lhs = log(Ball::from_rational(r_prime, w)) * Integer(-2) * pow10(2 * d);
        const Ball pi = Ball::pi(w);
        return lhs - pi * pi * Integer(4 * N * N * N);
      },
      "the precision condition on d");
}

/// Least d >= floor_d with d >= log10(...), strictly above when `strict`.
inline std::uint64_t least_precision_digits(const Rational& r_prime, const Integer& N, std::uint64_t floor_d,
                                            bool strict) {
  const double estimate =
      std::log10(2 * M_PI * std::pow(N.get_d(), 1.5) / std::sqrt(-2 * std::log(r_prime.get_d())));
  std::uint64_t d = std::max<std::uint64_t>(floor_d, estimate > 1 ? static_cast<std::uint64_t>(estimate) - 1 : 0);
  auto ok = [&](std::uint64_t dd) {
    const int s = precision_margin_sign(r_prime, N, dd);
    return strict ? s > 0 : s >= 0;
  };
  while (d > floor_d && ok(d - 1)) --d;
  while (!ok(d)) ++d;
  return d;
}

}  // namespace detail

struct DecimalConstruction {
  DecimalSchedule schedule;
  RealSource alpha;
};

/// Builds k_max steps: N_1 the least n with f(n) < 1, d_1 the least integer
/// above log10(2 pi N_1^{3/2}/sqrt(-2 ln r')), then N_{i+1} > N_i with
/// f(N_{i+1}) <= 10^{-d_i} and d_{i+1} >= max(2 d_i, log10(...)). By default
/// N_{i+1} is also required to satisfy floor(N_{i+1}/10^{d_i}) >= N_{i+1} f(N_{i+1}),
/// so the count over multiples of 10^{d_i} reaches N f(N). alpha continues
/// with d_{i+1} = 2 d_i beyond the listed steps.
inline DecimalConstruction construct_decimal_alpha(const Rational& r, const FSpec& f, std::size_t k_max,
                                                   const ScheduleOptions& options = {}) {
  require(r > 0 && r < 1, "r must lie in (0, 1)");
  require(k_max >= 2, "k_max must be at least 2");
  const Rational rp = options.r_prime.value_or((1 + r) / 2);
  require(rp > r && rp < 1, "r' must lie in (r, 1)");
  DecimalSchedule s{r, rp, f, options.literal_least, {}};

  Integer n1 = 1;
  while (!below_one(f, n1)) n1 += 1;
  s.steps.push_back({detail::least_precision_digits(rp, n1, 1, true), n1});

  while (s.steps.size() < k_max) {
    const ScheduleStep& prev = s.steps.back();
    const auto base = least_decayed(f, prev.N + 1, prev.d, options.magnitude_cap);
    if (!base) {
      fail(ErrorCode::InfeasibleSchedule, "f(n) <= 10^-" + std::to_string(prev.d) + " needs n beyond " +
                                              options.magnitude_cap.get_str());
    }
    Integer next = *base;
    if (!options.literal_least) {
      // Within a block of 10^d consecutive n the floor is constant; scan block by block.
      const Integer unit = pow10(prev.d);
      Integer block_floor = next / unit;
      Integer candidate = next;
      while (true) {
        if (candidate > options.magnitude_cap) {
          fail(ErrorCode::InfeasibleSchedule, "no n below the cap with floor(n/10^d) >= n f(n)");
        }
        const Integer block_end = (block_floor + 1) * unit - 1;
        if (scaled_at_most(f, candidate, block_floor)) break;
        if (scaled_at_most(f, block_end, block_floor)) {
          // n f(n) falls inside the block: bisect for the first success.
          Integer lo = candidate;
          Integer hi = block_end;
          while (hi - lo > 1) {
            Integer mid = (lo + hi) / 2;
            (scaled_at_most(f, mid, block_floor) ? hi : lo) = mid;
          }
          candidate = hi;
          break;
        }
        block_floor += 1;
        candidate = block_floor * unit;
      }
      next = candidate;
    }
    if (next > options.magnitude_cap) fail(ErrorCode::InfeasibleSchedule, "N exceeds the magnitude cap");
    const std::uint64_t d = detail::least_precision_digits(rp, next, 2 * prev.d, false);
    s.steps.push_back({d, std::move(next)});
  }

  DecimalSeries series;
  for (const auto& st : s.steps) series.exponents.push_back(st.d);
  series.tail = DecimalTail::Doubling;
  return {std::move(s), RealSource::decimal_series(std::move(series))};
}

struct ScheduleChecks {
  bool first_below_one = false;  ///< f(N_1) < 1
  bool decay = false;            ///< f(N_{i+1}) <= 10^{-d_i}
  bool doubling = false;         ///< 2 d_i <= d_{i+1}
  bool precision = false;        ///< d_i >= log10(2 pi N_i^{3/2} / sqrt(-2 ln r'))
  bool all() const { return first_below_one && decay && doubling && precision; }
};

inline ScheduleChecks check_schedule(const DecimalSchedule& s) {
  ScheduleChecks c;
  if (s.steps.empty()) return c;
  c.first_below_one = below_one(s.f, s.steps[0].N);
  c.decay = c.doubling = c.precision = true;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    if (detail::precision_margin_sign(s.r_prime, s.steps[i].N, s.steps[i].d) < 0) c.precision = false;
    if (i + 1 < s.steps.size()) {
      if (!decays_below(s.f, s.steps[i + 1].N, s.steps[i].d)) c.decay = false;
      if (2 * s.steps[i].d > s.steps[i + 1].d) c.doubling = false;
    }
  }
  return c;
}

struct MultipleCheck {
  Integer m;
  Integer n;
  Ball value;
  CertifiedOrder order = CertifiedOrder::Unresolved;
};

struct DecimalVerification {
  std::size_t k = 0;
  Integer step;  ///< 10^{d_{k-1}}
  std::vector<MultipleCheck> checked_multiples;
  bool all_exceed = false;
  bool inconclusive = false;
  Integer implied_count_bound;  ///< floor(N_k / 10^{d_{k-1}})
  Ball n_f_n;                   ///< N_k f(N_k)
  bool bound_dominates = false;  ///< implied_count_bound >= N_k f(N_k)
  std::optional<CountReport> full_count;
};

/// Certifies r < |cos(n pi alpha)|^n for every n = 10^{d_{k-1}} m <= N_k
/// (k is 1-based, 2 <= k <= steps). Undecidable comparisons are reported per
/// multiple and make the verification inconclusive.
inline DecimalVerification verify_decimal_alpha(const DecimalSchedule& s, const RealSource& alpha, std::size_t k,
                                                bool full_count = false, const PrecisionPolicy& policy = {}) {
  require(k >= 2 && k <= s.steps.size(), "k must lie in 2..schedule length");
  DecimalVerification out;
  out.k = k;
  const ScheduleStep& prev = s.steps[k - 2];
  const ScheduleStep& cur = s.steps[k - 1];
  out.step = pow10(prev.d);
  out.implied_count_bound = cur.N / out.step;
  Evaluator ev(alpha, policy);
  out.all_exceed = true;
  for (Integer m = 1; m <= out.implied_count_bound; ++m) {
    MultipleCheck mc;
    mc.m = m;
    mc.n = m * out.step;
    mc.order = detail::exceeds(ev, mc.n, s.r, 64);
    try {
      mc.value = ev.cos_pow(mc.n, 64);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
    }
    if (mc.order == CertifiedOrder::Unresolved) out.inconclusive = true;
    if (mc.order != CertifiedOrder::Greater) out.all_exceed = false;
    out.checked_multiples.push_back(std::move(mc));
  }
  out.n_f_n = s.f(cur.N, 128) * cur.N;
  out.bound_dominates = scaled_at_most(s.f, cur.N, out.implied_count_bound);
  if (full_count) {
    require(cur.N.fits_ulong_p(), "N_k too large for a full count");
    out.full_count = count_exceed(alpha, s.r, cur.N.get_ui(), {}, policy);
  }
  return out;
}

}  // namespace dioph

#endif  // DIOPH_SCHEDULE_HPP
