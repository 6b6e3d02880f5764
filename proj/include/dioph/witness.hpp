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

#ifndef DIOPH_WITNESS_HPP
#define DIOPH_WITNESS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dioph/ball.hpp"
#include "dioph/continued_fraction.hpp"
#include "dioph/error.hpp"
#include "dioph/expansion.hpp"
#include "dioph/gpoly.hpp"
#include "dioph/hp_real.hpp"
#include "dioph/numeric.hpp"
#include "dioph/real_source.hpp"

namespace dioph {

/// Residue filter on a candidate n and on the nearest integer m to n x / (2 pi).
/// An unset m residue filters on n alone.
struct Congruence {
  int n_mod4 = 1;
  std::optional<int> m_mod2;
};

/// How a witness was produced.
struct WitnessTrace {
  std::string method;
  std::optional<std::size_t> level;  ///< convergent index, or t for the frac construction
  std::optional<Integer> convergent_p;
  std::optional<Integer> convergent_q;
  std::optional<Integer> multiplier;  ///< k (cos), N (frac, square)
  long offset = 0;
  std::optional<double> rate;
  std::optional<Integer> nearest_m;
  std::optional<Congruence> congruence;
  std::optional<double> sandwich_lower;  ///< a = -ln y
  std::optional<double> sandwich_value;  ///< n^2 (m/n - x), strictly above a
  std::size_t evaluations = 0;
};

struct WitnessReport {
  Integer n;
  Ball value;
  Rational target;
  Rational tol;
  /// Upper bound on |value - target| over the whole ball.
  double achieved_error = 0;
  /// |value - target| <= tol holds for every point of the ball.
  bool certified = false;
  WitnessTrace trace;
};

/// BudgetExhausted, carrying the closest candidate seen.
class SearchExhausted : public Error {
 public:
  SearchExhausted(const std::string& message, std::optional<WitnessReport> best)
      : Error(ErrorCode::BudgetExhausted, message), best_(std::move(best)) {}
  const std::optional<WitnessReport>& best() const noexcept { return best_; }

 private:
  std::optional<WitnessReport> best_;
};

struct CosBudget {
  std::size_t max_index = 40;
  std::uint64_t max_multiplier = 10000;
  std::uint64_t neighborhood = 2;
  std::size_t max_evaluations = 200000;
};

namespace detail {

inline bool within_tolerance(const Ball& v, const Rational& y, const Rational& tol) {
  const Rational lo = y - tol;
  const Rational hi = y + tol;
  return mpfr_cmp_q(v.lower().get(), lo.get_mpq_t()) >= 0 && mpfr_cmp_q(v.upper().get(), hi.get_mpq_t()) <= 0;
}

inline double error_bound(const Ball& v, const Rational& y) {
  const double yd = y.get_d();
  return std::max(v.upper_double() - yd, yd - v.lower_double());
}

inline WitnessReport make_report(Integer n, Ball value, const Rational& y, const Rational& tol, WitnessTrace trace) {
  WitnessReport r;
  r.achieved_error = error_bound(value, y);
  r.certified = within_tolerance(value, y, tol);
  r.n = std::move(n);
  r.value = std::move(value);
  r.target = y;
  r.tol = tol;
  r.trace = std::move(trace);
  return r;
}

inline void keep_best(std::optional<WitnessReport>& best, const WitnessReport& r) {
  if (!best || std::abs(r.value.mid_double() - r.target.get_d()) < std::abs(best->value.mid_double() - best->target.get_d()))
    best = r;
}

/// Enclosure of x / (2 pi).
inline Enclosure turns_of(const RealSource& x, const PrecisionPolicy& policy) {
  return [x, policy](Bits bits) {
    const Ball xb = approximate(x, std::min(policy.cap_bits, bits + 8), policy);
    return xb / (Ball::pi(bits + 16) * Integer(2));
  };
}

/// |g(cos(2 pi k zeta))|^n with k = n or n^2, reduced mod 1 before pi enters.
class TrigPower {
 public:
  TrigPower(Enclosure zeta, const GPoly& g, bool squared, const PrecisionPolicy& policy)
      : zeta_(std::move(zeta)), g_(g), squared_(squared), policy_(policy) {}

  struct Value {
    Ball value;
    std::optional<Integer> nearest_m;
  };

  Value operator()(const Integer& n, Bits target = kDefaultTargetBits, bool need_m = false) const {
    const Integer k = squared_ ? Integer(n * n) : n;
    Bits w = target + bit_length(k) + bit_length(n) + 16;
    while (true) {
      const Ball z = zeta_(w) * k;
      auto m = z.unique_nearest();
      Integer shift;
      if (m) {
        shift = *m;
      } else {
        mpfr_get_z(shift.get_mpz_t(), z.mid().get(), MPFR_RNDN);
      }
      if (m || !need_m) {
        const Bits p = w + bit_length(n) + 8;
        const Ball t = z - shift;
        const Ball c = cos(Ball::pi(p) * t * Integer(2));
        Ball v = pow_nonneg(abs(g_(c)), n);
        if (v.radius_within(-static_cast<long>(target))) return {std::move(v), m};
      }
      if (w >= policy_.cap_bits) fail(ErrorCode::PrecisionExhausted, "trigonometric power not certified within the cap");
      w = std::min(policy_.cap_bits, 2 * w);
    }
  }

 private:
  Enclosure zeta_;
  const GPoly& g_;
  bool squared_;
  PrecisionPolicy policy_;
};

inline Integer mod_non_negative(const Integer& a, long m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

inline std::optional<double> to_finite_double(const Ball& b) {
  const double v = b.mid_double();
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

/// Shared search over candidate indices for the cos and sin witnesses.
inline WitnessReport cos_search(const Enclosure& zeta, const GPoly& g, const Rational& y, const Rational& tol,
                                const CosBudget& budget, std::optional<Congruence> congruence,
                                const PrecisionPolicy& policy, const std::string& method) {
  if (y <= 0 || y >= 1) fail(ErrorCode::TargetOutOfRange, "target must lie in (0, 1), got " + to_string(y));
  require(tol > 0, "tolerance must be positive");
  if (congruence) {
    require(congruence->n_mod4 >= 0 && congruence->n_mod4 < 4, "n residue must be in 0..3");
    require(!congruence->m_mod2 || (*congruence->m_mod2 >= 0 && *congruence->m_mod2 < 2), "m residue must be in 0..1");
  }
  if (budget.max_evaluations == 0 || budget.max_index == 0 || budget.max_multiplier == 0) {
    throw SearchExhausted("empty search budget", std::nullopt);
  }
  ContinuedFraction cf = ContinuedFraction::prefix({Integer(0)});
  try {
    cf = expand_real(zeta, budget.max_index, PrecisionPolicy{64, std::min<Bits>(policy.cap_bits, 1u << 14)});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PrecisionExhausted) throw;
    fail(ErrorCode::NotIrrational, "x / (2 pi) appears rational: its expansion could not be continued");
  }
  if (cf.kind() == ContinuedFraction::Kind::Exact) fail(ErrorCode::NotIrrational, "x / (2 pi) is rational");

  const VanishingData vd = vanishing_order(g, Rational(1));
  const double rate = target_to_rate(y, vd);
  const TrigPower eval(zeta, g, false, policy);
  const auto convs = convergents(cf, cf.size());

  std::size_t evaluations = 0;
  std::set<Integer> tried;
  std::optional<WitnessReport> hit;
  std::optional<WitnessReport> best;

  // Evaluates one candidate; returns false once the evaluation budget is spent.
  auto consider = [&](const Integer& n, const WitnessTrace& base) {
    if (n < 1 || !tried.insert(n).second) return true;
    if (congruence && mod_non_negative(n, 4) != congruence->n_mod4) return true;
    if (evaluations >= budget.max_evaluations) return false;
    ++evaluations;
    const bool need_m = congruence && congruence->m_mod2;
    auto v = eval(n, kDefaultTargetBits, need_m);
    if (need_m && mod_non_negative(*v.nearest_m, 2) != *congruence->m_mod2) return true;
    WitnessTrace tr = base;
    tr.nearest_m = v.nearest_m;
    tr.congruence = congruence;
    WitnessReport r = make_report(n, std::move(v.value), y, tol, std::move(tr));
    if (r.certified) {
      if (!hit || r.n < hit->n) hit = r;
    } else {
      keep_best(best, r);
    }
    return true;
  };

  auto finish = [&](WitnessReport r) {
    r.trace.evaluations = evaluations;
    return r;
  };

  const long nb = static_cast<long>(budget.neighborhood);
  bool budget_left = true;
  // Targeted pass: n = k q_j with k near (c / (q_j^{1/d} e_j))^{d/(d+1)}.
  for (const auto& c : convs) {
    if (!budget_left) break;
    const Ball e = zeta(128 + 2 * bit_length(c.q)) * c.q - c.p;
    const auto ed = to_finite_double(abs(e));
    if (!ed || *ed <= 0) continue;
    const double qd = c.q.get_d();
    const double kstar = std::pow(rate / (std::pow(qd, 1.0 / vd.d) * *ed), static_cast<double>(vd.d) / (vd.d + 1));
    if (!std::isfinite(kstar) || kstar > static_cast<double>(budget.max_multiplier) + 1) continue;
    const long k_lo = std::max<long>(1, static_cast<long>(std::floor(kstar)) - 1);
    const long k_hi = std::min<long>(static_cast<long>(budget.max_multiplier), static_cast<long>(std::ceil(kstar)) + 1);
    for (long k = k_lo; k <= k_hi && budget_left; ++k) {
      for (long s = -nb; s <= nb && budget_left; ++s) {
        WitnessTrace tr;
        tr.method = method;
        tr.level = c.index;
        tr.convergent_p = c.p;
        tr.convergent_q = c.q;
        tr.multiplier = Integer(k);
        tr.offset = s;
        tr.rate = rate;
        budget_left = consider(Integer(c.q * k + s), tr);
      }
    }
  }
  if (hit) return finish(std::move(*hit));

  // Sweep: every multiplier per convergent; stop after the first level with a hit.
  for (const auto& c : convs) {
    if (!budget_left) break;
    for (std::uint64_t k = 1; k <= budget.max_multiplier && budget_left; ++k) {
      for (long s = -nb; s <= nb && budget_left; ++s) {
        WitnessTrace tr;
        tr.method = method + "-sweep";
        tr.level = c.index;
        tr.convergent_p = c.p;
        tr.convergent_q = c.q;
        tr.multiplier = Integer(static_cast<unsigned long>(k));
        tr.offset = s;
        tr.rate = rate;
        budget_left = consider(Integer(c.q * static_cast<unsigned long>(k) + s), tr);
      }
    }
    if (hit) return finish(std::move(*hit));
  }
  if (best) best->trace.evaluations = evaluations;
  throw SearchExhausted("no certified hit within " + std::to_string(evaluations) + " evaluations", best);
}

}  // namespace detail

/// Witness n with |g(cos(n x))|^n certified within tol of y. Candidates are
/// multiples of convergent denominators of x / (2 pi), steered by the rate
/// from the vanishing order of g, plus a +-neighborhood.
inline WitnessReport find_cos_witness(const RealSource& x, const GPoly& g, const Rational& y, const Rational& tol,
                                      const CosBudget& budget = {}, std::optional<Congruence> congruence = {},
                                      const PrecisionPolicy& policy = {}) {
  if (x.as<PiMultiple>() != nullptr) fail(ErrorCode::NotIrrational, "x / pi is rational for a rational multiple of pi");
  return detail::cos_search(detail::turns_of(x, policy), g, y, tol, budget, congruence, policy, "cos-convergent");
}

/// Same for |g(sin(n x))|^n via sin(n x) = cos(n (pi/2 - x)), which holds for
/// n = 1 (mod 4); that residue is enforced.
inline WitnessReport find_sin_witness(const RealSource& x, const GPoly& g, const Rational& y, const Rational& tol,
                                      const CosBudget& budget = {}, std::optional<int> m_mod2 = {},
                                      const PrecisionPolicy& policy = {}) {
  if (x.as<PiMultiple>() != nullptr) fail(ErrorCode::NotIrrational, "x / pi is rational for a rational multiple of pi");
  const Enclosure turns = detail::turns_of(x, policy);
  Enclosure shifted = [turns](Bits bits) { return -(turns(bits) - Rational(1, 4)); };
  return detail::cos_search(shifted, g, y, tol, budget, Congruence{1, m_mod2}, policy, "sin-convergent");
}

/// Constructive witness for {n x}^n near y: for odd-indexed convergents u/v
/// (above x) take f = v (u - x v), N = floor(sqrt(a / f) + 1) with a = -ln y,
/// and n = N v. Requires a provably unbounded sequence of even quotients.
inline WitnessReport find_frac_witness(const RealSource& x, const Rational& y, const Rational& tol, std::size_t t_max,
                                       const PrecisionPolicy& policy = {}) {
  if (y <= 0 || y >= 1) fail(ErrorCode::TargetOutOfRange, "target must lie in (0, 1), got " + to_string(y));
  require(tol > 0, "tolerance must be positive");
  require(t_max >= 1, "t_max must be positive");
  const auto cf = known_expansion(x);
  if (!cf || cf->is_finite()) {
    fail(ErrorCode::NotDenseCandidate, "no rule-provable expansion for " + x.describe());
  }
  const auto cls = classify_even_pq(*cf, 2 * t_max + 2);
  if (cls.verdict != EvenPQClassification::Verdict::UnboundedEven) {
    fail(ErrorCode::NotDenseCandidate, std::string("even partial quotients are ") + to_string(cls.verdict));
  }
  Evaluator ev(x, policy);
  const auto convs = convergents(*cf, 2 * t_max + 1);
  const double a = -std::log(y.get_d());
  std::optional<WitnessReport> best;
  for (std::size_t t = 1; t <= t_max; ++t) {
    const Convergent& c = convs[2 * t - 1];
    const Bits bits = 64 + 2 * bit_length(c.q) + 2 * bit_length(c.p);
    const Ball f = (Ball::from_integer(c.p, bits) - ev.enclosure(bits) * c.q) * c.q;
    const Ball root = sqrt(Ball(a, 0.0) / f);
    Integer big_n;
    mpfr_get_z(big_n.get_mpz_t(), root.mid().get(), MPFR_RNDD);
    big_n += 1;
    const Integer n = big_n * c.q;
    WitnessTrace tr;
    tr.method = "frac-construction";
    tr.level = t;
    tr.convergent_p = c.p;
    tr.convergent_q = c.q;
    tr.multiplier = big_n;
    tr.sandwich_lower = a;
    tr.sandwich_value = (f * big_n * big_n).mid_double();
    tr.evaluations = t;
    WitnessReport r = detail::make_report(n, ev.pow_frac(n), y, tol, std::move(tr));
    if (r.certified) return r;
    detail::keep_best(best, r);
  }
  throw SearchExhausted("tolerance not met within t_max = " + std::to_string(t_max), best);
}

struct PairScan {
  std::vector<std::pair<Integer, Integer>> pairs;  ///< (m, n), increasing n
  std::vector<Integer> skipped;                    ///< n whose comparison stayed undecided
};

/// All n <= n_max with |zeta - m/n^2| < n^{-(2+theta)} for m the nearest
/// integer to zeta n^2 (ties up), i.e. |zeta n^2 - m| < n^{-theta}.
inline PairScan zaharescu_pairs(const Enclosure& zeta, const std::optional<Rational>& exact, const Rational& theta,
                                std::uint64_t n_max, const PrecisionPolicy& policy = {}) {
  require(theta > 0 && theta < Rational(2, 3), "theta must lie in (0, 2/3)");
  PairScan out;
  const Integer tn = theta.get_num();
  const Integer td = theta.get_den();
  for (std::uint64_t i = 1; i <= n_max; ++i) {
    const Integer n(static_cast<unsigned long>(i));
    const Integer n2 = n * n;
    if (exact) {
      const Rational z = *exact * Rational(n2);
      const Integer m = nearest_of(z);
      const Rational dist = abs(z - Rational(m));
      // dist^td * n^tn < 1
      Rational lhs = 1;
      for (Integer j = 0; j < td; ++j) lhs *= dist;
      lhs *= Rational(ipow(n, tn.get_ui()));
      if (lhs < 1) out.pairs.emplace_back(m, n);
      continue;
    }
    std::optional<bool> decided;
    Integer m;
    for (Bits w = 64 + 2 * bit_length(n);; w = std::min(policy.cap_bits, 2 * w)) {
      const Ball z = zeta(w) * n2;
      if (auto mm = z.unique_nearest()) {
        m = *mm;
        const Ball dist = abs(z - m);
        const Ball bound = exp(log(Ball::from_integer(n, w)) * Rational(-theta));
        const auto order = compare(dist, bound);
        if (order != CertifiedOrder::Unresolved) {
          decided = order == CertifiedOrder::Less;
          break;
        }
      }
      if (w >= policy.cap_bits) break;
    }
    if (!decided) {
      out.skipped.push_back(n);
    } else if (*decided) {
      out.pairs.emplace_back(std::move(m), n);
    }
  }
  return out;
}

inline PairScan zaharescu_pairs(const RealSource& zeta, const Rational& theta, std::uint64_t n_max,
                                const PrecisionPolicy& policy = {}) {
  return zaharescu_pairs(enclosure_of(zeta, policy), zeta.exact_rational(), theta, n_max, policy);
}

struct SquareBudget {
  std::uint64_t n_max = 1000000;
  std::uint64_t seed_n_max = 2000;
  Rational theta = Rational(1, 2);
  std::uint64_t neighborhood = 1;
};

/// Witness n with |g(cos(n^2 x))|^n within tol of y. Pairs (m, n0) close to
/// x / (2 pi) seed candidates n = N n0 with N^{2d+1} ~ ln y / (q n0 (2 pi D)^d),
/// D = n0^2 x / (2 pi) - m; a direct scan n = 1..n_max follows. With tol = 0
/// no hit is possible, so the whole budget is scanned and SearchExhausted
/// reports the closest value.
inline WitnessReport find_square_witness(const RealSource& x, const GPoly& g, const Rational& y, const Rational& tol,
                                         const SquareBudget& budget = {}, const PrecisionPolicy& policy = {}) {
  if (y <= 0 || y >= 1) fail(ErrorCode::TargetOutOfRange, "target must lie in (0, 1), got " + to_string(y));
  require(tol >= 0, "tolerance must be non-negative");
  if (budget.n_max == 0) throw SearchExhausted("empty search budget", std::nullopt);
  const Enclosure zeta = detail::turns_of(x, policy);
  const detail::TrigPower eval(zeta, g, true, policy);
  const VanishingData vd = vanishing_order(g, Rational(1));
  const double log_y = y < Rational(1, 2) ? std::log(y.get_d()) : std::log1p(Rational(y - 1).get_d());

  std::size_t evaluations = 0;
  std::set<Integer> tried;
  std::optional<WitnessReport> hit;
  std::optional<WitnessReport> best;
  auto consider = [&](const Integer& n, WitnessTrace tr) {
    if (n < 1 || n > budget.n_max || !tried.insert(n).second) return;
    ++evaluations;
    WitnessReport r = detail::make_report(n, eval(n).value, y, tol, std::move(tr));
    if (r.certified && tol > 0) {
      if (!hit || r.n < hit->n) hit = r;
    } else {
      detail::keep_best(best, r);
    }
  };

  const auto seeds = zaharescu_pairs(zeta, std::nullopt, budget.theta, std::min(budget.seed_n_max, budget.n_max), policy);
  const long nb = static_cast<long>(budget.neighborhood);
  for (const auto& [m, n0] : seeds.pairs) {
    const Ball dist = abs(zeta(128 + 4 * bit_length(n0)) * Integer(n0 * n0) - m);
    const double e = 2.0 * M_PI * dist.mid_double();
    if (!(e > 0)) continue;
    const double nstar = std::pow(log_y / (vd.q_coeff.get_d() * n0.get_d() * std::pow(e, vd.d)), 1.0 / (2 * vd.d + 1));
    if (!std::isfinite(nstar) || nstar * n0.get_d() > static_cast<double>(budget.n_max)) continue;
    for (long k = std::max<long>(1, static_cast<long>(std::floor(nstar)) - nb);
         k <= static_cast<long>(std::ceil(nstar)) + nb; ++k) {
      WitnessTrace tr;
      tr.method = "square-seed";
      tr.convergent_p = m;
      tr.convergent_q = n0;
      tr.multiplier = Integer(k);
      consider(Integer(n0 * k), std::move(tr));
    }
  }
  const std::uint64_t scan_end =
      hit && hit->n.fits_ulong_p() ? std::min<std::uint64_t>(budget.n_max, hit->n.get_ui() - 1) : budget.n_max;
  for (std::uint64_t i = 1; i <= scan_end; ++i) {
    WitnessTrace tr;
    tr.method = "square-scan";
    const bool had = hit.has_value();
    consider(Integer(static_cast<unsigned long>(i)), std::move(tr));
    if (!had && hit) break;
    if (had && hit && hit->n == i) break;
  }
  if (hit) {
    hit->trace.evaluations = evaluations;
    return *hit;
  }
  if (best) best->trace.evaluations = evaluations;
  throw SearchExhausted("no certified hit for n <= " + std::to_string(budget.n_max), best);
}

}  // namespace dioph

#endif  // DIOPH_WITNESS_HPP
