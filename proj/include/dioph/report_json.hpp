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

#ifndef DIOPH_REPORT_JSON_HPP
#define DIOPH_REPORT_JSON_HPP

// JSON serialisation of reports. Needs nlohmann/json (vendor/json.hpp).

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dioph/ball.hpp"
#include "dioph/continued_fraction.hpp"
#include "dioph/counting.hpp"
#include "dioph/numeric.hpp"
#include "dioph/schedule.hpp"
#include "dioph/witness.hpp"

namespace dioph::json {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits stay numbers; larger ones become strings.
inline Json integer(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

/// Nearest double (mpq get_d truncates).
inline Json rational(const Rational& q) {
  Float f(53);
  mpfr_set_q(f.get(), q.get_mpq_t(), MPFR_RNDN);
  return Json(f.to_double());
}

inline Json ball(const Ball& b) {
  Json j;
  j["mid"] = b.mid_double();
  j["rad"] = b.rad_double();
  j["digits"] = b.to_string(20);
  return j;
}

inline Json convergent(const Convergent& c) {
  Json j;
  j["index"] = c.index;
  j["p"] = integer(c.p);
  j["q"] = integer(c.q);
  j["side"] = to_string(c.side);
  return j;
}

inline Json cf(const ContinuedFraction& c, std::size_t shown) {
  Json j;
  j["kind"] = c.kind() == ContinuedFraction::Kind::Exact ? "exact" : c.kind() == ContinuedFraction::Kind::Prefix ? "prefix" : "rule";
  j["text"] = c.to_string(shown);
  Json terms = Json::array();
  const std::size_t n = c.is_finite() ? c.size() : shown;
  for (std::size_t i = 0; i < n; ++i) terms.push_back(integer(c.quotient(i)));
  j["a"] = std::move(terms);
  return j;
}

inline Json classification(const EvenPQClassification& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  if (c.bound) j["M"] = integer(*c.bound);
  j["observed_even_max"] = integer(c.observed_even_max);
  j["observed_odd_max"] = integer(c.observed_odd_max);
  j["depth"] = c.depth;
  return j;
}

inline Json trace(const WitnessTrace& t) {
  Json j;
  j["method"] = t.method;
  if (t.level) j["level"] = *t.level;
  if (t.convergent_p) j["convergent_p"] = integer(*t.convergent_p);
  if (t.convergent_q) j["convergent_q"] = integer(*t.convergent_q);
  if (t.multiplier) j["multiplier"] = integer(*t.multiplier);
  if (t.offset != 0) j["offset"] = t.offset;
  if (t.rate) j["rate"] = *t.rate;
  if (t.nearest_m) j["m"] = integer(*t.nearest_m);
  if (t.congruence) {
    j["n_mod4"] = t.congruence->n_mod4;
    if (t.congruence->m_mod2) j["m_mod2"] = *t.congruence->m_mod2;
  }
  if (t.sandwich_lower) j["sandwich_lower"] = *t.sandwich_lower;
  if (t.sandwich_value) j["sandwich_value"] = *t.sandwich_value;
  j["evaluations"] = t.evaluations;
  return j;
}

inline Json witness(const WitnessReport& r) {
  Json j;
  j["n"] = integer(r.n);
  j["value"] = ball(r.value);
  j["target"] = rational(r.target);
  j["tol"] = rational(r.tol);
  j["achieved_error"] = r.achieved_error;
  j["certified"] = r.certified;
  j["trace"] = trace(r.trace);
  return j;
}

inline Json count(const CountReport& c, bool timing) {
  Json j;
  j["N"] = c.N;
  j["r"] = rational(c.r);
  j["count_certain"] = c.count_certain;
  j["count_unresolved"] = c.count_unresolved;
  if (timing) j["elapsed_hint"] = c.elapsed_seconds;
  return j;
}

inline Json schedule(const DecimalSchedule& s) {
  Json j;
  j["r"] = rational(s.r);
  j["r_prime"] = rational(s.r_prime);
  j["f"] = s.f.to_string();
  j["literal_least"] = s.literal_least;
  Json steps = Json::array();
  for (const auto& st : s.steps) steps.push_back(Json{{"d", st.d}, {"N", integer(st.N)}});
  j["steps"] = std::move(steps);
  return j;
}

inline Json checks(const ScheduleChecks& c) {
  return Json{{"first_below_one", c.first_below_one},
              {"decay", c.decay},
              {"doubling", c.doubling},
              {"precision", c.precision},
              {"all", c.all()}};
}

inline Json decimal_verification(const DecimalVerification& v, bool timing) {
  Json j;
  j["k"] = v.k;
  j["step"] = integer(v.step);
  Json rows = Json::array();
  for (const auto& m : v.checked_multiples) {
    rows.push_back(Json{{"m", integer(m.m)}, {"n", integer(m.n)}, {"value", ball(m.value)}, {"order", to_string(m.order)}});
  }
  j["checked_multiples"] = std::move(rows);
  j["all_exceed"] = v.all_exceed;
  j["inconclusive"] = v.inconclusive;
  j["implied_count_bound"] = integer(v.implied_count_bound);
  j["N_f_N"] = ball(v.n_f_n);
  j["bound_dominates"] = v.bound_dominates;
  if (v.full_count) j["full_count"] = count(*v.full_count, timing);
  return j;
}

inline Json quarter_power(const QuarterPowerVerification& v, bool timing) {
  Json j;
  j["t"] = v.witness.t;
  j["v_t"] = integer(v.witness.convergent.q);
  j["u_t"] = integer(v.witness.convergent.p);
  j["d_max"] = integer(v.witness.d_max);
  j["scale"] = ball(v.witness.scale);
  j["N"] = integer(v.witness.N);
  j["r"] = rational(v.count.r);
  j["count_certain"] = v.count.count_certain;
  j["count_unresolved"] = v.count.count_unresolved;
  if (timing) j["elapsed_hint"] = v.count.elapsed_seconds;
  j["bound"] = v.bound.mid_double();
  j["bound_upper"] = v.bound.upper_double();
  j["pass"] = v.pass;
  j["multiples_certified"] = v.witness.multiples_certified;
  j["implication_holds"] = v.implication_holds;
  return j;
}

}  // namespace dioph::json

#endif  // DIOPH_REPORT_JSON_HPP
