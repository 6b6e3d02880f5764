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

// Acceptance run: one PASS/FAIL line per criterion. Tolerances and frozen
// oracle values are pinned below; exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dioph/dioph.hpp"

namespace {

using namespace dioph;

// Frozen values from tests/oracles/scan_cos_probes.py (n <= 10^6).
constexpr long kMinimalCosN[3] = {2, 1, 6};  // y = 0.2, 0.5, 0.8
const char* const kMaxSquareValue = "0.999984059224996";

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

bool determinant_holds(const ContinuedFraction& cf, std::size_t k) {
  const auto c = convergents(cf, k);
  for (std::size_t n = 1; n < c.size(); ++n) {
    const Integer det = c[n].p * c[n - 1].q - c[n - 1].p * c[n].q;
    if (det != ((n % 2 == 1) ? 1 : -1)) return false;
  }
  return true;
}

Outcome exact_cf_algebra() {
  const ContinuedFraction rule = ContinuedFraction::from_rule(AffineRule{1, 1, 0, 1});
  bool ok = determinant_holds(*known_expansion(RealSource::sqrt_of(2)), 500) &&
            determinant_holds(*known_expansion(RealSource::golden_ratio()), 500) && determinant_holds(rule, 500);
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<long long> num(-1000000000000LL, 1000000000000LL);
  std::uniform_int_distribution<long long> den(1, 1000000000000LL);
  int round_trip_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const Rational q = make_rational(Integer(std::to_string(num(rng))), Integer(std::to_string(den(rng))));
    if (evaluate(expand_rational(q)) != q) ++round_trip_failures;
  }
  ok = ok && round_trip_failures == 0;
  return {ok, "determinants over 500 convergents x3, round-trip failures " + std::to_string(round_trip_failures)};
}

Outcome golden_frac_envelope() {
  Evaluator ev(RealSource::golden_ratio());
  double worst = 0;
  long at = 0;
  Float bound(64);
  mpfr_set_str(bound.get(), "0.77881", 10, MPFR_RNDD);
  bool ok = true;
  for (long n = 1; n <= 100000; ++n) {
    const Ball v = ev.pow_frac(Integer(n), 40);
    if (mpfr_cmp(v.upper().get(), bound.get()) >= 0) ok = false;
    if (v.upper_double() > worst) {
      worst = v.upper_double();
      at = n;
    }
  }
  std::ostringstream os;
  os << "max upper " << worst << " at n = " << at << ", e^-1/4 = " << std::exp(-0.25) << ", limit 0.77881";
  return {ok, os.str()};
}

Outcome frac_witnesses() {
  const RealSource x = RealSource::continued_fraction(ContinuedFraction::from_rule(AffineRule{1, 1, 0, 1}));
  std::ostringstream os;
  bool ok = true;
  for (int k : {1, 3, 5, 7, 9}) {
    const Rational y(k, 10);
    try {
      const auto w = find_frac_witness(x, y, Rational(1, 50), 60);
      ok = ok && w.certified;
      os << "y=0." << k << " n=" << w.n << " err=" << w.achieved_error << "; ";
    } catch (const Error& e) {
      ok = false;
      os << "y=0." << k << " " << e.what() << "; ";
    }
  }
  return {ok, os.str()};
}

Outcome quarter_power_pipeline() {
  std::ostringstream os;
  bool ok = true;
  const auto v = verify_quarter_power(RealSource::sqrt_of(2), Rational(1, 2), 8);
  const double bound = v.bound.mid_double();
  ok = v.witness.convergent.q == 408 && v.witness.d_max == 4 && v.witness.N == 1632 && std::abs(bound - 2.255) < 5e-3 &&
       v.count.count_certain >= 4 && v.pass;
  os << "sqrt2: v=408 d_max=" << v.witness.d_max << " N=" << v.witness.N << " bound=" << bound
     << " count=" << v.count.count_certain << "; ";
  const std::pair<RealSource, std::size_t> more[] = {{RealSource::golden_ratio(), 5},
                                                     {RealSource::golden_ratio(), 6},
                                                     {RealSource::euler(), 3},
                                                     {RealSource::euler(), 4}};
  for (const auto& [x, t] : more) {
    const auto w = verify_quarter_power(x, Rational(1, 2), t);
    ok = ok && w.pass;
    os << x.describe() << " t=" << t << " N=" << w.witness.N << " count=" << w.count.count_certain << " bound="
       << w.bound.mid_double() << "; ";
  }
  return {ok, os.str()};
}

Outcome close_implies_large() {
  std::ostringstream os;
  bool ok = true;
  const Rational r(1, 2);
  for (const RealSource& x : {RealSource::sqrt_of(2), RealSource::golden_ratio()}) {
    const auto close = close_rational_count(x, closeness_constant(r), 2000);
    Evaluator ev(x);
    std::size_t violations = 0;
    for (const auto& [n, m] : close.hits) {
      if (compare(ev.cos_pow(n, 64), r) != CertifiedOrder::Greater) ++violations;
    }
    ok = ok && violations == 0 && close.unresolved == 0;
    os << x.describe() << ": " << close.hits.size() << " close n, " << violations << " violations, "
       << close.unresolved << " unresolved; ";
  }
  return {ok, os.str()};
}

Outcome decimal_construction() {
  ScheduleOptions o;
  o.r_prime = Rational(3, 4);
  const auto built = construct_decimal_alpha(Rational(1, 2), FSpec::power(Rational(9, 10)), 3, o);
  const auto checks = check_schedule(built.schedule);
  bool ok = checks.all();
  std::ostringstream os;
  os << "schedule";
  for (const auto& s : built.schedule.steps) os << " (d=" << s.d << ",N=" << s.N << ")";
  os << " invariants " << (checks.all() ? "ok" : "broken");
  for (std::size_t k : {2, 3}) {
    const auto v = verify_decimal_alpha(built.schedule, built.alpha, k);
    ok = ok && v.all_exceed && !v.inconclusive && v.bound_dominates;
    os << "; k=" << k << " multiples=" << v.checked_multiples.size() << " bound=" << v.implied_count_bound
       << " >= N f(N)=" << v.n_f_n.mid_double();
  }
  return {ok, os.str()};
}

Outcome containment() {
  const RealSource xs[] = {RealSource::sqrt_of(2), RealSource::golden_ratio(), RealSource::pi_multiple(Rational(1, 4)),
                           RealSource::euler()};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> pick_n(1, 100000);
  std::uniform_int_distribution<int> pick_x(0, 3);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const Integer n(pick_n(rng));
    const RealSource& x = xs[pick_x(rng)];
    const Bits base = kDefaultTargetBits;
    const Ball c1 = cos_pow(n, x, base);
    const Ball c4 = cos_pow(n, x, 4 * base);
    const Ball f1 = pow_frac(n, x, base);
    const Ball f4 = pow_frac(n, x, 4 * base);
    if (!c1.contains(c4)) ++violations;
    if (!f1.contains(f4)) ++violations;
  }
  return {violations == 0, "2000 enclosures, " + std::to_string(violations) + " violations"};
}

// Independent check of |zeta n^2 - m| < n^{-1/2} with raw MPFR at 4096 bits.
std::vector<std::pair<Integer, Integer>> brute_pairs(const std::function<void(mpfr_t)>& zeta, long n_max) {
  constexpr mpfr_prec_t prec = 4096;
  mpfr_t z, t, d;
  mpfr_inits2(prec, z, t, d, static_cast<mpfr_ptr>(nullptr));
  zeta(z);
  std::vector<std::pair<Integer, Integer>> out;
  mpz_t m;
  mpz_init(m);
  for (long n = 1; n <= n_max; ++n) {
    mpfr_mul_ui(t, z, static_cast<unsigned long>(n * n), MPFR_RNDN);
    mpfr_get_z(m, t, MPFR_RNDN);
    mpfr_sub_z(d, t, m, MPFR_RNDN);
    mpfr_sqr(d, d, MPFR_RNDN);
    mpfr_mul_ui(d, d, static_cast<unsigned long>(n), MPFR_RNDN);
    if (mpfr_cmp_ui(d, 1) < 0) out.emplace_back(Integer(m), Integer(n));
  }
  mpz_clear(m);
  mpfr_clears(z, t, d, static_cast<mpfr_ptr>(nullptr));
  return out;
}

Outcome zpair_equivalence() {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> small(1, 9);
  std::uniform_int_distribution<long> radicand(2, 60);
  int mismatches = 0;
  int cases = 0;
  for (int i = 0; i < 20; ++i) {
    RealSource zeta = RealSource::rational(0);
    std::function<void(mpfr_t)> fill;
    if (i % 2 == 0) {
      long d = radicand(rng);
      while (isqrt(Integer(d)) * isqrt(Integer(d)) == d) ++d;
      const long p = small(rng) - 5, q = small(rng), r = small(rng);
      zeta = RealSource::surd(p, q, d, r);
      fill = [=](mpfr_t z) {
        mpfr_sqrt_ui(z, static_cast<unsigned long>(d), MPFR_RNDN);
        mpfr_mul_si(z, z, q, MPFR_RNDN);
        mpfr_add_si(z, z, p, MPFR_RNDN);
        mpfr_div_si(z, z, r, MPFR_RNDN);
      };
    } else {
      const long s = small(rng), t = small(rng);
      zeta = RealSource::pi_multiple(Rational(s, t));
      fill = [=](mpfr_t z) {
        mpfr_const_pi(z, MPFR_RNDN);
        mpfr_mul_si(z, z, s, MPFR_RNDN);
        mpfr_div_si(z, z, t, MPFR_RNDN);
      };
    }
    const auto scan = zaharescu_pairs(zeta, Rational(1, 2), 200);
    ++cases;
    if (!scan.skipped.empty() || scan.pairs != brute_pairs(fill, 200)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(cases) + " zeta values, " + std::to_string(mismatches) + " mismatches"};
}

Outcome cos_witnesses() {
  std::ostringstream os;
  bool ok = true;
  const Rational ys[3] = {Rational(1, 5), Rational(1, 2), Rational(4, 5)};
  for (int i = 0; i < 3; ++i) {
    try {
      const auto w = find_cos_witness(RealSource::rational(1), GPoly::identity(), ys[i], Rational(1, 20));
      ok = ok && w.certified;
      os << "y=" << ys[i].get_d() << " n=" << w.n << " (oracle minimal " << kMinimalCosN[i] << ") value "
         << w.value.mid_double() << "; ";
    } catch (const Error& e) {
      ok = false;
      os << e.what() << "; ";
    }
  }
  return {ok, os.str()};
}

Outcome square_probe() {
  const Rational y = parse_rational(kMaxSquareValue);
  try {
    const auto w = find_square_witness(RealSource::rational(1), GPoly::identity(), y, Rational(1, 20));
    std::ostringstream os;
    os << "target " << kMaxSquareValue << ", n=" << w.n << " value " << w.value.mid_double() << " via "
       << w.trace.method;
    return {w.certified, os.str()};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact continued-fraction algebra", 10, exact_cf_algebra},
      {2, "golden ratio {n x}^n envelope", 120, golden_frac_envelope},
      {3, "frac witnesses for unbounded even quotients", 60, frac_witnesses},
      {4, "quarter-power counting pipeline", 180, quarter_power_pipeline},
      {5, "close rationals imply large cosine powers", 60, close_implies_large},
      {6, "sparse decimal construction and verification", 300, decimal_construction},
      {7, "ball containment under 4x precision", 120, containment},
      {8, "square-approximation pairs vs brute force", 60, zpair_equivalence},
      {9, "cosine witnesses, oracle-frozen", 300, cos_witnesses},
      {10, "square cosine probe, oracle-frozen", 300, square_probe},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.limit_seconds;
    if (!pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.2fs, limit %.0fs]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
