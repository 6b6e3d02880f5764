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

#include <gtest/gtest.h>

#include "dioph/dioph.hpp"

namespace dioph {
namespace {

DecimalConstruction build(const FSpec& f, bool literal = false, const Rational& r = Rational(1, 2)) {
  ScheduleOptions o;
  o.r_prime = Rational(3, 4);
  o.literal_least = literal;
  return construct_decimal_alpha(r, f, 3, o);
}

TEST(FSpec, DecayPredicatesAreExact) {
  const FSpec f = FSpec::power(Rational(9, 10));
  // 100^{-0.9} = 10^{-1.8} <= 10^{-1}, but not <= 10^{-2}.
  EXPECT_TRUE(decays_below(f, Integer(100), 1));
  EXPECT_FALSE(decays_below(f, Integer(100), 2));
  EXPECT_TRUE(below_one(f, Integer(2)));
  EXPECT_FALSE(below_one(f, Integer(1)));
  EXPECT_TRUE(scaled_at_most(FSpec::power(Rational(1)), Integer(50), Integer(1)));
  EXPECT_THROW(FSpec::power(Rational(0)), Error);
}

TEST(Schedule, DefaultRuleReference) {
  const auto c = build(FSpec::power(Rational(9, 10)));
  ASSERT_EQ(c.schedule.steps.size(), 3u);
  EXPECT_EQ(c.schedule.steps[0].d, 2u);
  EXPECT_EQ(c.schedule.steps[0].N, 2);
  EXPECT_EQ(c.schedule.steps[1].d, 5u);
  EXPECT_EQ(c.schedule.steps[1].N, 200);
  EXPECT_EQ(c.schedule.steps[2].d, 10u);
  EXPECT_EQ(c.schedule.steps[2].N, 400000);
  EXPECT_EQ(c.alpha.describe(), "decseq-rule:doubling-after(2,5,10)");
}

TEST(Schedule, InvariantsHoldForSeveralDecayRates) {
  for (const auto& f : {FSpec::power(Rational(9, 10)), FSpec::power(Rational(2)), FSpec::power(Rational(3, 2)),
                        FSpec::exp_inverse(Rational(1))}) {
    const auto c = build(f);
    const auto checks = check_schedule(c.schedule);
    EXPECT_TRUE(checks.all()) << f.to_string();
    for (std::size_t i = 1; i < c.schedule.steps.size(); ++i) {
      EXPECT_GT(c.schedule.steps[i].N, c.schedule.steps[i - 1].N);
      EXPECT_GE(c.schedule.steps[i].d, 2 * c.schedule.steps[i - 1].d);
    }
  }
}

TEST(Schedule, TightThresholdNeedsMoreDigits) {
  const auto loose = build(FSpec::power(Rational(9, 10)), false, Rational(1, 2));
  ScheduleOptions o;
  const auto tight = construct_decimal_alpha(Rational(999, 1000), FSpec::power(Rational(9, 10)), 3, o);
  EXPECT_TRUE(check_schedule(tight.schedule).all());
  EXPECT_GE(tight.schedule.steps[0].d, loose.schedule.steps[0].d);
}

TEST(Schedule, SlowDecayIsInfeasibleUnderTheCap) {
  EXPECT_THROW(build(FSpec::power(Rational(1, 2))), Error);
  try {
    construct_decimal_alpha(Rational(1, 2), FSpec::log_inverse(), 3, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleSchedule);
  }
}

TEST(Schedule, RejectsBadMargins) {
  ScheduleOptions o;
  o.r_prime = Rational(1, 4);
  EXPECT_THROW(construct_decimal_alpha(Rational(1, 2), FSpec::power(Rational(1)), 3, o), Error);
  EXPECT_THROW(construct_decimal_alpha(Rational(3, 2), FSpec::power(Rational(1)), 3, {}), Error);
}

TEST(Verify, DefaultRuleCertifiesEveryLevel) {
  const auto c = build(FSpec::power(Rational(9, 10)));
  for (std::size_t k : {2u, 3u}) {
    const auto v = verify_decimal_alpha(c.schedule, c.alpha, k);
    EXPECT_TRUE(v.all_exceed) << k;
    EXPECT_FALSE(v.inconclusive) << k;
    EXPECT_TRUE(v.bound_dominates) << k;
    EXPECT_EQ(v.checked_multiples.size(), v.implied_count_bound.get_ui());
    for (const auto& m : v.checked_multiples) EXPECT_EQ(m.order, CertifiedOrder::Greater);
  }
  EXPECT_THROW(verify_decimal_alpha(c.schedule, c.alpha, 1), Error);
}

TEST(Verify, LiteralLeastRuleLosesTheCountBound) {
  // The least N with f(N) <= 10^-d can give floor(N / 10^d) below N f(N).
  const auto c = build(FSpec::power(Rational(9, 10)), true);
  EXPECT_TRUE(check_schedule(c.schedule).all());
  const auto v = verify_decimal_alpha(c.schedule, c.alpha, 3);
  EXPECT_TRUE(v.all_exceed);
  EXPECT_FALSE(v.bound_dominates);
}

TEST(Verify, FullCountCoversTheMultiples) {
  const auto c = build(FSpec::power(Rational(2)));
  const auto v = verify_decimal_alpha(c.schedule, c.alpha, 2, true);
  ASSERT_TRUE(v.full_count.has_value());
  EXPECT_GE(v.full_count->count_certain, v.implied_count_bound.get_ui());
}

}  // namespace
}  // namespace dioph
