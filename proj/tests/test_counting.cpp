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

#include <cmath>

#include "dioph/dioph.hpp"

namespace dioph {
namespace {

TEST(Count, MatchesDoubleScanAwayFromBorderline) {
  const RealSource x = RealSource::sqrt_of(2);
  const auto c = count_exceed(x, Rational(1, 2), 5000);
  std::uint64_t expected = 0;
  for (int n = 1; n <= 5000; ++n) {
    if (std::pow(std::abs(std::cos(n * M_PI * std::sqrt(2.0))), n) > 0.5) ++expected;
  }
  EXPECT_EQ(c.count_unresolved, 0u);
  EXPECT_EQ(c.count_certain, expected);
}

TEST(Count, ParallelEqualsSequential) {
  CountOptions one;
  one.threads = 1;
  CountOptions four;
  four.threads = 4;
  for (const auto& x : {RealSource::golden_ratio(), RealSource::euler()}) {
    const auto a = count_exceed(x, Rational(3, 10), 20000, one);
    const auto b = count_exceed(x, Rational(3, 10), 20000, four);
    EXPECT_EQ(a.count_certain, b.count_certain);
    EXPECT_EQ(a.count_unresolved, b.count_unresolved);
  }
}

TEST(Count, MonotoneInN) {
  std::uint64_t last = 0;
  for (std::uint64_t n : {100u, 1000u, 5000u}) {
    const auto c = count_exceed(RealSource::golden_ratio(), Rational(1, 2), n);
    EXPECT_GE(c.count_certain, last);
    last = c.count_certain;
  }
}

TEST(Count, RationalAlphaCountsMultiplesExactly) {
  // x = 1: |cos(n pi)|^n = 1 > r for every n.
  EXPECT_EQ(count_exceed(RealSource::rational(1), Rational(1, 2), 300).count_certain, 300u);
  // x = 1/2: odd n give 0.
  EXPECT_EQ(count_exceed(RealSource::rational(Rational(1, 2)), Rational(1, 2), 300).count_certain, 150u);
}

TEST(Count, RejectsBadThreshold) {
  EXPECT_THROW(count_exceed(RealSource::golden_ratio(), Rational(1), 10), Error);
  EXPECT_THROW(count_exceed(RealSource::golden_ratio(), Rational(0), 10), Error);
}

TEST(Bound, QuarterPowerValue) {
  const Ball b = quarter_power_bound(Rational(1, 2), Integer(10000));
  EXPECT_NEAR(b.mid_double(), 3.5471542, 1e-6);
  EXPECT_TRUE(b.radius_within(-60));
  EXPECT_LT(quarter_power_bound(Rational(1, 2), Integer(100)).mid_double(), b.mid_double());
  EXPECT_GT(quarter_power_bound(Rational(1, 10), Integer(10000)).mid_double(), b.mid_double());
}

TEST(CloseRationals, ImplyLargeCosinePowers) {
  const Rational r(1, 2);
  for (const auto& x : {RealSource::sqrt_of(2), RealSource::golden_ratio(), RealSource::sqrt_of(7)}) {
    const auto close = close_rational_count(x, closeness_constant(r), 2000);
    EXPECT_EQ(close.unresolved, 0u);
    EXPECT_FALSE(close.hits.empty());
    Evaluator ev(x);
    for (const auto& [n, m] : close.hits) {
      EXPECT_EQ(compare(ev.cos_pow(n, 64), r), CertifiedOrder::Greater) << x.describe() << " n=" << n;
    }
  }
}

TEST(HurwitzConvergent, DistinctDenominators) {
  EXPECT_EQ(hurwitz_convergent(RealSource::sqrt_of(2), 8).q, 408);
  EXPECT_EQ(hurwitz_convergent(RealSource::euler(), 4).q, 1001);
  EXPECT_LT(hurwitz_convergent(RealSource::golden_ratio(), 4).q, hurwitz_convergent(RealSource::golden_ratio(), 5).q);
}

TEST(QuarterPower, SqrtTwoAtFourHundredEight) {
  const auto v = verify_quarter_power(RealSource::sqrt_of(2), Rational(1, 2), 8);
  EXPECT_EQ(v.witness.convergent.q, 408);
  EXPECT_EQ(v.witness.d_max, 4);
  EXPECT_EQ(v.witness.N, 1632);
  EXPECT_NEAR(v.bound.mid_double(), 2.2546, 1e-3);
  EXPECT_GE(v.count.count_certain, 4u);
  EXPECT_TRUE(v.pass);
  EXPECT_TRUE(v.implication_holds);
  EXPECT_EQ(v.multiples.size(), 4u);
}

TEST(QuarterPower, EarlyLevelIsTooSmall) {
  try {
    verify_quarter_power(RealSource::sqrt_of(2), Rational(1, 2), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooSmall);
  }
  EXPECT_THROW(verify_quarter_power(RealSource::rational(Rational(1, 3)), Rational(1, 2), 3), Error);
}

}  // namespace
}  // namespace dioph
