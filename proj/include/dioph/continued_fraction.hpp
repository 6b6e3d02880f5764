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

#ifndef DIOPH_CONTINUED_FRACTION_HPP
#define DIOPH_CONTINUED_FRACTION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/numeric.hpp"

namespace dioph {

/// a_0, then a preperiod, then a period repeated forever.
struct PeriodicRule {
  Integer a0;
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
};

/// a_{2i} = even_slope * i + even_offset and a_{2i+1} = odd_slope * i + odd_offset
/// for all i >= 0 (so a_0 = even_offset).
struct AffineRule {
  std::int64_t even_slope = 0;
  std::int64_t even_offset = 1;
  std::int64_t odd_slope = 0;
  std::int64_t odd_offset = 1;
};

/// e = [2; 1, 2, 1, 1, 4, 1, 1, 6, ...].
struct EulerRule {};

using QuotientRule = std::variant<PeriodicRule, AffineRule, EulerRule>;

inline Integer rule_quotient(const QuotientRule& rule, std::size_t i) {
  return std::visit(
      [i](const auto& r) -> Integer {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, PeriodicRule>) {
          if (i == 0) return r.a0;
          if (i - 1 < r.preperiod.size()) return r.preperiod[i - 1];
          return r.period[(i - 1 - r.preperiod.size()) % r.period.size()];
        } else if constexpr (std::is_same_v<R, AffineRule>) {
          const auto k = static_cast<long>(i / 2);
          Integer slope = (i % 2 == 0) ? r.even_slope : r.odd_slope;
          Integer offset = (i % 2 == 0) ? r.even_offset : r.odd_offset;
          return slope * k + offset;
        } else {
          if (i == 0) return 2;
          if (i % 3 == 2) return Integer(2 * ((i + 1) / 3));
          return 1;
        }
      },
      rule);
}

inline std::string rule_name(const QuotientRule& rule) {
  return std::visit(
      [](const auto& r) -> std::string {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, PeriodicRule>) {
          std::ostringstream os;
          os << "periodic(" << r.a0.get_str();
          for (const auto& q : r.preperiod) os << "," << q.get_str();
          os << "|";
          for (std::size_t j = 0; j < r.period.size(); ++j) os << (j ? "," : "") << r.period[j].get_str();
          os << ")";
          return os.str();
        } else if constexpr (std::is_same_v<R, AffineRule>) {
          std::ostringstream os;
          os << "affine(" << r.even_slope << "," << r.even_offset << "," << r.odd_slope << "," << r.odd_offset << ")";
          return os.str();
        } else {
          return "e";
        }
      },
      rule);
}

/// Simple continued fraction [a_0; a_1, a_2, ...].
///
/// Exact    finite expansion of a rational, canonical (last quotient >= 2).
/// Prefix   the first quotients of a longer (typically infinite) expansion.
/// Rule     an infinite expansion given by a total quotient rule.
class ContinuedFraction {
 public:
  enum class Kind { Exact, Prefix, Rule };

  static ContinuedFraction exact(std::vector<Integer> terms) {
    validate_terms(terms);
    require(terms.size() < 2 || terms.back() >= 2, "exact continued fraction must end in a quotient >= 2");
    return ContinuedFraction(Kind::Exact, std::move(terms), std::nullopt);
  }

  /// Rewrites a trailing 1 into the canonical form before building.
  static ContinuedFraction exact_normalized(std::vector<Integer> terms) {
    validate_terms(terms);
    if (terms.size() >= 2 && terms.back() == 1) {
      terms.pop_back();
      terms.back() += 1;
    }
    return exact(std::move(terms));
  }

  static ContinuedFraction prefix(std::vector<Integer> terms) {
    validate_terms(terms);
    return ContinuedFraction(Kind::Prefix, std::move(terms), std::nullopt);
  }

  static ContinuedFraction from_rule(QuotientRule rule) {
    if (const auto* p = std::get_if<PeriodicRule>(&rule)) {
      require(!p->period.empty(), "periodic rule needs a non-empty period");
      for (const auto& q : p->preperiod) require(q >= 1, "partial quotients must be >= 1");
      for (const auto& q : p->period) require(q >= 1, "partial quotients must be >= 1");
    } else if (const auto* a = std::get_if<AffineRule>(&rule)) {
      require(a->even_slope >= 0 && a->odd_slope >= 0, "affine rule slopes must be non-negative");
      require(a->odd_offset >= 1 && a->even_slope + a->even_offset >= 1, "affine rule must give quotients >= 1");
    }
    return ContinuedFraction(Kind::Rule, {}, std::move(rule));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ != Kind::Rule; }

  /// Number of stored terms including a_0 (finite kinds only).
  std::size_t size() const noexcept { return terms_.size(); }

  const QuotientRule* rule() const noexcept { return rule_ ? &*rule_ : nullptr; }
  const std::vector<Integer>& terms() const noexcept { return terms_; }

  Integer quotient(std::size_t i) const {
    if (rule_) return rule_quotient(*rule_, i);
    if (i >= terms_.size()) {
      fail(ErrorCode::DepthExceeded, "quotient index " + std::to_string(i) + " beyond expansion of length " +
                                         std::to_string(terms_.size()));
    }
    return terms_[i];
  }

  /// "[a0; a1, a2, ...]"; rule expansions show their first `shown` terms.
  std::string to_string(std::size_t shown = 12) const {
    std::ostringstream os;
    const std::size_t n = is_finite() ? terms_.size() : shown;
    os << "[" << quotient(0).get_str();
    for (std::size_t i = 1; i < n; ++i) os << (i == 1 ? "; " : ", ") << quotient(i).get_str();
    if (!is_finite() || kind_ == Kind::Prefix) os << (n > 1 ? ", ..." : "; ...");
    os << "]";
    return os.str();
  }

 private:
  ContinuedFraction(Kind kind, std::vector<Integer> terms, std::optional<QuotientRule> rule)
      : kind_(kind), terms_(std::move(terms)), rule_(std::move(rule)) {}

  static void validate_terms(const std::vector<Integer>& terms) {
    require(!terms.empty(), "continued fraction needs a_0");
    for (std::size_t i = 1; i < terms.size(); ++i) require(terms[i] >= 1, "partial quotients must be >= 1");
  }

  Kind kind_;
  std::vector<Integer> terms_;
  std::optional<QuotientRule> rule_;
};

enum class Side { Below, Above };

inline const char* to_string(Side s) { return s == Side::Above ? "above" : "below"; }

struct Convergent {
  std::size_t index = 0;
  Integer p;
  Integer q;
  /// Position relative to the expanded real: above exactly for odd indices.
  Side side = Side::Below;

  Rational value() const { return make_rational(p, q); }
};

/// Convergents 0..k-1 by p_n = a_n p_{n-1} + p_{n-2}, q_n = a_n q_{n-1} + q_{n-2}.
inline std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t k) {
  require(k >= 1, "need at least one convergent");
  if (cf.is_finite() && k > cf.size()) {
    fail(ErrorCode::DepthExceeded, "requested " + std::to_string(k) + " convergents from an expansion with " +
                                       std::to_string(cf.size()) + " terms");
  }
  std::vector<Convergent> out;
  out.reserve(k);
  Integer p_prev = 1;
  Integer q_prev = 0;
  Integer p = cf.quotient(0);
  Integer q = 1;
  out.push_back({0, p, q, Side::Below});
  for (std::size_t n = 1; n < k; ++n) {
    const Integer a = cf.quotient(n);
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.push_back({n, p, q, n % 2 == 1 ? Side::Above : Side::Below});
  }
  return out;
}

/// Value of a finite expansion.
inline Rational evaluate(const ContinuedFraction& cf) {
  require(cf.is_finite(), "cannot evaluate an infinite expansion exactly");
  const auto c = convergents(cf, cf.size());
  return c.back().value();
}

/// Euclid's algorithm; the result is canonical.
inline ContinuedFraction expand_rational(const Rational& x) {
  std::vector<Integer> terms;
  Integer num = x.get_num();
  Integer den = x.get_den();
  while (true) {
    Integer a;
    Integer r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    terms.push_back(a);
    if (r == 0) break;
    num = std::move(den);
    den = std::move(r);
  }
  return ContinuedFraction::exact(std::move(terms));
}

// ---------------------------------------------------------------------------
// Even-index partial quotient classification.

struct EvenPQClassification {
  enum class Verdict { BoundedEven, UnboundedEven, UnknownAtDepth };
  Verdict verdict = Verdict::UnknownAtDepth;
  /// Least M with a_i < M for every even i >= 2; set for BoundedEven only.
  std::optional<Integer> bound;
  /// Maxima over the scanned indices 1..depth (even ones start at 2); zero if none.
  Integer observed_even_max = 0;
  Integer observed_odd_max = 0;
  std::size_t depth = 0;
};

inline const char* to_string(EvenPQClassification::Verdict v) {
  switch (v) {
    case EvenPQClassification::Verdict::BoundedEven: return "BoundedEven";
    case EvenPQClassification::Verdict::UnboundedEven: return "UnboundedEven";
    case EvenPQClassification::Verdict::UnknownAtDepth: return "UnknownAtDepth";
  }
  return "UnknownAtDepth";
}

inline EvenPQClassification classify_even_pq(const ContinuedFraction& cf, std::size_t depth) {
  require(depth >= 1, "depth must be positive");
  using Verdict = EvenPQClassification::Verdict;
  EvenPQClassification out;
  out.depth = depth;
  const std::size_t scan = cf.is_finite() ? std::min(depth, cf.size() - 1) : depth;
  for (std::size_t i = 1; i <= scan; ++i) {
    const Integer a = cf.quotient(i);
    Integer& slot = (i % 2 == 0) ? out.observed_even_max : out.observed_odd_max;
    if (a > slot) slot = a;
  }
  const QuotientRule* rule = cf.rule();
  if (rule == nullptr) {
    out.verdict = Verdict::UnknownAtDepth;
    return out;
  }
  if (const auto* p = std::get_if<PeriodicRule>(rule)) {
    // Every (position, parity) combination appears within this window.
    const std::size_t window = p->preperiod.size() + 2 * p->period.size() + 2;
    Integer even_max = 0;
    for (std::size_t i = 2; i <= window; i += 2) even_max = std::max(even_max, rule_quotient(*rule, i));
    out.verdict = Verdict::BoundedEven;
    out.bound = even_max + 1;
  } else if (const auto* a = std::get_if<AffineRule>(rule)) {
    if (a->even_slope > 0) {
      out.verdict = Verdict::UnboundedEven;
    } else {
      out.verdict = Verdict::BoundedEven;
      out.bound = Integer(a->even_offset) + 1;
    }
  } else {
    // e: a_{3k-1} = 2k, and 3k-1 is even for every odd k.
    out.verdict = Verdict::UnboundedEven;
  }
  return out;
}

/// c = min(1/2, 1/(2(M+1))): how far rationals exceeding alpha stay, at scale
/// 1/b^2, when every even-index quotient is below M.
inline Rational badly_approx_constant(const Integer& m) {
  require(m >= 1, "M must be a positive integer");
  const Rational c(Integer(1), 2 * (m + 1));
  return std::min(Rational(1, 2), c);
}

}  // namespace dioph

#endif  // DIOPH_CONTINUED_FRACTION_HPP
