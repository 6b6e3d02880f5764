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

#ifndef DIOPH_GPOLY_HPP
#define DIOPH_GPOLY_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "dioph/ball.hpp"
#include "dioph/error.hpp"
#include "dioph/numeric.hpp"
#include "dioph/polynomial.hpp"

namespace dioph {

/// Polynomial g with g(1) = 1 and |g| <= 1 on [-1, 1], the outer function
/// of the sequences |g(cos(n x))|^n.
class GPoly {
 public:
  /// Validates and certifies. InvalidG if g(1) != 1, if g is the constant 1,
  /// or if the exact sign proof of 1 - g >= 0 and 1 + g >= 0 on [-1, 1] fails.
  static GPoly make(std::vector<Rational> coefficients) {
    RationalPolynomial p(std::move(coefficients));
    if (p(Rational(1)) != 1) fail(ErrorCode::InvalidG, "g(1) must equal 1, got " + dioph::to_string(p(Rational(1))));
    if (p == RationalPolynomial::constant(1)) fail(ErrorCode::InvalidG, "g must not be identically 1");
    const RationalPolynomial one = RationalPolynomial::constant(1);
    if (!nonnegative_on(one - p, Rational(-1), Rational(1)) || !nonnegative_on(one + p, Rational(-1), Rational(1))) {
      fail(ErrorCode::InvalidG, "|g| exceeds 1 somewhere on [-1, 1]");
    }
    return GPoly(std::move(p));
  }

  /// g(y) = y.
  static GPoly identity() { return make({Rational(0), Rational(1)}); }

  const RationalPolynomial& polynomial() const noexcept { return p_; }
  long degree() const noexcept { return p_.degree(); }

  Ball operator()(const Ball& y) const { return horner(p_.coefficients(), y); }

  /// "poly:[c0,c1,...]".
  std::string to_string() const { return "poly:" + p_.to_string(); }

 private:
  explicit GPoly(RationalPolynomial p) : p_(std::move(p)) {}
  RationalPolynomial p_;
};

/// Local shape of f(x) = |g(cos(s x))| at 0: f(x) - 1 ~ q x^d.
struct VanishingData {
  int d = 2;
  Rational q_coeff;
  Rational alpha_scale = 1;

  /// T = 2 pi / s.
  double period() const { return 2.0 * M_PI / alpha_scale.get_d(); }
};

/// Taylor expansion of g(cos(s x)) by exact composition with the cosine
/// series in u = x^2, truncated after `order_cap` terms (default 2 deg g + 8).
inline VanishingData vanishing_order(const GPoly& g, const Rational& alpha_scale, std::size_t order_cap = 0) {
  require(alpha_scale > 0, "alpha_scale must be positive");
  const std::size_t terms = order_cap ? order_cap : static_cast<std::size_t>(2 * g.degree() + 8);
  // cos(s x) = sum_k (-1)^k s^{2k} u^k / (2k)!
  std::vector<Rational> cosine(terms);
  Rational term = 1;
  const Rational s2 = alpha_scale * alpha_scale;
  for (std::size_t k = 0; k < terms; ++k) {
    cosine[k] = term;
    term *= -s2 / Rational(static_cast<unsigned long>((2 * k + 1) * (2 * k + 2)));
  }
  auto times = [terms](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(terms, Rational(0));
    for (std::size_t i = 0; i < terms; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < terms; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
  };
  // Horner in the series ring.
  const auto& c = g.polynomial().coefficients();
  std::vector<Rational> h(terms, Rational(0));
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    h = times(h, cosine);
    h[0] += *it;
  }
  h[0] -= 1;
  for (std::size_t k = 1; k < terms; ++k) {
    if (h[k] == 0) continue;
    // |h| = h near 0 because h(0) = g(1) = 1.
    VanishingData v;
    v.d = static_cast<int>(2 * k);
    v.q_coeff = h[k];
    v.alpha_scale = alpha_scale;
    if (v.q_coeff >= 0) fail(ErrorCode::InvalidG, "g(cos x) exceeds 1 near 0");
    return v;
  }
  fail(ErrorCode::DegenerateG, "1 - g(cos x) vanishes to all " + std::to_string(terms) + " computed orders");
}

/// c > 0 with exp(q (T c)^d) = y, i.e. c = (ln y / q)^{1/d} / T.
inline double target_to_rate(const Rational& y, const VanishingData& v) {
  if (y <= 0 || y >= 1) fail(ErrorCode::TargetOutOfRange, "target must lie in (0, 1), got " + to_string(y));
  const double log_y = y < Rational(1, 2) ? std::log(y.get_d()) : std::log1p(Rational(y - 1).get_d());
  const double ratio = log_y / v.q_coeff.get_d();
  return std::pow(ratio, 1.0 / v.d) / v.period();
}

}  // namespace dioph

#endif  // DIOPH_GPOLY_HPP
