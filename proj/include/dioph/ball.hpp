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

#ifndef DIOPH_BALL_HPP
#define DIOPH_BALL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "dioph/error.hpp"
#include "dioph/numeric.hpp"

namespace dioph {

using Bits = std::uint32_t;

/// Precision of every radius. Radii are upper bounds, so a short mantissa
/// rounded upward is all they need.
inline constexpr Bits kRadiusBits = 64;

/// Owning RAII handle around an mpfr_t.
class Float {
 public:
  explicit Float(Bits precision = kRadiusBits) {
    mpfr_init2(value_, static_cast<mpfr_prec_t>(std::max<Bits>(precision, MPFR_PREC_MIN)));
    mpfr_set_zero(value_, 1);
  }
  Float(const Float& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  Float(Float&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
  }
  Float& operator=(const Float& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  Float& operator=(Float&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~Float() { mpfr_clear(value_); }

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  Bits precision() const noexcept { return static_cast<Bits>(mpfr_get_prec(value_)); }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }

 private:
  mpfr_t value_;
};

/// Three-way outcome of a certified comparison against a threshold.
enum class CertifiedOrder { Less, Greater, Unresolved };

inline const char* to_string(CertifiedOrder order) {
  switch (order) {
    case CertifiedOrder::Less: return "Less";
    case CertifiedOrder::Greater: return "Greater";
    case CertifiedOrder::Unresolved: return "Unresolved";
  }
  return "Unresolved";
}

class Ball;
Ball from_endpoints(const Float& lo, const Float& hi, Bits precision);

/// Midpoint-radius enclosure [mid - rad, mid + rad] of a real number, with a
/// dyadic (MPFR) midpoint. All operations round outward: the result encloses
/// the exact image of every point of the inputs.
class Ball {
 public:
  Ball() : mid_(kRadiusBits), rad_(kRadiusBits) {}

  /// Exact double midpoint; the radius is rounded up.
  Ball(double mid, double rad) : mid_(53), rad_(kRadiusBits) {
    require(rad >= 0 && std::isfinite(mid) && std::isfinite(rad), "invalid ball");
    mpfr_set_d(mid_.get(), mid, MPFR_RNDN);
    mpfr_set_d(rad_.get(), rad, MPFR_RNDU);
  }

  Ball(Float mid, Float rad) : mid_(std::move(mid)), rad_(std::move(rad)) {
    require(mid_.is_finite() && rad_.is_finite() && mpfr_sgn(rad_.get()) >= 0, "invalid ball");
  }

  static Ball from_integer(const Integer& n, Bits precision) {
    Ball out(precision);
    add_rounding(out, mpfr_set_z(out.mid_.get(), n.get_mpz_t(), MPFR_RNDN));
    return out;
  }

  static Ball from_rational(const Rational& q, Bits precision) {
    Ball out(precision);
    add_rounding(out, mpfr_set_q(out.mid_.get(), q.get_mpq_t(), MPFR_RNDN));
    return out;
  }

  /// Smallest ball (at the given precision) enclosing [lo, hi].
  static Ball from_rational_endpoints(const Rational& lo, const Rational& hi, Bits precision) {
    require(lo <= hi, "inverted rational endpoints");
    Float l(precision + 2);
    Float h(precision + 2);
    mpfr_set_q(l.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(h.get(), hi.get_mpq_t(), MPFR_RNDU);
    return from_endpoints(l, h, precision);
  }

  static Ball pi(Bits precision) {
    Float lo(precision + 2);
    Float hi(precision + 2);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return from_endpoints(lo, hi, precision);
  }

  static Ball euler(Bits precision) {
    Float lo(precision + 2);
    Float hi(precision + 2);
    mpfr_set_ui(lo.get(), 1, MPFR_RNDN);
    mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
    mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
    return from_endpoints(lo, hi, precision);
  }

  const Float& mid() const noexcept { return mid_; }
  const Float& rad() const noexcept { return rad_; }
  Bits precision() const noexcept { return mid_.precision(); }
  bool is_exact() const noexcept { return rad_.is_zero(); }

  /// Lower endpoint rounded toward -inf.
  Float lower() const {
    Float out(precision() + 1);
    mpfr_sub(out.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return out;
  }

  /// Upper endpoint rounded toward +inf.
  Float upper() const {
    Float out(precision() + 1);
    mpfr_add(out.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return out;
  }

  double mid_double() const { return mid_.to_double(MPFR_RNDN); }
  double rad_double() const { return rad_.to_double(MPFR_RNDU); }
  double lower_double() const { return lower().to_double(MPFR_RNDD); }
  double upper_double() const { return upper().to_double(MPFR_RNDU); }

  /// True when rad <= 2^exponent.
  bool radius_within(long exponent) const { return mpfr_cmp_ui_2exp(rad_.get(), 1, exponent) <= 0; }

  bool contains(const Rational& q) const {
    return mpfr_cmp_q(lower().get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(upper().get(), q.get_mpq_t()) >= 0;
  }

  /// True when `inner` lies inside this ball.
  bool contains(const Ball& inner) const {
    return mpfr_cmp(lower().get(), inner.lower().get()) <= 0 && mpfr_cmp(upper().get(), inner.upper().get()) >= 0;
  }

  bool overlaps(const Ball& other) const {
    return mpfr_cmp(lower().get(), other.upper().get()) <= 0 && mpfr_cmp(other.lower().get(), upper().get()) <= 0;
  }

  /// The integer floor of every point in the ball, if they all agree.
  std::optional<Integer> unique_floor() const {
    Integer lo;
    Integer hi;
    mpfr_get_z(lo.get_mpz_t(), lower().get(), MPFR_RNDD);
    mpfr_get_z(hi.get_mpz_t(), upper().get(), MPFR_RNDD);
    if (lo != hi) return std::nullopt;
    return lo;
  }

  /// The nearest integer of every point in the ball, if they all agree.
  std::optional<Integer> unique_nearest() const {
    Float lo(precision() + 2);
    Float hi(precision() + 2);
    mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    mpfr_add_d(lo.get(), lo.get(), 0.5, MPFR_RNDD);
    mpfr_add_d(hi.get(), hi.get(), 0.5, MPFR_RNDU);
    Integer a;
    Integer b;
    mpfr_get_z(a.get_mpz_t(), lo.get(), MPFR_RNDD);
    mpfr_get_z(b.get_mpz_t(), hi.get(), MPFR_RNDD);
    // hi landing exactly on an integer boundary means a tie at the upper end.
    if (a != b || mpfr_integer_p(hi.get())) return std::nullopt;
    return a;
  }

  std::string to_string(int digits = 17) const {
    char* text = nullptr;
    mpfr_asprintf(&text, "%.*Rg +/- %.3Rg", digits, mid_.get(), rad_.get());
    std::string out(text);
    mpfr_free_str(text);
    return out;
  }

 private:
  explicit Ball(Bits precision) : mid_(precision), rad_(kRadiusBits) {}

  friend Ball from_endpoints(const Float& lo, const Float& hi, Bits precision);
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Integer& n);
  friend Ball operator*(const Ball& a, const Rational& q);
  friend Ball operator+(const Ball& a, const Rational& q);

  /// Widens the radius by one ulp of the midpoint after an inexact RNDN step.
  static void add_rounding(Ball& b, int ternary) {
    if (ternary == 0 || b.mid_.is_zero()) return;
    Float ulp(kRadiusBits);
    mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(b.mid_.get()) - static_cast<mpfr_exp_t>(b.precision()),
                     MPFR_RNDU);
    mpfr_add(b.rad_.get(), b.rad_.get(), ulp.get(), MPFR_RNDU);
  }

  Float mid_;
  Float rad_;
};

inline Ball from_endpoints(const Float& lo, const Float& hi, Bits precision) {
  require(lo.is_finite() && hi.is_finite(), "non-finite enclosure endpoint");
  require(mpfr_cmp(lo.get(), hi.get()) <= 0, "inverted enclosure endpoints");
  Ball out(precision);
  Float sum(std::max(lo.precision(), hi.precision()) + 1);
  mpfr_add(sum.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_set(out.mid_.get(), sum.get(), MPFR_RNDN);
  mpfr_div_2ui(out.mid_.get(), out.mid_.get(), 1, MPFR_RNDN);
  Float up(kRadiusBits);
  Float down(kRadiusBits);
  mpfr_sub(up.get(), hi.get(), out.mid_.get(), MPFR_RNDU);
  mpfr_sub(down.get(), out.mid_.get(), lo.get(), MPFR_RNDU);
  mpfr_max(out.rad_.get(), up.get(), down.get(), MPFR_RNDU);
  if (mpfr_sgn(out.rad_.get()) < 0) mpfr_set_zero(out.rad_.get(), 1);
  return out;
}

inline Ball operator+(const Ball& a, const Ball& b) {
  Ball out(std::max(a.precision(), b.precision()));
  const int t = mpfr_add(out.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(out.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  Ball::add_rounding(out, t);
  return out;
}

inline Ball operator-(const Ball& a) {
  Ball out(a.precision());
  mpfr_neg(out.mid_.get(), a.mid_.get(), MPFR_RNDN);
  mpfr_set(out.rad_.get(), a.rad_.get(), MPFR_RNDU);
  return out;
}

inline Ball operator-(const Ball& a, const Ball& b) {
  Ball out(std::max(a.precision(), b.precision()));
  const int t = mpfr_sub(out.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(out.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  Ball::add_rounding(out, t);
  return out;
}

inline Ball operator*(const Ball& a, const Ball& b) {
  Ball out(std::max(a.precision(), b.precision()));
  const int t = mpfr_mul(out.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // rad = |a.mid| b.rad + |b.mid| a.rad + a.rad b.rad
  Float term(kRadiusBits);
  mpfr_mul(out.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_abs(term.get(), a.mid_.get(), MPFR_RNDU);
  mpfr_mul(term.get(), term.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_add(out.rad_.get(), out.rad_.get(), term.get(), MPFR_RNDU);
  mpfr_abs(term.get(), b.mid_.get(), MPFR_RNDU);
  mpfr_mul(term.get(), term.get(), a.rad_.get(), MPFR_RNDU);
  mpfr_add(out.rad_.get(), out.rad_.get(), term.get(), MPFR_RNDU);
  Ball::add_rounding(out, t);
  return out;
}

inline Ball operator*(const Ball& a, const Integer& n) {
  Ball out(a.precision());
  const int t = mpfr_mul_z(out.mid_.get(), a.mid_.get(), n.get_mpz_t(), MPFR_RNDN);
  const Integer m = abs(n);
  mpfr_mul_z(out.rad_.get(), a.rad_.get(), m.get_mpz_t(), MPFR_RNDU);
  Ball::add_rounding(out, t);
  return out;
}

inline Ball operator*(const Ball& a, const Rational& q) {
  Ball out(a.precision());
  const int t = mpfr_mul_q(out.mid_.get(), a.mid_.get(), q.get_mpq_t(), MPFR_RNDN);
  const Rational m = abs(q);
  mpfr_mul_q(out.rad_.get(), a.rad_.get(), m.get_mpq_t(), MPFR_RNDU);
  Ball::add_rounding(out, t);
  return out;
}

inline Ball operator+(const Ball& a, const Rational& q) {
  Ball out(a.precision());
  const int t = mpfr_add_q(out.mid_.get(), a.mid_.get(), q.get_mpq_t(), MPFR_RNDN);
  mpfr_set(out.rad_.get(), a.rad_.get(), MPFR_RNDU);
  Ball::add_rounding(out, t);
  return out;
}

inline Ball operator-(const Ball& a, const Rational& q) { return a + Rational(-q); }
inline Ball operator-(const Ball& a, const Integer& n) { return a + Rational(-n); }
inline Ball operator+(const Ball& a, const Integer& n) { return a + Rational(n); }
inline Ball operator/(const Ball& a, const Rational& q) {
  require(q != 0, "division by zero");
  return a * Rational(1 / q);
}

inline Ball square(const Ball& a) { return a * a; }

inline Ball operator/(const Ball& a, const Ball& b) {
  const Float bl = b.lower();
  const Float bu = b.upper();
  if (mpfr_sgn(bl.get()) <= 0 && mpfr_sgn(bu.get()) >= 0) fail(ErrorCode::PrecisionExhausted, "division by a ball containing zero");
  const Bits p = std::max(a.precision(), b.precision()) + 2;
  const Float al = a.lower();
  const Float au = a.upper();
  Float lo(p);
  Float hi(p);
  Float t(p);
  bool first = true;
  for (const Float* x : {&al, &au}) {
    for (const Float* y : {&bl, &bu}) {
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return from_endpoints(lo, hi, p - 2);
}

inline Ball exp(const Ball& a) {
  const Bits p = a.precision() + 2;
  Float lo(p);
  Float hi(p);
  mpfr_exp(lo.get(), a.lower().get(), MPFR_RNDD);
  mpfr_exp(hi.get(), a.upper().get(), MPFR_RNDU);
  return from_endpoints(lo, hi, a.precision());
}

/// Natural logarithm; the ball must be certified positive.
inline Ball log(const Ball& a) {
  const Float al = a.lower();
  if (mpfr_sgn(al.get()) <= 0) fail(ErrorCode::PrecisionExhausted, "logarithm of a ball touching zero");
  const Bits p = a.precision() + 2;
  Float lo(p);
  Float hi(p);
  mpfr_log(lo.get(), al.get(), MPFR_RNDD);
  mpfr_log(hi.get(), a.upper().get(), MPFR_RNDU);
  return from_endpoints(lo, hi, a.precision());
}

inline Ball sqrt(const Ball& a) {
  Float al = a.lower();
  const Float au = a.upper();
  require(mpfr_sgn(au.get()) >= 0, "square root of a negative ball");
  if (mpfr_sgn(al.get()) < 0) mpfr_set_zero(al.get(), 1);
  const Bits p = a.precision() + 2;
  Float lo(p);
  Float hi(p);
  mpfr_sqrt(lo.get(), al.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), au.get(), MPFR_RNDU);
  return from_endpoints(lo, hi, a.precision());
}

inline Ball abs(const Ball& a) {
  const Float al = a.lower();
  const Float au = a.upper();
  if (mpfr_sgn(al.get()) >= 0) return a;
  if (mpfr_sgn(au.get()) <= 0) return -a;
  Float lo(a.precision());
  Float hi(a.precision() + 1);
  mpfr_neg(hi.get(), al.get(), MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), au.get(), MPFR_RNDU);
  return from_endpoints(lo, hi, a.precision());
}

/// Enclosure of x^e for x > 0, via exp(e log x).
inline Ball pow(const Ball& x, const Rational& e) { return exp(log(x) * e); }

/// Enclosure of x^n for x >= 0 and n >= 1, computed as exp(n log x) on the
/// endpoints so the radius grows linearly in log space.
inline Ball pow_nonneg(const Ball& x, const Integer& n) {
  require(n >= 1, "exponent must be positive");
  Float xl = x.lower();
  const Float xu = x.upper();
  require(mpfr_sgn(xu.get()) >= 0, "pow_nonneg of a negative ball");
  if (x.is_exact() && mpfr_cmp_ui(x.mid().get(), 1) == 0) return Ball::from_integer(1, x.precision());
  const Bits p = x.precision() + bit_length(n) + 4;
  Float lo(p);
  Float hi(p);
  if (mpfr_sgn(xl.get()) <= 0) {
    mpfr_set_zero(lo.get(), 1);
  } else {
    mpfr_log(lo.get(), xl.get(), MPFR_RNDD);
    mpfr_mul_z(lo.get(), lo.get(), n.get_mpz_t(), MPFR_RNDD);
    mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
  }
  if (mpfr_sgn(xu.get()) == 0) {
    mpfr_set_zero(hi.get(), 1);
  } else {
    mpfr_log(hi.get(), xu.get(), MPFR_RNDU);
    mpfr_mul_z(hi.get(), hi.get(), n.get_mpz_t(), MPFR_RNDU);
    mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  }
  return from_endpoints(lo, hi, x.precision());
}

/// Cosine of an arbitrary ball. Interior critical points k*pi are located
/// conservatively: any integer that might lie in [lo/pi, hi/pi] counts.
inline Ball cos(const Ball& a) {
  const Bits p = a.precision() + 2;
  const Float al = a.lower();
  const Float au = a.upper();
  Float width(kRadiusBits);
  mpfr_sub(width.get(), au.get(), al.get(), MPFR_RNDD);
  Float lo(p);
  Float hi(p);
  if (mpfr_cmp_d(width.get(), 6.25) >= 0) {
    mpfr_set_si(lo.get(), -1, MPFR_RNDN);
    mpfr_set_si(hi.get(), 1, MPFR_RNDN);
    return from_endpoints(lo, hi, a.precision());
  }
  Float t(p);
  mpfr_cos(lo.get(), al.get(), MPFR_RNDD);
  mpfr_cos(t.get(), au.get(), MPFR_RNDD);
  mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
  mpfr_cos(hi.get(), al.get(), MPFR_RNDU);
  mpfr_cos(t.get(), au.get(), MPFR_RNDU);
  mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);

  const Ball pi = Ball::pi(p + 8);
  const Ball lq = Ball(al, Float(kRadiusBits)) / pi;
  const Ball hq = Ball(au, Float(kRadiusBits)) / pi;
  Integer k0;
  Integer k1;
  mpfr_get_z(k0.get_mpz_t(), lq.lower().get(), MPFR_RNDU);
  mpfr_get_z(k1.get_mpz_t(), hq.upper().get(), MPFR_RNDD);
  for (Integer k = k0; k <= k1; ++k) {
    if (mpz_even_p(k.get_mpz_t())) {
      mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
    } else {
      mpfr_set_si(lo.get(), -1, MPFR_RNDN);
    }
  }
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo.get(), -1, MPFR_RNDN);
  if (mpfr_cmp_ui(hi.get(), 1) > 0) mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
  return from_endpoints(lo, hi, a.precision());
}

/// Certified comparison of every point of the ball against a threshold.
inline CertifiedOrder compare(const Ball& b, const Rational& threshold) {
  if (mpfr_cmp_q(b.upper().get(), threshold.get_mpq_t()) < 0) return CertifiedOrder::Less;
  if (mpfr_cmp_q(b.lower().get(), threshold.get_mpq_t()) > 0) return CertifiedOrder::Greater;
  return CertifiedOrder::Unresolved;
}

inline CertifiedOrder compare(const Ball& a, const Ball& b) {
  if (mpfr_cmp(a.upper().get(), b.lower().get()) < 0) return CertifiedOrder::Less;
  if (mpfr_cmp(a.lower().get(), b.upper().get()) > 0) return CertifiedOrder::Greater;
  return CertifiedOrder::Unresolved;
}

/// Evaluates sum c_j x^j with Horner's rule in ball arithmetic.
template <typename Coefficients>
Ball horner(const Coefficients& coefficients, const Ball& x) {
  Ball acc = Ball::from_integer(0, x.precision());
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

}  // namespace dioph

#endif  // DIOPH_BALL_HPP
