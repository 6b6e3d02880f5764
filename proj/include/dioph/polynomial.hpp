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

#ifndef DIOPH_POLYNOMIAL_HPP
#define DIOPH_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dioph/numeric.hpp"

namespace dioph {

/// Dense univariate polynomial over Q, coefficients in increasing degree.
/// The zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RationalPolynomial constant(const Rational& v) { return RationalPolynomial({v}); }
  static RationalPolynomial monomial(const Rational& v, std::size_t degree) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = v;
    return RationalPolynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  RationalPolynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<unsigned long>(i)));
    return RationalPolynomial(std::move(d));
  }

  RationalPolynomial monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c = c_;
    const Rational lc = c.back();
    for (auto& v : c) v /= lc;
    return RationalPolynomial(std::move(c));
  }

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RationalPolynomial(std::move(c));
  }
  friend RationalPolynomial operator-(const RationalPolynomial& a) {
    std::vector<Rational> c = a.c_;
    for (auto& v : c) v = -v;
    return RationalPolynomial(std::move(c));
  }
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) { return a + (-b); }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RationalPolynomial(std::move(c));
  }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                  const RationalPolynomial& b) {
    require(!b.is_zero(), "polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    const std::size_t db = b.c_.size() - 1;
    if (rem.size() <= db) return {RationalPolynomial(), a};
    std::vector<Rational> quo(rem.size() - db, Rational(0));
    for (std::size_t k = rem.size(); k-- > db;) {
      const Rational f = rem[k] / b.c_.back();
      quo[k - db] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    rem.resize(db);
    return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? "," : "") + dioph::to_string(c_[i]);
    return out + "]";
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic greatest common divisor.
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Yun's algorithm: p = lc * prod f_i^i with each f_i squarefree, monic and
/// pairwise coprime. Entry i-1 of the result is f_i.
inline std::vector<RationalPolynomial> squarefree_decomposition(const RationalPolynomial& p) {
  require(p.degree() >= 1, "squarefree decomposition needs a non-constant polynomial");
  std::vector<RationalPolynomial> out;
  const RationalPolynomial dp = p.derivative();
  RationalPolynomial a = gcd(p, dp);
  RationalPolynomial b = divmod(p, a).first;
  RationalPolynomial c = divmod(dp, a).first;
  RationalPolynomial d = c - b.derivative();
  while (b.degree() >= 1) {
    a = gcd(b, d);
    out.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

/// Sturm sequence p, p', -rem(p, p'), ...
inline std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

inline std::size_t sign_changes_at(const std::vector<RationalPolynomial>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    const int v = s.sign_at(x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

/// Number of distinct real roots of a squarefree p in the open interval (lo, hi).
inline std::size_t count_roots_open(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  require(lo < hi, "empty root-counting interval");
  if (p.degree() < 1) return 0;
  const auto seq = sturm_sequence(p);
  // V(lo) - V(hi) counts roots in (lo, hi].
  std::size_t n = sign_changes_at(seq, lo) - sign_changes_at(seq, hi);
  if (p(hi) == 0) --n;
  return n;
}

/// Exact proof that p >= 0 on [lo, hi]: no odd-multiplicity root inside the
/// open interval, and a non-negative sign where p does not vanish.
inline bool nonnegative_on(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return true;
  if (p.degree() == 0) return p.leading() > 0;
  const auto parts = squarefree_decomposition(p);
  RationalPolynomial odd = RationalPolynomial::constant(1);
  for (std::size_t i = 0; i < parts.size(); i += 2) odd = odd * parts[i];
  if (count_roots_open(odd, lo, hi) > 0) return false;
  // No sign change inside, so one sample away from the finitely many roots decides.
  for (unsigned long k = 1;; ++k) {
    const Rational x = lo + (hi - lo) / Rational(k + 1);
    if (const int s = p.sign_at(x); s != 0) return s > 0;
  }
}

}  // namespace dioph

#endif  // DIOPH_POLYNOMIAL_HPP
