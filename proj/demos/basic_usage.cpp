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

// A short tour: expand a surd, look for a witness, and check the
// quarter-power counting bound at one Hurwitz level.

#include <iostream>

#include "dioph/dioph.hpp"

int main() {
  using namespace dioph;

  const RealSource phi = RealSource::golden_ratio();
  std::cout << "phi = " << expand_real(phi, 10).to_string() << "\n";

  for (const auto& c : hurwitz_filter(phi, 8)) {
    std::cout << "  Hurwitz convergent " << c.p << "/" << c.q << "\n";
  }

  // {n x}^n near 1/2 for x = [1; 2, 1, 3, 1, 4, 1, ...].
  const RealSource x = parse_alpha("cf-rule:affine(1,1,0,1)");
  const auto w = find_frac_witness(x, Rational(1, 2), Rational(1, 50), 60);
  std::cout << "{n x}^n = " << w.value.to_string(10) << " at n = " << w.n << "\n";

  // (cos n)^n near 0.8.
  const auto c = find_cos_witness(RealSource::rational(1), GPoly::identity(), Rational(4, 5), Rational(1, 20));
  std::cout << "(cos n)^n = " << c.value.to_string(10) << " at n = " << c.n << "\n";

  const auto v = verify_quarter_power(RealSource::sqrt_of(2), Rational(1, 2), 8);
  std::cout << "count up to " << v.witness.N << ": " << v.count.count_certain << " >= " << v.bound.to_string(6)
            << (v.pass ? "  (holds)" : "  (fails)") << "\n";
  return 0;
}
