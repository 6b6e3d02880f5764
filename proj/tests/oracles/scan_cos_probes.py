# Copyright 2026 The dioph Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Brute-force oracle scans frozen into the acceptance suite.

Cosine probe: minimal n <= 10^6 with | |cos n|^n - y | <= 0.05.
Square probe: max over n <= 10^6 of |cos(n^2)|^n.
Float64 screening followed by 200-digit mpmath confirmation of candidates.
"""
import numpy as np
from mpmath import mp, mpf, cos, fabs

mp.dps = 200
N = 10**6
n = np.arange(1, N + 1, dtype=np.float64)

v1 = np.abs(np.cos(n)) ** n
for y in (0.2, 0.5, 0.8):
    idx = np.nonzero(np.abs(v1 - y) <= 0.05 + 1e-9)[0]
    for i in idx:
        k = int(i) + 1
        exact = fabs(cos(mpf(k))) ** k
        if fabs(exact - mpf(y)) <= mpf("0.05"):
            print(f"cos_probe y={y} minimal_n={k} value={mp.nstr(exact, 12)}")
            break

sq = n * n  # exact in binary64 for n <= 10^6
v2 = np.abs(np.cos(sq)) ** n
order = np.argsort(-v2)[:20]
best = max(order, key=lambda i: fabs(cos(mpf(int(i) + 1) ** 2)) ** (int(i) + 1))
k = int(best) + 1
print(f"square_probe argmax_n={k} max={mp.nstr(fabs(cos(mpf(k) ** 2)) ** k, 15)}")
