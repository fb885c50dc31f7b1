#!/usr/bin/env python3
"""Chord data and reverse Jensen constants: the ratio bound gamma, the gap
bound zeta, their closed forms for log t and -t log t, and both reverse
inequalities at the level of a positive linear map."""

import math

import numpy as np

from opentropy import (
    PositiveDefiniteMatrix,
    PositiveLinearMap,
    check_jensen,
    check_jensen_reverse_gamma,
    check_jensen_reverse_zeta,
    chord_gap_bound,
    chord_ratio_bound,
    identric_mean,
    logarithmic_mean,
    secant_data,
    zeta_closed_forms,
)
from opentropy.functions import LOG, NEG_T_LOG_T, power

print("=== secant data for sqrt on [1, 4] ===")
data = secant_data(power(0.5), 1.0, 4.0)
print(f"chord: {data.mu:.6f} * t + {data.nu:.6f}")
print(f"gamma = {data.gamma:.12f} at t = {data.argmax_gamma:.6f}   (3*sqrt(2)/4 = {3*math.sqrt(2)/4:.12f})")
print(f"zeta  = {data.zeta:.12f} at t = {data.argmax_zeta:.6f}   (1/12 = {1/12:.12f})")

print()
print("=== closed forms on [m, M] with m < 1 < M ===")
m, M = 0.5, 2.0
zeta_log, zeta_neg = zeta_closed_forms(m, M)
print(f"L({m}, {M}) = {logarithmic_mean(m, M):.10f},  I({m}, {M}) = {identric_mean(m, M):.10f}")
print(f"gap bound for log t     : closed {zeta_log:.12f}  numeric {chord_gap_bound(LOG, m, M):.12f}")
print(f"gap bound for -t log t  : closed {zeta_neg:.12f}  numeric {chord_gap_bound(NEG_T_LOG_T, m, M):.12f}")

print()
print("=== ratio bound needs a positive chord ===")
print("log on [0.5, 2] has gamma:", secant_data(LOG, 0.5, 2.0).gamma, "(chord changes sign)")
print("log on [1, e^2] extends to the endpoint limit:",
      chord_ratio_bound(LOG, 1.0, math.e ** 2), "= (M-1)/log M =", (math.e ** 2 - 1) / 2.0)

print()
print("=== Jensen and its reverses for a random normalized map ===")
rng = np.random.default_rng(2)
pm = PositiveLinearMap.random_normalized(4, 4, 2, rng)
g = (rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))) / np.sqrt(2)
a = PositiveDefiniteMatrix(g @ g.conj().T + 2.0 * np.eye(4))
lo, hi = a.lambda_min, a.lambda_max

forward = check_jensen(pm, a, power(0.5))
print(f"f(Phi(A)) >= Phi(f(A))          margin {forward.margin:+.6f}")
rev_gamma = check_jensen_reverse_gamma(pm, a, power(0.5), lo, hi)
print(f"f(Phi(A)) <= gamma*Phi(f(A))    margin {rev_gamma.margin:+.6f}")
rev_zeta = check_jensen_reverse_zeta(pm, a, power(0.5), lo, hi)
print(f"f(Phi(A)) <= Phi(f(A)) + zeta*I margin {rev_zeta.margin:+.6f}")
