"""Jensen means, d* and sup norms for a few genus-zero functions.

Run from the repository root:

    python demos/01_jensen_and_degree.py

The closed-form Jensen mean |a| R^alpha prod max(1, R/|z_j|) is compared with
trapezoid quadrature of log|P| on the circle, and the sup norm is checked
against the pointwise bound C(P,1) (1+R)^{d*} e^{R d*}.
"""

import math

import numpy as np

from growthlab import genus_zero as gz
from growthlab.genus_zero import GenusZeroFunction, TailModel

examples = {
    "1 - z/2": GenusZeroFunction.from_zeros([2.0]),
    "(1-z)(1-z/4)": GenusZeroFunction.from_zeros([1.0, 4.0]),
    "(1 - z/4)^3": GenusZeroFunction.from_zeros([4.0] * 3),
    "z^2 (1+z)^5": GenusZeroFunction.from_zeros([-1.0] * 5, origin_order=2),
}

print(f"{'P':<16}{'d*':>8}{'R':>6}{'closed':>14}{'quadrature':>14}{'sup':>12}{'bound':>14}")
for label, P in examples.items():
    ds = gz.d_star(P)
    for R in (0.5, 2.0, 5.0):
        closed = gz.jensen_mean_closed(P, R)
        quad = gz.jensen_mean_quadrature(P, R * (1 + 1e-3))  # keep zeros off the circle
        sup = gz.sup_norm(P, R)
        bound = gz.jensen_mean_closed(P, 1.0) * (1 + R) ** ds * math.exp(R * ds)
        print(f"{label:<16}{ds:8.3f}{R:6.1f}{closed:14.6g}{quad:14.6g}{sup:12.6g}{bound:14.6g}")

# Infinitely many zeros: j^2 for j >= 1, the tail beyond j = 2 kept in closed form.
# The product of (1 + 1/j^2) is sinh(pi)/pi.
P = GenusZeroFunction.from_zeros([1.0, 4.0], tail=TailModel.power_law(1.0, 2.0, start_index=3))
val, err = gz.log_abs_eval_bound(P, -1.0)
print()
print(f"zeros j^2: d* = {gz.d_star(P):.12f}   (pi^2/6 = {math.pi**2 / 6:.12f})")
print(f"log|P(-1)| = {float(val):.12f} +- {float(err):.1e}   (log sinh(pi)/pi = {math.log(math.sinh(math.pi) / math.pi):.12f})")

# Order from Taylor coefficients is a finite-window estimate, not a limit.
print()
for N in (50, 200, 1000):
    est = gz.order_estimate_from_log([-math.lgamma(n + 1) for n in range(N + 1)])
    print(f"order surrogate of exp(z) from {N} coefficients: {est:.4f}")
