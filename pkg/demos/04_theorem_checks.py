"""Finite-scale checks of the growth statements, with negative controls.

    python demos/04_theorem_checks.py

Each check returns a report whose hypothesis and conclusion records carry
lhs, rhs and a status.  The same runs are available from the command line:

    growthlab verify --config demos/scenarios/theorem1_binomial.json --out out
"""

import numpy as np

from growthlab import harness as hz
from growthlab.families import make_family
from growthlab.potential import PlanarSet, Ray, Segment

ray = PlanarSet.of(Ray(0j, 0.0))
binomial = make_family({"kind": "binomial", "N": 256})
ray_growth = make_family({"kind": "ray_growth", "gamma": 1, "N": 256})

# Geometric growth on a non-thin set: (1 - z/n)^n stays near 1 on [0, inf), so it does so everywhere.
rep = hz.check_theorem1(binomial, ray, [0.5, 1.0, 2.0], tol=0.02)
print(rep.summary())
# (1 + z)^n is large on the ray; the hypothesis fails and the report says so.
print(hz.check_theorem1(ray_growth, ray, [2.0]).summary())
print()

# Polynomial growth: cap(E_R) ~ R^beta turns (1+R)^gamma on E into (1+R)^{gamma/beta} everywhere.
print(hz.check_theorem2(ray_growth, ray, hz.PowerGrowth(1.0), 1.0, [1.0, 2.0, 4.0], [4, 8, 16, 32], tol=0.1).summary())
print()

# The converse direction builds the radii R_n explicitly.
rep = hz.check_theorem4(binomial, hz.PowerGrowth(1.0))
print(rep.summary())
Rn, n_s = hz.construct_Rn(binomial, 1.0)
print(f"  first n_s: {n_s[:6]}")
print()

# The exact chains behind the lemmas, then a family whose zeros pile up too fast.
print(hz.check_lemma2_i(make_family({"kind": "chebyshev_on_segment", "L": 4, "N": 64}), [0.5, 1, 2, 4]).summary())
print(hz.check_lemma3(make_family({"kind": "stacked_binomial", "N": 64}), [2.0], 0.0).summary())
print()

# Bernstein-Walsh for the degree-8 Chebyshev polynomial of [-2, 2]
Q = make_family({"kind": "chebyshev_on_segment", "L": 4, "N": 8})[8]
t = 2 * np.pi * (np.arange(40) + 0.5) / 40
samples = np.concatenate([r * np.exp(1j * t) for r in (2.5, 3, 4, 6, 10)])
print(hz.check_bernstein(Q, PlanarSet.of(Segment(-2 + 0j, 2 + 0j)), samples).summary())
