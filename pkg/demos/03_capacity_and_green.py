"""Capacity, equilibrium measures and Green functions with pole at infinity.

    python demos/03_capacity_and_green.py

Capacities come from 48 greedy (Leja) points on a 2048-point boundary
sample; the Green function is the potential of equal weights on those points.
"""

import math

import numpy as np

from growthlab import potential as pt
from growthlab.potential import Disk, PlanarSet, Ray, Segment

cases = [
    ("unit disk", PlanarSet.of(Disk(0j, 1.0)), 1.0),
    ("segment [-2, 2]", PlanarSet.of(Segment(-2 + 0j, 2 + 0j)), 1.0),
    ("segment [0, 3]", PlanarSet.of(Segment(0j, 3 + 0j)), 0.75),
    ("disk r=2 at 1+i", PlanarSet.of(Disk(1 + 1j, 2.0)), 2.0),
]
print(f"{'set':<20}{'energy':>10}{'transfinite':>13}{'exact':>8}")
for name, E, exact in cases:
    print(f"{name:<20}{pt.capacity_estimate(E):10.4f}{pt.capacity_estimate(E, method='transfinite'):13.4f}{exact:8.3f}")

# Green function of [-1, 1] against the Joukowski closed form
mu = pt.equilibrium_measure(PlanarSet.of(Segment(-1 + 0j, 1 + 0j)), 48)
print()
for z in (1.5, 2.0, 3j, 4 + 4j):
    w = complex(z)
    exact = math.log(abs(w + np.sqrt(w - 1) * np.sqrt(w + 1)))
    print(f"g([-1,1], {z}) = {pt.green_eval(mu, z):.5f}   exact {exact:.5f}")

# Circle averages equal log s - log cap(E_s) once the circle clears the set
E = PlanarSet.of(Segment(0j, 3 + 0j))
res = pt.circle_average_green(E, 4.0, full_output=True)
print()
print(f"[0,3], s=4: average {res.average:.4f}, log s - log cap = {res.identity_rhs:.4f}, classical {math.log(4 / 0.75):.4f}")

# A ray: cap(E_R) = R/4 grows linearly, and circle averages of g(E_R) at s = 1 fall toward 0
ray = PlanarSet.of(Ray(0j, 0.0))
fit = pt.beta_exponent(ray, [4, 8, 16, 32])
print(f"ray: beta = {fit.beta:.4f} (residual {fit.residual:.1e})")
diag = pt.nonthin_diagnostic(ray, 1.0, [4, 16, 64, 256, 1024])
print("ray: circle averages at s=1:", ", ".join(f"R={R:g}: {a:.3f}" for R, a in zip(diag.radii, diag.averages)),
      f"-> non-thin flag {diag.flag}")
disk = pt.nonthin_diagnostic(PlanarSet.of(Disk(0j, 1.0)), 2.0, [4, 16, 64])
print("disk: circle averages at s=2:", ", ".join(f"{a:.3f}" for a in disk.averages), f"-> flag {disk.flag}")
