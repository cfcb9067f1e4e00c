"""Built-in sequences (P_n, k_n) and their finite-window surrogates.

    python demos/02_families_and_surrogates.py

Asymptotic quantities such as limsup C(P_n,1)^{1/k_n} are replaced by the
maximum over the window [N/2, N] plus a slope against 1/n; a positive slope
means the values are still falling as n grows.
"""

from growthlab.families import estimate_C0, estimate_C0_star, estimate_eta_R, growth_profile, make_family

N = 128
descriptors = [
    {"kind": "binomial"},
    {"kind": "ray_growth", "gamma": 1},
    {"kind": "ray_growth", "gamma": 2.5},
    {"kind": "chebyshev_on_segment", "L": 4},
    {"kind": "power_law_zeros", "c": 1, "p": 2},
    {"kind": "random_disk_zeros", "rho": 3, "seed": 7},
    {"kind": "binomial", "decay": {"rate": 1.0, "power": 2}},
]

print(f"{'family':<34}{'C0':>12}{'C0*':>12}{'trend':>10}{'eta(2)':>9}")
for d in descriptors:
    seq = make_family(dict(d, N=N))
    c0, c0s, eta = estimate_C0(seq), estimate_C0_star(seq), estimate_eta_R(seq, 2.0)
    label = ", ".join(f"{k}={v}" for k, v in d.items() if k != "kind")
    print(f"{d['kind'] + (' ' + label if label else ''):<34}{c0.value:12.5g}{c0s.value:12.5g}"
          f"{c0.trend_slope:10.3g}{eta.value:9.3f}")

# For the binomial family the profile is exactly 1 + R/n.
seq = make_family({"kind": "binomial", "N": N})
prof = growth_profile(seq, [1.0, 2.0, 8.0], ns=[16, 64, 128])
print()
for i, n in enumerate(prof.ns):
    row = "  ".join(f"R={R:g}: {prof.values[i, j]:.6f} (1+R/n = {1 + R / n:.6f})" for j, R in enumerate(prof.radii))
    print(f"n={n:<4d} {row}")

# ray_growth with gamma > 1 doubles the weight to keep k_n >= d*, so the exponent seen is gamma/ceil(gamma).
seq = make_family({"kind": "ray_growth", "gamma": 2.5, "N": N})
print()
print(f"ray_growth(2.5): k_n = {seq.k(N):g} at n = {N}, effective exponent {seq.info['effective_exponent']:.4f}")
