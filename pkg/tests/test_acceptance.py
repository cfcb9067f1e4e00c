"""Acceptance criteria, one test each, at the stated tolerances.

Every test prints one ``criterion N: PASS|FAIL ...`` line; the lines are
also collected and repeated in the pytest terminal summary.
"""

import filecmp
import itertools
import math
import time
from pathlib import Path

import numpy as np
import pytest

from growthlab import genus_zero as gz
from growthlab import harness as hz
from growthlab import potential as pt
from growthlab.families import make_family
from growthlab.genus_zero import GenusZeroFunction
from growthlab.potential import Disk, PlanarSet, Ray, Segment
from growthlab.scenario import load_scenario, run_scenario

RESULTS = []
DEMOS = Path(__file__).resolve().parent.parent / "demos" / "scenarios"
RAY = PlanarSet.of(Ray(0j, 0.0))

CORPUS = [
    {"kind": "binomial"},
    {"kind": "stacked_binomial"},
    {"kind": "ray_growth", "gamma": 1},
    {"kind": "ray_growth", "gamma": 2.5},
    {"kind": "chebyshev_on_segment", "L": 4},
    {"kind": "power_law_zeros", "c": 1, "p": 2},
    {"kind": "random_disk_zeros", "rho": 3, "seed": 1},
    {"kind": "constant"},
]


def record(n, ok, detail):
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _random_function(rng, radii):
    m = int(rng.integers(1, 65))
    zs = []
    while len(zs) < m:
        z = 6 * math.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())
        if abs(z) > 1e-3 and all(abs(abs(z) - R) >= 1e-3 * R for R in radii):
            zs.append(z)
    a = complex(rng.normal(), rng.normal())
    return GenusZeroFunction.from_zeros(zs, leading_coeff=a, origin_order=int(rng.integers(0, 3)))


def test_criterion_01_jensen_identity():
    radii = (0.5, 1.0, 2.0, 5.0)
    rng = np.random.default_rng(20240101)
    funcs = [_random_function(rng, radii) for _ in range(50)]
    t0 = time.perf_counter()
    worst = 0.0
    for P in funcs:
        for R in radii:
            q, c = gz.jensen_mean_quadrature(P, R), gz.jensen_mean_closed(P, R)
            worst = max(worst, abs(q - c) / c)
    dt = time.perf_counter() - t0
    record(1, worst < 1e-8 and dt < 10, f"max rel err {worst:.2e} (< 1e-8), runtime {dt:.2f}s (< 10s)")


def test_criterion_02_lemma2i_chain():
    bad, total = [], 0
    for desc in CORPUS:
        rep = hz.check_lemma2_i(make_family(dict(desc, N=256)), [0.5, 1, 2, 4])
        recs = [r for r in rep.conclusion_records if r.name == "sup_chain_log"]
        total += len(recs)
        bad += [(desc["kind"], r.at) for r in recs if r.status != "pass"]
    record(2, not bad and total == len(CORPUS) * 256 * 4,
           f"{total} (family, n, R) cells, {len(bad)} violations at rtol 1e-10")


def test_criterion_03_ratio_inequality():
    grid = (0.5, 1.0, 2.0, 4.0)
    bad, total = 0, 0
    for desc in CORPUS:
        for n, P, k in make_family(dict(desc, N=256)):
            logs = {R: gz.log_jensen_mean(P, R) for R in grid}
            for R, s in itertools.combinations(grid, 2):
                lhs = logs[R] + gz.zero_count(P, R) * math.log(s / R)
                total += 1
                bad += not (lhs <= logs[s] + 1e-10 * max(1.0, abs(logs[s])))
    record(3, bad == 0, f"{total} (family, n, R<s) cells, {bad} violations")


def test_criterion_04_capacity_closed_forms():
    out = []
    for name, E, tol in (("unit disk", PlanarSet.of(Disk(0j, 1.0)), 0.02),
                         ("segment L=4", PlanarSet.of(Segment(-2 + 0j, 2 + 0j)), 0.03)):
        t0 = time.perf_counter()
        cap = pt.capacity_estimate(E, 48, 2048)
        dt = time.perf_counter() - t0
        out.append((name, cap, abs(cap - 1) <= tol and dt < 5, dt, tol))
    record(4, all(o[2] for o in out),
           "; ".join(f"{n} {c:.4f} (tol {t:.0%}, {d:.2f}s)" for n, c, _, d, t in out))


def test_criterion_05_green_closed_forms():
    r = 1.5
    mu = pt.equilibrium_measure(PlanarSet.of(Disk(0j, r)), 48)
    z = 2 * r * np.exp(2j * np.pi * np.arange(32) / 32)
    disk_err = float(np.max(np.abs(pt.green_eval(mu, z) - math.log(2))))
    mu2 = pt.equilibrium_measure(PlanarSet.of(Segment(-1 + 0j, 1 + 0j)), 48)
    oracle = math.log(abs(2 + math.sqrt(3)))
    seg_err = abs(pt.green_eval(mu2, 2.0) - oracle) / oracle
    record(5, disk_err < 1e-2 and seg_err < 0.02,
           f"disk abs err {disk_err:.2e} (< 1e-2); segment rel err {seg_err:.2%} (< 2%)")


def test_criterion_06_circle_average_identity():
    target = math.log(4) - math.log(3 / 4)
    avg = pt.circle_average_green(PlanarSet.of(Segment(0j, 3 + 0j)), 4.0)
    rel = abs(avg - target) / target
    record(6, rel < 0.05, f"average {avg:.4f} vs {target:.4f}, rel err {rel:.2%} (< 5%)")


def test_criterion_07_beta_exponent():
    fit = pt.beta_exponent(RAY, [4, 8, 16, 32])
    record(7, 0.95 <= fit.beta <= 1.05 and fit.residual < 0.05,
           f"beta {fit.beta:.4f} in [0.95, 1.05], residual {fit.residual:.2e} (< 0.05)")


def test_criterion_08_theorem1_desk_check():
    rep = hz.check_theorem1(make_family({"kind": "binomial", "N": 256}), RAY, [2.0], tol=0.02)
    hyp_ok = all(r.status == "pass" for r in rep.hypothesis_records)
    worst = max(r.lhs for r in rep.conclusion_records)
    neg = hz.check_theorem1(make_family({"kind": "ray_growth", "gamma": 1, "N": 256}), RAY, [2.0], tol=0.02)
    ok = hyp_ok and worst <= 1.016 <= 1.02 and rep.overall == "pass" and neg.outcome == "HypothesisViolated"
    record(8, ok, f"hypotheses pass={hyp_ok}, max (1+R/n) at R=2 {worst:.6f} (<= 1.016); "
                  f"ray_growth control -> {neg.outcome}")


def test_criterion_09_theorem2_desk_check():
    seq = make_family({"kind": "ray_growth", "gamma": 1, "N": 256})
    g_eff = seq.info["effective_exponent"]
    rep = hz.check_theorem2(seq, RAY, hz.PowerGrowth(g_eff), g_eff, [1.0, 2.0, 4.0, 8.0], [4, 8, 16, 32], tol=0.1)
    beta, kappa = rep.provenance["beta"], rep.provenance["kappa"]
    concl = [r for r in rep.conclusion_records if r.name == "growth_le_C0_power"]
    ok = (rep.overall == "pass" and g_eff == 1.0 and all(r.status == "pass" for r in concl)
          and kappa <= g_eff / beta + 0.1)
    record(9, ok, f"gamma_eff {g_eff}, beta {beta:.4f}, worst margin {min(r.margin for r in concl):.3g}, "
                  f"kappa {kappa:.3f} <= {g_eff / beta + 0.1:.3f}")


def test_criterion_10_bernstein_walsh():
    Q = make_family({"kind": "chebyshev_on_segment", "L": 4, "N": 8})[8]
    t = 2 * np.pi * (np.arange(40) + 0.5) / 40
    pts = np.concatenate([r * np.exp(1j * t) for r in (2.5, 3, 4, 6, 10)])
    res = pt.bernstein_walsh_check(Q, PlanarSet.of(Segment(-2 + 0j, 2 + 0j)), pts, tol_g=0.02)
    record(10, res.violations == 0 and pts.size == 200,
           f"{pts.size} samples, {res.violations} violations, worst margin {res.worst_margin:.3g}")


def test_criterion_11_determinism(tmp_path):
    same = True
    names = []
    for cfg in ("random_disk_lemmas.json", "theorem1_binomial.json"):
        sc = load_scenario(DEMOS / cfg)
        _, pa = run_scenario(sc, tmp_path / "a" / cfg)
        _, pb = run_scenario(load_scenario(DEMOS / cfg), tmp_path / "b" / cfg)
        for a, b in zip(pa, pb):
            same &= filecmp.cmp(a, b, shallow=False)
            names.append(Path(a).name)
    record(11, same, f"{len(names)} files byte-identical across two runs")
