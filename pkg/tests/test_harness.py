import math

import numpy as np
import pytest

from growthlab import harness as hz
from growthlab.errors import HypothesisViolated
from growthlab.families import make_family
from growthlab.potential import Disk, PlanarSet, Ray, Segment

RAY = PlanarSet.of(Ray(0j, 0.0))
SEG4 = PlanarSet.of(Segment(-2 + 0j, 2 + 0j))


def fam(**kw):
    return make_family(kw)


# ---------------------------------------------------------------- plumbing

def test_tolerances_replace_validates():
    t = hz.Tolerances().replace(tol=0.1)
    assert t.tol == 0.1 and hz.Tolerances().tol == 0.05
    with pytest.raises(Exception):
        hz.Tolerances().replace(bogus=1)


def test_growth_functions():
    h = hz.PowerGrowth(1.5, 2.0)
    assert h(3.0) == pytest.approx(2 * 4**1.5)
    assert h.exponent == 1.5
    tab = hz.TabulatedGrowth([1, 2, 4], [2, 3, 5])
    assert tab(2.0) == pytest.approx(3.0)
    assert hz.growth_from_dict(h.to_dict()) == h


def test_rn_schedules():
    assert hz.rn_schedule("sqrt")(16) == 4.0
    assert hz.rn_schedule("linear:0.5")(10) == 5.0
    assert hz.rn_schedule("log")(math.e**2 - 1) == pytest.approx(2.0)  # log(n + 1), positive at n = 1


def test_report_overall_logic():
    rep = hz.VerificationReport("x")
    rep.hypothesis("a", 1, 2)
    rep.conclusion("b", "", 1, 2)
    assert rep.overall == "pass" and rep.outcome == "PASS"
    rep.hypothesis("c", 0, 1, status=hz.INDETERMINATE)
    assert rep.overall == "indeterminate"
    rep.hypothesis("d", 3, 2)
    assert rep.overall == "fail" and rep.outcome == "HypothesisViolated"
    with pytest.raises(HypothesisViolated):
        rep.raise_for_status()


def test_config_hash_is_stable():
    assert hz.config_hash({"b": 1, "a": [1, 2]}) == hz.config_hash({"a": [1, 2], "b": 1})
    assert len(hz.config_hash({})) == 16


# ---------------------------------------------------------------- check_lemma2_i

def test_lemma2i_binomial_part_one_only():
    rep = hz.check_lemma2_i(fam(kind="binomial", N=64), [0.5, 1, 2, 4])
    assert rep.overall == "pass"
    assert not rep.hypothesis_records  # C_0 = 1, part (ii) not applicable
    assert len(rep.conclusion_records) == 64 * 4


def test_lemma2i_constant_family_equalities():
    rep = hz.check_lemma2_i(fam(kind="constant", N=8), [1, 2])
    # sup |1| = 1 and the chain reduces to 0 <= 0 in logs
    assert all(r.lhs == 0 and r.rhs == 0 for r in rep.conclusion_records)
    assert rep.overall == "pass"


def test_lemma2i_vanishing_growth():
    # a_n = e^{-n^2}, k_n = n: C_0 = 0 and the profile collapses
    rep = hz.check_lemma2_i(fam(kind="binomial", N=32, decay={"rate": 1, "power": 2}), [0.5, 1, 2])
    assert rep.overall == "pass"
    assert any(r.name == "growth_vanishes" for r in rep.conclusion_records)


def test_lemma2i_negative_control_band():
    # C_0 = 0.1 sits in the indeterminate band: never a silent pass of part (ii)
    rep = hz.check_lemma2_i(fam(kind="binomial", N=32, decay={"rate": math.log(10), "power": 1}), [1])
    assert rep.overall == "indeterminate"


# ---------------------------------------------------------------- check_lemma2_ii

def test_lemma2ii_ray_growth_equality():
    seq = fam(kind="ray_growth", gamma=1, N=64)
    g = seq.info["effective_exponent"]
    rep = hz.check_lemma2_ii(seq, 1.0, [2, 4, 8], hz.PowerGrowth(g), g)
    assert rep.overall == "pass"
    eta = [r for r in rep.records if r.name == "eta_le_tau"][0]
    assert eta.lhs == g


def test_lemma2ii_binomial_constant_h():
    rep = hz.check_lemma2_ii(fam(kind="binomial", N=64), 2.0, [4, 8], hz.PowerGrowth(0.0, 2.0), 0.0)
    assert rep.overall == "pass"
    assert [r for r in rep.records if r.name == "eta_le_tau"][0].lhs == 0.0


def test_lemma2ii_chebyshev_eta():
    rep = hz.check_lemma2_ii(fam(kind="chebyshev_on_segment", L=4, N=64), 2.0, [4, 8], hz.PowerGrowth(1.0, 2.0), 1.0)
    assert [r for r in rep.records if r.name == "eta_le_tau"][0].lhs == 1.0


def test_lemma2ii_negative_control():
    rep = hz.check_lemma2_ii(fam(kind="ray_growth", gamma=1, N=64), 1.0, [2, 4], hz.PowerGrowth(0.5), 1.0)
    assert rep.outcome == "HypothesisViolated"


# ---------------------------------------------------------------- check_lemma3

def test_lemma3_binomial():
    rep = hz.check_lemma3(fam(kind="binomial", N=256), [2.0], 0.0, tol=0.05)
    assert rep.overall == "pass"
    worst = max(r.lhs for r in rep.conclusion_records)
    assert worst == pytest.approx(1 + 2 / 128) and worst <= 1.016 <= 1.05


def test_lemma3_ray_growth_equality():
    seq = fam(kind="ray_growth", gamma=1, N=64)
    rep = hz.check_lemma3(seq, [1.0, 2.0, 4.0], 1.0, tol=1e-12)
    assert rep.overall == "pass"
    for r in rep.conclusion_records:
        assert r.lhs == pytest.approx(r.rhs / (1 + 1e-12), rel=1e-12)


def test_lemma3_constant():
    assert hz.check_lemma3(fam(kind="constant", N=8), [1.0], 0.0).overall == "pass"


def test_lemma3_negative_control():
    # (1 - z/n)^{n^2} with k_n = n: the reciprocal tail sum per weight is n, not small
    rep = hz.check_lemma3(fam(kind="stacked_binomial", N=64), [2.0], 0.0)
    assert rep.outcome == "HypothesisViolated"


# ---------------------------------------------------------------- check_theorem1

def test_theorem1_binomial_on_ray():
    rep = hz.check_theorem1(fam(kind="binomial", N=256), RAY, [2.0], tol=0.02)
    assert rep.overall == "pass"
    assert max(r.lhs for r in rep.conclusion_records) <= 1.016
    assert any("E_R^* = E_R" in n for n in rep.notes)


def test_theorem1_constant_trivial():
    assert hz.check_theorem1(fam(kind="constant", N=8), RAY, [1.0, 4.0]).overall == "pass"


def test_theorem1_negative_control():
    rep = hz.check_theorem1(fam(kind="ray_growth", gamma=1, N=64), RAY, [2.0])
    assert rep.outcome == "HypothesisViolated"
    with pytest.raises(HypothesisViolated):
        rep.raise_for_status()


def test_theorem1_bounded_set_is_not_nonthin():
    rep = hz.check_theorem1(fam(kind="constant", N=8), PlanarSet.of(Disk(0j, 1.0)), [2.0], nonthin_s=2.0)
    assert rep.overall != "pass"


# ---------------------------------------------------------------- check_theorem4

def test_construct_Rn_binomial():
    seq = fam(kind="binomial", N=64)
    Rn, n_s = hz.construct_Rn(seq, 1.0)
    assert n_s == sorted(n_s) and all(n_s[s - 1] >= s for s in range(1, len(n_s) + 1))
    assert all(0 < R <= n for n, R in Rn.items())


def test_theorem4_ray_growth():
    seq = fam(kind="ray_growth", gamma=1, N=64)
    rep = hz.check_theorem4(seq, hz.PowerGrowth(1.0))
    assert rep.overall == "pass"
    tail = [r for r in rep.conclusion_records if r.name == "tail_sum_beyond_Rn"][0]
    assert tail.lhs == 0.0


def test_theorem4_binomial():
    rep = hz.check_theorem4(fam(kind="binomial", N=64), hz.PowerGrowth(1.0))
    assert rep.overall == "pass"
    assert rep.provenance["kappa"] <= 1.0


def test_theorem4_precondition_indeterminate():
    rep = hz.check_theorem4(fam(kind="binomial", N=32, decay={"rate": 1, "power": 2}), hz.PowerGrowth(1.0))
    assert rep.overall == "indeterminate"


def test_theorem4_negative_control():
    rep = hz.check_theorem4(fam(kind="ray_growth", gamma=1, N=64), hz.PowerGrowth(0.5))
    assert rep.outcome == "HypothesisViolated"


# ---------------------------------------------------------------- check_theorem2

def test_theorem2_ray_growth():
    seq = fam(kind="ray_growth", gamma=1, N=128)
    rep = hz.check_theorem2(seq, RAY, hz.PowerGrowth(1.0), 1.0, [1.0, 2.0, 4.0], [4, 8, 16, 32], tol=0.1)
    assert rep.overall == "pass"
    assert rep.provenance["beta"] == pytest.approx(1.0, abs=0.05)
    assert rep.provenance["kappa"] <= 1.0 / rep.provenance["beta"] + 0.1


def test_theorem2_binomial_reduces_to_theorem1():
    rep = hz.check_theorem2(fam(kind="binomial", N=128), RAY, hz.PowerGrowth(0.0), 0.0, [2.0], [4, 8, 16, 32])
    assert rep.overall == "pass"
    assert all(r.rhs == pytest.approx(1.05) for r in rep.conclusion_records if r.name == "growth_le_C0_power")


def test_theorem2_negative_control():
    rep = hz.check_theorem2(fam(kind="ray_growth", gamma=1, N=64), RAY, hz.PowerGrowth(0.5), 0.5, [2.0], [4, 8, 16, 32])
    assert rep.outcome == "HypothesisViolated"


# ---------------------------------------------------------------- Bernstein-Walsh

def _circle_samples():
    t = 2 * np.pi * (np.arange(40) + 0.5) / 40
    return np.concatenate([r * np.exp(1j * t) for r in (2.5, 3, 4, 6, 10)])


def test_bernstein_chebyshev():
    Q = fam(kind="chebyshev_on_segment", L=4, N=8)[8]
    rep = hz.check_bernstein(Q, SEG4, _circle_samples())
    assert rep.overall == "pass" and len(rep.conclusion_records) == 200


def test_bernstein_negative_control():
    from growthlab.genus_zero import GenusZeroFunction

    Q = fam(kind="chebyshev_on_segment", L=4, N=8)[8]
    Q3 = GenusZeroFunction(3.0, Q.origin_order, Q.roots, Q.multiplicities, log_scale=Q.log_scale)
    assert hz.check_bernstein(Q3, SEG4, _circle_samples()).outcome == "HypothesisViolated"


# ---------------------------------------------------------------- exact chains over the corpus

CORPUS = [
    {"kind": "binomial"}, {"kind": "stacked_binomial"}, {"kind": "ray_growth", "gamma": 1},
    {"kind": "ray_growth", "gamma": 2.5}, {"kind": "chebyshev_on_segment", "L": 4},
    {"kind": "power_law_zeros", "c": 1, "p": 2}, {"kind": "random_disk_zeros", "rho": 3, "seed": 1},
    {"kind": "constant"},
]


@pytest.mark.parametrize("desc", CORPUS, ids=lambda d: f"{d['kind']}-{d.get('gamma', '')}")
def test_exact_chains_and_window_monotonicity(desc):
    small = make_family(dict(desc, N=32))
    big = make_family(dict(desc, N=64))
    for seq in (small, big):
        r1 = hz.check_lemma2_i(seq, [0.5, 1, 2, 4])
        r2 = hz.check_lemma2_ii(seq, 0.5, [1, 2, 4], hz.PowerGrowth(1.0), 1.0)
        assert all(r.status == "pass" for r in r1.conclusion_records if r.name == "sup_chain_log")
        assert all(r.status == "pass" for r in r2.conclusion_records if r.name == "ratio_inequality_log")
