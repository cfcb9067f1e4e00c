import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from growthlab import genus_zero as gz
from growthlab.errors import InvalidDescriptor, WeightViolation
from growthlab.families import (
    FAMILY_KINDS,
    FunctionSequence,
    chebyshev_zeros,
    estimate_C0,
    estimate_C0_star,
    estimate_eta_R,
    growth_profile,
    make_family,
    surrogate,
)
from growthlab.genus_zero import GenusZeroFunction


def test_binomial_member():
    seq = make_family({"kind": "binomial", "N": 8})
    P = seq[4]
    assert list(P.zeros) == [4.0] * 4
    assert seq.k(4) == 4
    assert gz.d_star(P) == pytest.approx(1.0)


def test_ray_growth_gamma_two_keeps_weight_invariant():
    seq = make_family({"kind": "ray_growth", "gamma": 2, "N": 8})
    P = seq[3]
    assert list(P.zeros) == [-1.0] * 6
    assert gz.d_star(P) == 6
    assert seq.k(3) == 6  # ceil(gamma) * n
    assert seq.info["effective_exponent"] == pytest.approx(1.0)


def test_ray_growth_fractional_effective_exponent():
    seq = make_family({"kind": "ray_growth", "gamma": 0.5, "N": 64})
    # floor(n/2)/n over the window 32..64
    assert seq.info["effective_exponent"] == pytest.approx(0.5)
    assert seq.info["effective_exponent_min"] == pytest.approx(16 / 33)


def test_weight_violation_is_a_hard_error():
    with pytest.raises(WeightViolation):
        FunctionSequence.from_generator("bad", 4, lambda n: GenusZeroFunction(1.0, n + 1), lambda n, P: float(n))


def test_chebyshev_degree_two_on_segment():
    seq = make_family({"kind": "chebyshev_on_segment", "L": 4, "N": 4})
    P = seq[2]
    assert sorted(P.zeros.real) == pytest.approx([-math.sqrt(2), math.sqrt(2)])
    # brute force max of |(x^2 - 2)/2| on a 10^4-point grid of [-2, 2]
    x = np.linspace(-2, 2, 10**4)
    assert np.max(np.abs((x**2 - 2) / 2)) == pytest.approx(1.0)
    assert np.max(np.exp(gz.log_abs_eval(P, x))) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("n", [1, 5, 8, 13])
def test_chebyshev_matches_numpy_chebval(n):
    seq = make_family({"kind": "chebyshev_on_segment", "L": 4, "N": n})
    z = np.array([0.3, 1.7, 2.5 + 0.4j, -3.1j])
    coef = np.zeros(n + 1)
    coef[n] = 1
    ref = np.polynomial.chebyshev.chebval(z / 2, coef)
    got = np.exp(gz.log_abs_eval(seq[n], z))
    assert got == pytest.approx(np.abs(ref), rel=1e-10)


def test_chebyshev_zeros_symmetric():
    x = chebyshev_zeros(4, 7)
    assert x == pytest.approx(-x[::-1], abs=1e-15)
    assert 0.0 in x


def test_descriptor_errors_name_the_field():
    with pytest.raises(InvalidDescriptor) as e:
        make_family({"kind": "ray_growth", "N": 4})
    assert e.value.field == "gamma"
    with pytest.raises(InvalidDescriptor) as e:
        make_family({"kind": "random_disk_zeros", "rho": 1, "N": 4})
    assert e.value.field == "seed"
    with pytest.raises(InvalidDescriptor) as e:
        make_family({"kind": "nope", "N": 4})
    assert e.value.field == "kind"
    with pytest.raises(InvalidDescriptor):
        make_family({"kind": "power_law_zeros", "c": 1, "p": 0.5, "N": 4})


def test_binomial_C0_is_one():
    seq = make_family({"kind": "binomial", "N": 64})
    assert estimate_C0(seq).value == 1.0
    assert estimate_C0_star(seq).value == 1.0


@pytest.mark.parametrize("gamma", [0.5, 1, 2, 3.5])
def test_ray_growth_C0_is_one(gamma):
    seq = make_family({"kind": "ray_growth", "gamma": gamma, "N": 32})
    assert estimate_C0(seq).value == pytest.approx(1.0, abs=1e-15)
    assert estimate_C0_star(seq).value == pytest.approx(1.0, abs=1e-15)


def test_chebyshev_C0_surrogate():
    # oracle: closed-form Jensen mean at R = 1 in high precision, max over n = 32..64
    mp = pytest.importorskip("mpmath")

    def c1(n, L=4):
        x = [L / 2 * mp.cos((2 * j - 1) * mp.pi / (2 * n)) for j in range(1, n + 1)]
        val = mp.mpf(2) ** (n - 1) * (mp.mpf(2) / L) ** n * mp.fprod([max(1, abs(t)) for t in x])
        return float(val ** (mp.mpf(1) / n))

    oracle = max(c1(n) for n in range(32, 65))
    assert oracle == pytest.approx(1.3664229353497763, rel=1e-12)
    stat = estimate_C0(make_family({"kind": "chebyshev_on_segment", "L": 4, "N": 64}))
    assert stat.value == pytest.approx(oracle, rel=1e-12)
    assert stat.window == (32, 64)


def test_eta_surrogate_examples():
    assert estimate_eta_R(make_family({"kind": "binomial", "N": 64}), 10).value == 0.0
    seq = make_family({"kind": "ray_growth", "gamma": 2, "N": 64})
    # k_n = 2n, 2n zeros at -1: ratio 1 = effective exponent
    assert estimate_eta_R(seq, 1.0).value == pytest.approx(1.0)
    assert estimate_eta_R(make_family({"kind": "chebyshev_on_segment", "L": 4, "N": 64}), 2).value == 1.0


def test_growth_profile_examples():
    prof = growth_profile(make_family({"kind": "binomial", "N": 32}), [2.0], ns=[32])
    assert prof.values[0, 0] == pytest.approx(1.0625, rel=1e-12)
    prof = growth_profile(make_family({"kind": "ray_growth", "gamma": 1, "N": 16}), [3.0], ns=[16])
    assert prof.values[0, 0] == pytest.approx(4.0, rel=1e-12)


def test_growth_profile_near_origin():
    seq = make_family({"kind": "random_disk_zeros", "rho": 3, "seed": 2, "N": 10})
    prof = growth_profile(seq, [1e-9], ns=[10])
    P = seq[10]
    expected = math.exp(gz.log_abs_eval(P, 0.0) / seq.k(10))
    assert prof.values[0, 0] == pytest.approx(expected, rel=1e-6)


def test_surrogate_window_and_trend():
    ns = np.arange(10, 21)  # the caller passes the window [ceil(N/2), N]
    stat = surrogate(ns, 1 + 1 / ns, "max")
    assert stat.window == (10, 20) and stat.index == 10
    assert stat.value == pytest.approx(1.1)
    assert stat.trend_slope == pytest.approx(1.0)
    assert surrogate(ns, 1 + 1 / ns, "min").value == pytest.approx(1.05)


def test_random_family_is_deterministic():
    a = make_family({"kind": "random_disk_zeros", "rho": 2, "seed": 5, "N": 20})
    b = make_family({"kind": "random_disk_zeros", "rho": 2, "seed": 5, "N": 20})
    c = make_family({"kind": "random_disk_zeros", "rho": 2, "seed": 6, "N": 20})
    for n in (1, 7, 20):
        assert a[n].roots.tobytes() == b[n].roots.tobytes()
        assert a[n].roots.tobytes() != c[n].roots.tobytes()


def test_decay_lowers_C0():
    seq = make_family({"kind": "binomial", "N": 32, "decay": {"rate": 1.0, "power": 2}})
    # C(P_n,1)^{1/n} = exp(-n)
    assert estimate_C0(seq).value == pytest.approx(math.exp(-16))


# ---------------------------------------------------------------- properties

def _corpus():
    return [
        {"kind": "binomial"}, {"kind": "stacked_binomial"}, {"kind": "ray_growth", "gamma": 1.5},
        {"kind": "chebyshev_on_segment", "L": 4}, {"kind": "power_law_zeros", "c": 1, "p": 2},
        {"kind": "random_disk_zeros", "rho": 3, "seed": 1}, {"kind": "constant"},
    ]


def test_corpus_covers_every_kind():
    assert {d["kind"] for d in _corpus()} == set(FAMILY_KINDS)


@pytest.mark.parametrize("desc", _corpus(), ids=lambda d: d["kind"])
def test_weights_dominate_d_star_and_C0_ge_C0_star(desc):
    seq = make_family(dict(desc, N=24))
    for n, P, k in seq:
        assert k >= gz.d_star(P) * (1 - 1e-12)
    assert estimate_C0(seq).value >= estimate_C0_star(seq).value


@given(st.integers(1, 128), st.floats(0.05, 50.0))
def test_binomial_profile_identity(n, R):
    seq = make_family({"kind": "binomial", "N": n})
    val = growth_profile(seq, [R], ns=[n]).values[0, 0]
    assert val == pytest.approx(1 + R / n, rel=1e-12)


@given(st.floats(0.1, 4.0), st.integers(1, 64), st.floats(0.05, 20.0))
def test_ray_growth_profile_identity(gamma, n, R):
    seq = make_family({"kind": "ray_growth", "gamma": gamma, "N": n})
    k = seq.k(n)
    val = growth_profile(seq, [R], ns=[n]).values[0, 0]
    assert val == pytest.approx((1 + R) ** (math.floor(gamma * n) / k), rel=1e-12)
