"""Indexed families (P_n, k_n) and finite-window surrogates of their limits.

The asymptotic quantities

    C_0   = limsup C(P_n, 1)**(1/k_n)
    C_0*  = liminf C(P_n, 1)**(1/k_n)
    eta(R) = limsup eta(P_n, R) / k_n

are replaced by max/min over the trailing window ``[ceil(N/2), N]`` together
with a least-squares trend slope against 1/n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from . import genus_zero as gz
from .errors import InvalidDescriptor, WeightViolation
from .genus_zero import GenusZeroFunction

__all__ = [
    "FunctionSequence",
    "SurrogateStat",
    "GrowthProfile",
    "make_family",
    "FAMILY_KINDS",
    "estimate_C0",
    "estimate_C0_star",
    "estimate_eta_R",
    "surrogate",
    "growth_profile",
]

# relative slack when validating k_n >= d*(P_n)
_WEIGHT_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class FunctionSequence:
    """A finite horizon of a sequence n -> (P_n, k_n), n = 1..N.

    Members are materialised at construction so the ``k_n >= d*(P_n)``
    standing assumption can be validated once.
    """

    name: str
    members: tuple
    weights: np.ndarray
    descriptor: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.shape != (len(self.members),):
            raise ValueError("one weight per member required")
        if len(self.members) == 0:
            raise ValueError("horizon must be positive")
        for n, (P, k) in enumerate(zip(self.members, w), start=1):
            if not k > 0:
                raise WeightViolation(f"{self.name}: k_{n} = {k} is not positive")
            ds = gz.d_star(P)
            if k < ds * (1 - _WEIGHT_RTOL):
                raise WeightViolation(f"{self.name}: k_{n} = {k} < d*(P_{n}) = {ds}")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "members", tuple(self.members))

    @classmethod
    def from_generator(cls, name, horizon, generator: Callable, weights: Callable, descriptor=None, info=None):
        members = [generator(n) for n in range(1, horizon + 1)]
        ks = [weights(n, P) for n, P in enumerate(members, start=1)]
        return cls(name, tuple(members), np.asarray(ks, dtype=float), dict(descriptor or {}), dict(info or {}))

    @property
    def horizon(self):
        return len(self.members)

    @property
    def window(self):
        N = self.horizon
        return (math.ceil(N / 2), N)

    def window_indices(self):
        lo, hi = self.window
        return np.arange(lo, hi + 1)

    def __getitem__(self, n):
        if not 1 <= n <= self.horizon:
            raise IndexError(n)
        return self.members[n - 1]

    def k(self, n):
        return float(self.weights[n - 1])

    def __len__(self):
        return self.horizon

    def __iter__(self):
        for n in range(1, self.horizon + 1):
            yield n, self.members[n - 1], float(self.weights[n - 1])


class SurrogateStat(NamedTuple):
    value: float
    trend_slope: float
    window: tuple
    index: int
    values: np.ndarray


def surrogate(ns, values, mode="max"):
    """max (limsup) or min (liminf) over a window, with slope against 1/n."""
    ns = np.asarray(ns)
    values = np.asarray(values, dtype=float)
    if ns.size == 0:
        raise ValueError("empty window")
    pick = np.argmax if mode == "max" else np.argmin
    i = int(pick(values))
    finite = np.isfinite(values)
    if np.count_nonzero(finite) >= 2:
        slope = float(np.polyfit(1.0 / ns[finite], values[finite], 1)[0])
    else:
        slope = 0.0
    return SurrogateStat(float(values[i]), slope, (int(ns[0]), int(ns[-1])), int(ns[i]), values)


def _c1_powers(seq):
    ns = seq.window_indices()
    vals = [math.exp(gz.log_jensen_mean(seq[n], 1.0) / seq.k(n)) for n in ns]
    return ns, np.array(vals)


def estimate_C0(seq):
    return surrogate(*_c1_powers(seq), mode="max")


def estimate_C0_star(seq):
    return surrogate(*_c1_powers(seq), mode="min")


def estimate_eta_R(seq, R):
    ns = seq.window_indices()
    vals = np.array([gz.zero_count(seq[n], R) / seq.k(n) for n in ns])
    return surrogate(ns, vals, mode="max")


class GrowthProfile(NamedTuple):
    ns: np.ndarray
    ks: np.ndarray
    radii: np.ndarray
    values: np.ndarray  # shape (len(ns), len(radii)), ||P_n||_R ** (1/k_n)


def growth_profile(seq, R_grid, ns=None, grid_size=4096):
    """Table of ||P_n||_R**(1/k_n) over the window (or the given ``ns``)."""
    ns = seq.window_indices() if ns is None else np.asarray(ns)
    radii = np.asarray(R_grid, dtype=float)
    ks = np.array([seq.k(n) for n in ns])
    values = np.empty((ns.size, radii.size))
    for i, n in enumerate(ns):
        for j, R in enumerate(radii):
            values[i, j] = math.exp(gz.log_sup_norm(seq[n], R, grid_size=grid_size) / ks[i])
    return GrowthProfile(ns, ks, radii, values)


# --------------------------------------------------------------------------
# Built-in families
# --------------------------------------------------------------------------


def _num(desc, key, default=None, *, positive=False, minimum=None, above=None):
    if key not in desc:
        if default is None:
            raise InvalidDescriptor("missing required parameter", key)
        return default
    try:
        value = float(desc[key])
    except (TypeError, ValueError):
        raise InvalidDescriptor(f"expected a number, got {desc[key]!r}", key) from None
    if not math.isfinite(value):
        raise InvalidDescriptor("must be finite", key)
    if positive and not value > 0:
        raise InvalidDescriptor("must be positive", key)
    if above is not None and not value > above:
        raise InvalidDescriptor(f"must exceed {above}", key)
    if minimum is not None and value < minimum:
        raise InvalidDescriptor(f"must be >= {minimum}", key)
    return value


def _binomial(desc):
    def gen(n):
        return GenusZeroFunction(1.0, 0, [float(n)], [n])

    return gen, lambda n, P: float(n), {}


def _stacked_binomial(desc):
    # (1 - z/n)**(n*n) with k_n = n; d* = n, but the zeros pile up too fast
    def gen(n):
        return GenusZeroFunction(1.0, 0, [float(n)], [n * n])

    return gen, lambda n, P: float(n), {}


def _ray_growth(desc):
    gamma = _num(desc, "gamma", positive=True)
    scale = 1 if gamma <= 1 else math.ceil(gamma)

    def mult(n):
        return math.floor(gamma * n)

    def gen(n):
        m = mult(n)
        return GenusZeroFunction(1.0, 0, [-1.0] if m else [], [m] if m else [])

    return gen, lambda n, P: float(scale * n), {"mult": mult, "scale": scale, "gamma": gamma}


def chebyshev_zeros(L, n):
    j = np.arange(1, n + 1)
    x = np.cos((2 * j - 1) * np.pi / (2 * n))
    x[np.abs(x) < 1e-12] = 0.0
    return 0.5 * L * x


def _chebyshev(desc):
    L = _num(desc, "L", positive=True)

    def gen(n):
        # T_n(2z/L) = 2**(n-1) (2/L)**n prod (z - x_j), rewritten in genus-zero form
        x = chebyshev_zeros(L, n)
        nz = x[x != 0]
        alpha = int(np.count_nonzero(x == 0))
        log_a = (n - 1) * math.log(2) + n * math.log(2 / L) + float(np.sum(np.log(np.abs(nz))))
        sign = -1.0 if np.count_nonzero(nz > 0) % 2 else 1.0
        return GenusZeroFunction.from_zeros(nz, leading_coeff=sign, origin_order=alpha, log_scale=log_a)

    return gen, lambda n, P: float(n), {"L": L}


def _power_law(desc):
    c = _num(desc, "c", positive=True)
    p = _num(desc, "p", above=1.0)

    def gen(n):
        return GenusZeroFunction.from_zeros(c * np.arange(1, n + 1, dtype=float) ** p)

    return gen, lambda n, P: max(gz.d_star(P), 1.0), {}


def _random_disk(desc):
    rho = _num(desc, "rho", positive=True)
    if "seed" not in desc:
        raise InvalidDescriptor("random families need an explicit seed", "seed")
    try:
        seed = int(desc["seed"])
    except (TypeError, ValueError):
        raise InvalidDescriptor(f"expected an integer, got {desc['seed']!r}", "seed") from None

    def gen(n):
        rng = np.random.default_rng([seed, n])
        r = rho * np.sqrt(rng.random(n))
        t = 2 * np.pi * rng.random(n)
        z = r * np.exp(1j * t)
        z[z == 0] = rho * 1e-12
        return GenusZeroFunction.from_zeros(z)

    return gen, lambda n, P: gz.d_star(P), {"seed": seed}


def _constant(desc):
    return (lambda n: GenusZeroFunction()), (lambda n, P: 1.0), {}


FAMILY_KINDS = {
    "binomial": _binomial,
    "stacked_binomial": _stacked_binomial,
    "ray_growth": _ray_growth,
    "chebyshev_on_segment": _chebyshev,
    "power_law_zeros": _power_law,
    "random_disk_zeros": _random_disk,
    "constant": _constant,
}


def make_family(descriptor, N=None):
    """Build a :class:`FunctionSequence` from a descriptor dict.

    ``{"kind": "binomial", "N": 64}``; kinds are listed in ``FAMILY_KINDS``.
    An optional ``"decay": {"rate": r, "power": q}`` multiplies the leading
    coefficient by ``exp(-r * n**q)``.
    """
    if not isinstance(descriptor, dict):
        raise InvalidDescriptor("family descriptor must be an object")
    kind = descriptor.get("kind")
    if kind not in FAMILY_KINDS:
        raise InvalidDescriptor(f"unknown kind {kind!r}; expected one of {sorted(FAMILY_KINDS)}", "kind")
    if N is None:
        N = descriptor.get("N")
    if N is None:
        raise InvalidDescriptor("missing horizon", "N")
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)) or N < 1:
        raise InvalidDescriptor(f"horizon must be a positive integer, got {N!r}", "N")
    gen, weight, info = FAMILY_KINDS[kind](descriptor)

    decay = descriptor.get("decay")
    if decay is not None:
        if not isinstance(decay, dict):
            raise InvalidDescriptor("must be an object with rate and power", "decay")
        rate = _num(decay, "rate", minimum=0.0)
        power = _num(decay, "power", 1.0)
        base = gen

        def gen(n):
            P = base(n)
            return GenusZeroFunction(P.leading_coeff, P.origin_order, P.roots, P.multiplicities, P.tail,
                                     P.log_scale - rate * n**power)

    name = descriptor.get("name") or kind
    seq = FunctionSequence.from_generator(name, int(N), gen, weight, descriptor=dict(descriptor, N=int(N)))
    if kind == "ray_growth":
        ns = seq.window_indices()
        eff = np.array([info["mult"](n) / seq.k(n) for n in ns])
        info = dict(info, effective_exponent=float(eff.max()), effective_exponent_min=float(eff.min()))
        info.pop("mult")
    object.__setattr__(seq, "info", info)
    return seq
