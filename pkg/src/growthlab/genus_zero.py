"""Genus-zero entire functions given by their zeros.

A function is stored in factored form

    P(z) = a * z**alpha * prod_j (1 - z/z_j)

with a finite explicit multiset of zeros (unique values plus multiplicities)
and an optional :class:`TailModel` describing infinitely many zeros beyond a
cutoff radius in closed form.  Every quantity here is computed in log space
so that high-degree members (``(1+z)**512`` and the like) never overflow.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy import optimize, special

from .errors import InsufficientData, NoConvergence, TailTooClose

__all__ = [
    "NEG_INF",
    "LogZero",
    "TailModel",
    "GenusZeroFunction",
    "d_star",
    "log_abs_eval",
    "log_abs_eval_bound",
    "sup_norm",
    "log_sup_norm",
    "jensen_mean_closed",
    "log_jensen_mean",
    "jensen_mean_quadrature",
    "zero_count",
    "tail_reciprocal_sum",
    "split_at",
    "order_estimate",
    "order_estimate_from_log",
]

# Number of power-series terms used for the tail's log-modulus.
_TAIL_TERMS = 8


class LogZero(float):
    """Typed sentinel for log|P(z)| at a zero of P.

    It is a float equal to ``-inf`` so arithmetic keeps working, but can be
    recognised with ``isinstance`` and is printed as ``NEG_INF`` in reports.
    """

    def __new__(cls):
        return super().__new__(cls, "-inf")

    def __repr__(self):
        return "NEG_INF"

    __str__ = __repr__


NEG_INF = LogZero()


def _as_scalar_log(value):
    value = float(value)
    if value == -math.inf:
        return NEG_INF
    return value


# --------------------------------------------------------------------------
# Tail of zeros
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TailModel:
    """Zeros beyond a cutoff radius described by a power law.

    kind
        ``"empty"``, ``"power_law"`` (zeros ``c*j**p`` on the positive axis)
        or ``"conjugate_pair_power_law"`` (zeros ``c*j**p*exp(+-i*angle)``).
    c, p, start_index
        Zeros use indices ``j >= start_index``; ``p > 1`` keeps the
        reciprocal sum finite.
    """

    kind: str = "empty"
    c: float = 1.0
    p: float = 2.0
    start_index: int = 1
    angle: float = 0.0

    def __post_init__(self):
        if self.kind not in ("empty", "power_law", "conjugate_pair_power_law"):
            raise ValueError(f"unknown tail kind {self.kind!r}")
        if self.kind != "empty":
            if not self.c > 0:
                raise ValueError("tail c must be positive")
            if not self.p > 1:
                raise ValueError("tail exponent p must exceed 1")
            if int(self.start_index) != self.start_index or self.start_index < 1:
                raise ValueError("tail start_index must be a positive integer")

    @classmethod
    def power_law(cls, c, p, start_index=1):
        return cls("power_law", float(c), float(p), int(start_index))

    @classmethod
    def conjugate_pairs(cls, c, p, start_index=1, angle=math.pi / 2):
        return cls("conjugate_pair_power_law", float(c), float(p), int(start_index), float(angle))

    @property
    def is_empty(self):
        return self.kind == "empty"

    @property
    def _mult(self):
        return 2 if self.kind == "conjugate_pair_power_law" else 1

    @property
    def cutoff(self):
        """Smallest modulus of any tail zero."""
        if self.is_empty:
            return math.inf
        return self.c * self.start_index**self.p

    def _first_index(self, R, strict=False):
        # smallest j >= start_index with c*j**p >= R (or > R when strict)
        j = max(self.start_index, math.ceil((max(R, 0.0) / self.c) ** (1.0 / self.p)))
        hit = (lambda m: m > R) if strict else (lambda m: m >= R)
        while j > self.start_index and hit(self.c * (j - 1) ** self.p):
            j -= 1
        while not hit(self.c * j**self.p):
            j += 1
        return j

    def _zeta_from(self, exponent, j):
        return float(special.zeta(exponent, j))

    def count(self, R):
        """Number of tail zeros with modulus <= R (with multiplicity)."""
        if self.is_empty or R < self.cutoff:
            return 0
        last = self._first_index(R, strict=True) - 1
        return self._mult * max(0, last - self.start_index + 1)

    def abs_reciprocal_sum(self, R=0.0, strict=False):
        """Sum of 1/|z_j| over tail zeros with |z_j| >= R (> R if strict)."""
        if self.is_empty:
            return 0.0
        j = self._first_index(R, strict)
        return self._mult * self._zeta_from(self.p, j) / self.c

    def reciprocal_sum(self, R=0.0, strict=False):
        """Sum of 1/z_j over tail zeros with |z_j| >= R (> R if strict)."""
        if self.is_empty:
            return 0j
        s = self.abs_reciprocal_sum(R, strict)
        if self.kind == "conjugate_pair_power_law":
            return complex(s * math.cos(self.angle))
        return complex(s)

    def power_sum(self, k):
        """Sum of z_j**(-k) over the whole tail."""
        if self.is_empty:
            return 0j
        base = self._zeta_from(k * self.p, self.start_index) / self.c**k
        if self.kind == "conjugate_pair_power_law":
            return complex(2.0 * base * math.cos(k * self.angle))
        return complex(base)

    def abs_power_sum(self, k):
        if self.is_empty:
            return 0.0
        return self._mult * self._zeta_from(k * self.p, self.start_index) / self.c**k

    def log_abs_contribution(self, z):
        """Sum of log|1 - z/z_j| over the tail, with a certified error bound.

        Uses the truncated series ``-Re sum_k (z**k S_k)/k`` with closed-form
        power sums S_k.  For |z/z_j| <= 1/2 the remainder of each term is
        bounded by ``|w|**(K+1) / ((K+1)(1-|w|)) <= 2|w|**(K+1)/(K+1)``.
        Returns ``(value, error_bound)`` arrays shaped like ``z``.
        """
        z = np.asarray(z, dtype=complex)
        if self.is_empty:
            return np.zeros(z.shape), np.zeros(z.shape)
        if np.any(np.abs(z) > self.cutoff / 2):
            raise TailTooClose(
                f"|z| = {np.max(np.abs(z)):.6g} exceeds half the tail cutoff {self.cutoff:.6g}"
            )
        total = np.zeros(z.shape, dtype=complex)
        zk = np.ones(z.shape, dtype=complex)
        for k in range(1, _TAIL_TERMS + 1):
            zk = zk * z
            total += zk * self.power_sum(k) / k
        K1 = _TAIL_TERMS + 1
        err = 2.0 / K1 * np.abs(z) ** K1 * self.abs_power_sum(K1)
        return -total.real, err

    def to_dict(self):
        if self.is_empty:
            return {"kind": "empty"}
        out = {"kind": self.kind, "c": self.c, "p": self.p, "start_index": self.start_index}
        if self.kind == "conjugate_pair_power_law":
            out["angle"] = self.angle
        return out

    @classmethod
    def from_dict(cls, d):
        if d is None or d.get("kind", "empty") == "empty":
            return cls()
        return cls(
            d["kind"], float(d["c"]), float(d["p"]), int(d.get("start_index", 1)), float(d.get("angle", 0.0))
        )


EMPTY_TAIL = TailModel()


# --------------------------------------------------------------------------
# The function type
# --------------------------------------------------------------------------


def _readonly(a):
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class GenusZeroFunction:
    """``a * exp(log_scale) * z**origin_order * prod (1 - z/z_j)**m_j * tail``.

    ``log_scale`` lets leading coefficients like ``exp(-n**2)`` be stored
    without underflow.  Use :meth:`from_zeros` to build one from a plain
    list of zeros with repetition.
    """

    leading_coeff: complex = 1.0 + 0j
    origin_order: int = 0
    roots: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=complex))
    multiplicities: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))
    tail: TailModel = EMPTY_TAIL
    log_scale: float = 0.0

    def __post_init__(self):
        roots = np.array(self.roots, dtype=complex).ravel()
        mult = np.array(self.multiplicities, dtype=np.int64).ravel()
        if roots.shape != mult.shape:
            raise ValueError("roots and multiplicities must have the same length")
        if np.any(roots == 0):
            raise ValueError("explicit zeros must be nonzero; use origin_order for zeros at 0")
        if np.any(mult < 1):
            raise ValueError("multiplicities must be positive")
        if self.leading_coeff == 0:
            raise ValueError("leading coefficient must be nonzero")
        if int(self.origin_order) != self.origin_order or self.origin_order < 0:
            raise ValueError("origin_order must be a nonnegative integer")
        tail = self.tail if self.tail is not None else EMPTY_TAIL
        if not tail.is_empty and roots.size and np.max(np.abs(roots)) >= tail.cutoff:
            raise ValueError("tail cutoff must exceed every explicit zero modulus")
        object.__setattr__(self, "roots", _readonly(roots))
        object.__setattr__(self, "multiplicities", _readonly(mult))
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "leading_coeff", complex(self.leading_coeff))
        object.__setattr__(self, "origin_order", int(self.origin_order))
        object.__setattr__(self, "log_scale", float(self.log_scale))

    @classmethod
    def from_zeros(cls, zeros=(), leading_coeff=1.0, origin_order=0, tail=None, log_scale=0.0):
        zeros = np.asarray(zeros, dtype=complex).ravel()
        if zeros.size:
            roots, mult = np.unique(zeros, return_counts=True)
        else:
            roots, mult = zeros, np.zeros(0, dtype=np.int64)
        return cls(leading_coeff, origin_order, roots, mult, tail or EMPTY_TAIL, log_scale)

    @property
    def zeros(self):
        """Explicit zeros expanded with repetition."""
        return np.repeat(self.roots, self.multiplicities)

    @property
    def log_abs_leading(self):
        return math.log(abs(self.leading_coeff)) + self.log_scale

    @property
    def is_polynomial(self):
        return self.tail.is_empty

    @property
    def degree(self):
        if not self.is_polynomial:
            return math.inf
        return self.origin_order + int(self.multiplicities.sum())

    def __eq__(self, other):
        if not isinstance(other, GenusZeroFunction):
            return NotImplemented
        return (
            self.leading_coeff == other.leading_coeff
            and self.origin_order == other.origin_order
            and np.array_equal(self.roots, other.roots)
            and np.array_equal(self.multiplicities, other.multiplicities)
            and self.tail == other.tail
            and self.log_scale == other.log_scale
        )

    __hash__ = None

    def __repr__(self):
        return (
            f"GenusZeroFunction(a={self.leading_coeff!r}, alpha={self.origin_order}, "
            f"zeros={self.multiplicities.sum()} ({self.roots.size} distinct), tail={self.tail.kind})"
        )

    # JSON ---------------------------------------------------------------

    def to_dict(self):
        out = {
            "leading_coeff": [self.leading_coeff.real, self.leading_coeff.imag],
            "origin_order": self.origin_order,
            "zeros": [[r.real, r.imag, int(m)] for r, m in zip(self.roots.tolist(), self.multiplicities.tolist())],
            "tail": None if self.tail.is_empty else self.tail.to_dict(),
        }
        if self.log_scale:
            out["log_scale"] = self.log_scale
        return out

    @classmethod
    def from_dict(cls, d):
        zeros = d.get("zeros", [])
        roots = [complex(z[0], z[1]) for z in zeros]
        mult = [int(z[2]) if len(z) > 2 else 1 for z in zeros]
        lc = d.get("leading_coeff", [1.0, 0.0])
        return cls(
            complex(lc[0], lc[1]),
            int(d.get("origin_order", 0)),
            roots,
            mult,
            TailModel.from_dict(d.get("tail")),
            float(d.get("log_scale", 0.0)),
        )

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


# --------------------------------------------------------------------------
# Per-function quantities
# --------------------------------------------------------------------------


def d_star(P):
    """alpha + #{|z_j| <= 1} + sum_{|z_j| > 1} 1/|z_j|, tail included."""
    mod = np.abs(P.roots)
    inner = mod <= 1.0
    value = P.origin_order + float(P.multiplicities[inner].sum())
    value += float(np.sum(P.multiplicities[~inner] / mod[~inner]))
    if not P.tail.is_empty:
        value += P.tail.count(1.0) + P.tail.abs_reciprocal_sum(1.0, strict=True)
    return value


def log_abs_eval_bound(P, z):
    """Vectorised log|P(z)| together with the certified tail error.

    Zeros of P give ``-inf``.  Raises :class:`TailTooClose` if any point lies
    beyond half the tail cutoff.
    """
    z = np.asarray(z, dtype=complex)
    tail_val, tail_err = P.tail.log_abs_contribution(z)
    out = np.full(z.shape, P.log_abs_leading)
    with np.errstate(divide="ignore"):
        if P.origin_order:
            out = out + P.origin_order * np.log(np.abs(z))
        if P.roots.size:
            flat = z.reshape(-1)
            acc = np.empty(flat.shape)
            inv = 1.0 / P.roots
            m = P.multiplicities.astype(float)
            for lo in range(0, flat.size, 4096):
                chunk = flat[lo : lo + 4096]
                acc[lo : lo + 4096] = np.log(np.abs(1.0 - chunk[:, None] * inv[None, :])) @ m
            out = out + acc.reshape(z.shape)
    return out + tail_val, tail_err


def log_abs_eval(P, z):
    """log|P(z)|; NEG_INF at zeros of P (including z = 0 when alpha > 0).

    Accepts scalars or arrays; arrays keep raw ``-inf`` entries.
    """
    value, _ = log_abs_eval_bound(P, z)
    if np.ndim(value) == 0:
        return _as_scalar_log(value)
    return value


class SupNorm(NamedTuple):
    log_value: float
    angle: float
    grid_size: int

    @property
    def value(self):
        return math.exp(self.log_value)


def log_sup_norm(P, R, grid_size=4096, rtol=1e-10, full_output=False):
    """log of max |P| over the closed disk |z| <= R.

    By the maximum principle only the circle |z| = R is searched: a uniform
    grid of ``grid_size`` angles followed by a bounded scalar refinement in
    the two cells around the best grid angle.
    """
    if R <= 0:
        raise ValueError("R must be positive")
    t = 2.0 * np.pi * np.arange(grid_size) / grid_size
    vals = log_abs_eval_bound(P, R * np.exp(1j * t))[0]
    k = int(np.argmax(vals))
    best, best_t = float(vals[k]), float(t[k])
    if np.isfinite(best):
        h = 2.0 * np.pi / grid_size

        def neg(theta):
            return -float(log_abs_eval_bound(P, R * np.exp(1j * theta))[0])

        res = optimize.minimize_scalar(
            neg, bounds=(best_t - h, best_t + h), method="bounded", options={"xatol": rtol * h}
        )
        if -res.fun > best:
            best, best_t = -float(res.fun), float(res.x) % (2.0 * np.pi)
    out = SupNorm(_as_scalar_log(best), best_t, grid_size)
    return out if full_output else out.log_value


def sup_norm(P, R, grid_size=4096, rtol=1e-10, full_output=False):
    """max_{|z|<=R} |P(z)|.  See :func:`log_sup_norm`."""
    res = log_sup_norm(P, R, grid_size, rtol, full_output=True)
    return res if full_output else res.value


def log_jensen_mean(P, R):
    """log C(P, R) from the closed form |a| R**alpha prod max(1, R/|z_j|)."""
    if R <= 0:
        raise ValueError("R must be positive")
    if R > P.tail.cutoff:
        raise TailTooClose(f"R = {R} exceeds tail cutoff {P.tail.cutoff}")
    mod = np.abs(P.roots)
    inner = mod < R
    value = P.log_abs_leading + P.origin_order * math.log(R)
    value += float(np.sum(P.multiplicities[inner] * np.log(R / mod[inner])))
    return value


def jensen_mean_closed(P, R):
    return math.exp(log_jensen_mean(P, R))


def jensen_mean_quadrature(P, R, tol=1e-10, min_nodes=64, max_nodes=2**22):
    """C(P, R) by the periodic trapezoid rule on log|P(R e^{it})|.

    The node count doubles (reusing earlier nodes) until two successive
    circle averages of log|P| differ by less than ``tol``.  When a zero sits
    within relative distance 1e-9 of the circle, R is nudged outward by the
    same relative amount and a ``RuntimeWarning`` is issued.
    """
    mod = np.abs(P.roots)
    if mod.size and np.min(np.abs(mod - R)) < 1e-9 * R:
        R = R * (1.0 + 1e-9)
        warnings.warn("zero within 1e-9 of the quadrature circle; radius perturbed outward", RuntimeWarning)

    def f(t):
        return log_abs_eval_bound(P, R * np.exp(1j * t))[0]

    n = min_nodes
    total = float(np.sum(f(2.0 * np.pi * np.arange(n) / n)))
    prev = total / n
    while True:
        if 2 * n > max_nodes:
            raise NoConvergence(f"trapezoid rule did not reach tol={tol} with {max_nodes} nodes")
        odd = 2.0 * np.pi * (np.arange(n) + 0.5) / n
        total += float(np.sum(f(odd)))
        n *= 2
        cur = total / n
        if abs(cur - prev) < tol:
            return math.exp(cur)
        prev = cur


def zero_count(P, R):
    """eta(P, R): zeros with 0 < |z| <= R, counted with multiplicity."""
    inner = np.abs(P.roots) <= R
    return int(P.multiplicities[inner].sum()) + P.tail.count(R)


def tail_reciprocal_sum(P, R, strict=False, absolute=False):
    """Sum of 1/z_j over zeros with |z_j| >= R (> R if ``strict``).

    With ``absolute=True`` returns the sum of 1/|z_j| instead.
    """
    mod = np.abs(P.roots)
    sel = mod > R if strict else mod >= R
    if absolute:
        return float(np.sum(P.multiplicities[sel] / mod[sel])) + P.tail.abs_reciprocal_sum(R, strict)
    return complex(np.sum(P.multiplicities[sel] / P.roots[sel])) + P.tail.reciprocal_sum(R, strict)


def split_at(P, R):
    """Split P = Q * H with Q keeping a, alpha and zeros |z_j| <= R."""
    if not P.tail.is_empty and R >= P.tail.cutoff:
        raise ValueError("split radius must be below the tail cutoff")
    inner = np.abs(P.roots) <= R
    Q = GenusZeroFunction(P.leading_coeff, P.origin_order, P.roots[inner], P.multiplicities[inner], EMPTY_TAIL, P.log_scale)
    H = GenusZeroFunction(1.0, 0, P.roots[~inner], P.multiplicities[~inner], P.tail)
    return Q, H


# --------------------------------------------------------------------------
# Order from Taylor coefficients
# --------------------------------------------------------------------------


def order_estimate_from_log(log_abs_coeffs):
    """Order surrogate from log|a_n| (``-inf`` marks a zero coefficient).

    Returns the maximum of ``n log n / log(1/|a_n|)`` over the upper half of
    the available indices.  This is a finite-window estimate of a limsup,
    not the limit itself.  Coefficients with |a_n| >= 1 (n >= 2) make the
    ratio unbounded and yield ``inf``.
    """
    la = np.asarray(log_abs_coeffs, dtype=float)
    nonzero = np.isfinite(la)
    if np.count_nonzero(nonzero) < 8:
        raise InsufficientData("need at least 8 nonzero coefficients")
    n = np.arange(la.size)
    sel = (n >= la.size // 2) & nonzero & (n >= 2)
    if not np.any(sel):
        return 0.0
    num = n[sel] * np.log(n[sel])
    den = -la[sel]
    with np.errstate(divide="ignore"):
        ratio = np.where(den > 0, num / np.where(den > 0, den, 1.0), np.inf)
    return float(np.max(ratio))


def order_estimate(coeffs):
    """Order surrogate from complex Taylor coefficients a_0, a_1, ...

    Coefficients that underflow to 0 are skipped; use
    :func:`order_estimate_from_log` for very small magnitudes.
    """
    a = np.abs(np.asarray(coeffs, dtype=complex))
    with np.errstate(divide="ignore"):
        return order_estimate_from_log(np.log(a))
