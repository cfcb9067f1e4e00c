"""Finite-scale checks of the growth lemmas and theorems.

Each ``check_*`` function evaluates a statement on a :class:`FunctionSequence`
(and a :class:`PlanarSet` where needed) and returns a
:class:`VerificationReport`.  Asymptotic hypotheses are replaced by window
surrogates with thresholds taken from :class:`Tolerances`; a surrogate that
lands inside its noise band makes the report ``indeterminate`` rather than
``fail``.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from . import genus_zero as gz
from . import potential as pt
from .errors import HypothesisViolated, InvalidDescriptor
from .families import estimate_C0, estimate_C0_star, estimate_eta_R, growth_profile

__all__ = [
    "Tolerances",
    "PowerGrowth",
    "TabulatedGrowth",
    "growth_from_dict",
    "Record",
    "VerificationReport",
    "rn_schedule",
    "check_lemma2_i",
    "check_lemma2_ii",
    "check_lemma3",
    "check_theorem1",
    "check_theorem4",
    "check_theorem2",
    "check_bernstein",
    "PASS",
    "FAIL",
    "INDETERMINATE",
]

PASS, FAIL, INDETERMINATE = "pass", "fail", "indeterminate"


@dataclass(frozen=True)
class Tolerances:
    """Every threshold the checks use.  All are overridable from a scenario."""

    tol: float = 0.05
    exact_rtol: float = 1e-10
    c0_zero: float = 0.05
    c0_band: float = 0.2
    c0_star_min: float = 0.1
    tail_max: float = 0.05
    kappa_max: float = 1e6
    nonthin_threshold: float = 0.1
    noise: float = 0.02
    beta_min: float = 0.1
    beta_residual_max: float = 0.1
    green_tol: float = 0.02
    leja_points: int = 48
    boundary_points: int = 2048
    quad_nodes: int = 1024

    def replace(self, **kw):
        unknown = set(kw) - set(self.__dataclass_fields__)
        if unknown:
            raise InvalidDescriptor(f"unknown tolerance(s) {sorted(unknown)}", "tolerances")
        return Tolerances(**{**asdict(self), **kw})


# --------------------------------------------------------------------------
# Growth functions h
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerGrowth:
    """h(r) = scale * (1 + r)**gamma."""

    gamma: float
    scale: float = 1.0

    def __call__(self, r):
        return self.scale * (1.0 + np.asarray(r, dtype=float)) ** self.gamma

    def log(self, r):
        return math.log(self.scale) + self.gamma * np.log1p(np.asarray(r, dtype=float))

    @property
    def exponent(self):
        return self.gamma

    def to_dict(self):
        return {"kind": "power", "gamma": self.gamma, "scale": self.scale}


@dataclass(frozen=True, eq=False)
class TabulatedGrowth:
    """Monotone table of h, interpolated linearly in (log r, log h)."""

    radii: tuple
    values: tuple

    def __post_init__(self):
        r, v = np.asarray(self.radii, float), np.asarray(self.values, float)
        if r.size < 2 or r.shape != v.shape:
            raise InvalidDescriptor("need matching radii/values with >= 2 entries", "growth")
        if np.any(np.diff(r) <= 0) or np.any(np.diff(v) < 0) or np.any(v <= 0) or np.any(r <= 0):
            raise InvalidDescriptor("table must be positive, radii increasing, values nondecreasing", "growth")

    def log(self, r):
        lr, lv = np.log(np.asarray(self.radii, float)), np.log(np.asarray(self.values, float))
        x = np.log(np.maximum(np.asarray(r, dtype=float), 1e-300))
        slope = (lv[-1] - lv[-2]) / (lr[-1] - lr[-2])
        out = np.interp(x, lr, lv)
        return np.where(x > lr[-1], lv[-1] + slope * (x - lr[-1]), out)

    def __call__(self, r):
        return np.exp(self.log(r))

    @property
    def exponent(self):
        """log h / log r at the last tabulated radius (r > 1 assumed)."""
        r, v = self.radii[-1], self.values[-1]
        return math.log(v) / math.log(r) if r > 1 else math.inf

    def to_dict(self):
        return {"kind": "table", "radii": list(self.radii), "values": list(self.values)}


def growth_from_dict(d):
    kind = d.get("kind", "power")
    if kind == "power":
        return PowerGrowth(float(d.get("gamma", 0.0)), float(d.get("scale", 1.0)))
    if kind == "table":
        return TabulatedGrowth(tuple(d["radii"]), tuple(d["values"]))
    raise InvalidDescriptor(f"unknown growth kind {kind!r}", "growth.kind")


def rn_schedule(spec):
    """R_n schedule from a callable or a name: ``sqrt``, ``linear[:c]``, ``log``."""
    if callable(spec):
        return spec
    name, _, arg = str(spec).partition(":")
    c = float(arg) if arg else 1.0
    if name == "sqrt":
        return lambda n: c * math.sqrt(n)
    if name == "linear":
        return lambda n: c * n
    if name == "log":
        return lambda n: c * math.log(n + 1)
    raise InvalidDescriptor(f"unknown R_n schedule {spec!r}", "R_n")


# --------------------------------------------------------------------------
# Reports
# --------------------------------------------------------------------------


class Record(NamedTuple):
    kind: str  # "hypothesis" or "conclusion"
    name: str
    at: str
    lhs: float
    rhs: float
    status: str

    @property
    def margin(self):
        return self.rhs - self.lhs


@dataclass
class VerificationReport:
    statement_id: str
    records: list = field(default_factory=list)
    provenance: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    reason: str = ""

    def hypothesis(self, name, value, threshold, status=None, at=""):
        if status is None:
            status = PASS if value <= threshold else FAIL
        self.records.append(Record("hypothesis", name, str(at), float(value), float(threshold), status))
        return status

    def conclusion(self, name, at, lhs, rhs, status=None):
        if status is None:
            status = PASS if lhs <= rhs else FAIL
        self.records.append(Record("conclusion", name, str(at), float(lhs), float(rhs), status))
        return status

    @property
    def hypothesis_records(self):
        return [r for r in self.records if r.kind == "hypothesis"]

    @property
    def conclusion_records(self):
        return [r for r in self.records if r.kind == "conclusion"]

    @property
    def overall(self):
        hyp = [r.status for r in self.hypothesis_records]
        con = [r.status for r in self.conclusion_records]
        if self.reason == "ConstructionFailed" or FAIL in hyp or FAIL in con:
            return FAIL
        if INDETERMINATE in hyp or INDETERMINATE in con:
            return INDETERMINATE
        return PASS

    @property
    def hypothesis_violated(self):
        return any(r.status == FAIL for r in self.hypothesis_records)

    @property
    def outcome(self):
        """Short label: PASS, HypothesisViolated, ConclusionFailed, ..."""
        if self.reason:
            return self.reason
        if self.hypothesis_violated:
            return "HypothesisViolated"
        if any(r.status == FAIL for r in self.conclusion_records):
            return "ConclusionFailed"
        return self.overall.upper()

    def worst(self, kind="conclusion"):
        recs = [r for r in self.records if r.kind == kind]
        return min(recs, key=lambda r: r.margin) if recs else None

    def raise_for_status(self):
        if self.hypothesis_violated:
            bad = [f"{r.name}@{r.at}" for r in self.hypothesis_records if r.status == FAIL]
            raise HypothesisViolated(f"{self.statement_id}: {', '.join(bad[:10])}")
        return self

    def summary(self):
        lines = [f"{self.statement_id}: {self.overall} ({self.outcome})"]
        for kind, label in (("hypothesis", "hypotheses"), ("conclusion", "conclusions")):
            recs = [r for r in self.records if r.kind == kind]
            if not recs:
                continue
            failed = sum(r.status == FAIL for r in recs)
            indet = sum(r.status == INDETERMINATE for r in recs)
            w = self.worst(kind)
            lines.append(
                f"  {label}: {len(recs)} records, {failed} failed, {indet} indeterminate; "
                f"worst margin {w.margin:.6g} ({w.name} at {w.at})"
            )
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def config_hash(obj):
    blob = json.dumps(obj, sort_keys=True, default=str, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _report(statement_id, seq, tols, **params):
    prov = {
        "family": seq.descriptor or {"name": seq.name},
        "window": list(seq.window),
        "tolerances": asdict(tols),
    }
    prov.update({k: (v.to_dict() if hasattr(v, "to_dict") else v) for k, v in params.items()})
    prov["config_hash"] = config_hash(prov)
    return VerificationReport(statement_id, provenance=prov)


def _exact_le(lhs, rhs, rtol):
    """lhs <= rhs up to relative floating error rtol (both in log space)."""
    return lhs <= rhs + rtol * max(1.0, abs(lhs), abs(rhs))


# --------------------------------------------------------------------------
# Shared hypothesis surrogates
# --------------------------------------------------------------------------


def _tail_surrogate(rep, seq, R, tols):
    ns = seq.window_indices()
    vals = [abs(gz.tail_reciprocal_sum(seq[n], R)) / seq.k(n) for n in ns]
    return rep.hypothesis("tail_sum_over_k", max(vals), tols.tail_max, at=f"R={R:g}")


def _kappa(seq, R_n):
    ns = seq.window_indices()
    return max(gz.zero_count(seq[n], R_n(n)) / seq.k(n) for n in ns)


def _pointwise_samples(E, sample_radius, sample_count):
    Es = E.truncate(sample_radius)
    pts = Es.boundary_sample(sample_count)
    return pts[np.abs(pts) <= sample_radius]


# --------------------------------------------------------------------------
# sup chain and ratio inequality (lemma2i, lemma2ii)
# --------------------------------------------------------------------------


def check_lemma2_i(seq, R_grid, tol=None, tolerances=Tolerances()):
    """Pointwise chain sup|P| <= C(P,1)(1+R)^{d*} e^{R d*}, and the C_0 = 0 case.

    Part 1 holds for every function and is checked for every n <= N.
    Part 2 applies when the C_0 surrogate is below ``c0_zero`` and not
    growing with n; then the growth profile must stay below ``tol``.
    """
    tols = tolerances if tol is None else tolerances.replace(tol=tol)
    rep = _report("lemma2i", seq, tols, R_grid=list(map(float, R_grid)))
    for n, P, k in seq:
        ds = gz.d_star(P)
        logc1 = gz.log_jensen_mean(P, 1.0)
        for R in R_grid:
            lhs = gz.log_sup_norm(P, R)
            rhs = logc1 + ds * math.log1p(R) + R * ds
            ok = PASS if _exact_le(lhs, rhs, tols.exact_rtol) else FAIL
            rep.conclusion("sup_chain_log", f"n={n},R={R:g}", lhs, rhs, ok)

    c0 = estimate_C0(seq)
    if c0.value >= tols.c0_band:
        rep.notes.append(f"C_0 surrogate {c0.value:.6g} >= {tols.c0_band}; vanishing-growth check not applicable")
        return rep
    status = PASS if c0.value < tols.c0_zero and c0.trend_slope >= 0 else INDETERMINATE
    rep.hypothesis("C0_is_zero", c0.value, tols.c0_zero, status=status)
    if status == PASS:
        prof = growth_profile(seq, R_grid)
        for i, n in enumerate(prof.ns):
            for j, R in enumerate(prof.radii):
                rep.conclusion("growth_vanishes", f"n={n},R={R:g}", prof.values[i, j], tols.tol)
    return rep


def check_lemma2_ii(seq, R, s_grid, h, tau, tol=None, tolerances=Tolerances()):
    """Ratio inequality C(P,s) >= C(P,R)(s/R)^{eta(P,R)} and eta(R) <= tau."""
    tols = tolerances if tol is None else tolerances.replace(tol=tol)
    rep = _report("lemma2ii", seq, tols, R=R, s_grid=list(map(float, s_grid)), h=h, tau=tau)
    if any(s <= R for s in s_grid):
        raise ValueError("every s must exceed R")
    for n, P, k in seq:
        eta = gz.zero_count(P, R)
        logR = gz.log_jensen_mean(P, R)
        for s in s_grid:
            lhs = logR + eta * math.log(s / R)
            rhs = gz.log_jensen_mean(P, s)
            ok = PASS if _exact_le(lhs, rhs, tols.exact_rtol) else FAIL
            rep.conclusion("ratio_inequality_log", f"n={n},s={s:g}", lhs, rhs, ok)

    c0s = estimate_C0_star(seq)
    rep.hypothesis("C0_star_positive", -c0s.value, -tols.c0_star_min,
                   status=PASS if c0s.value > tols.c0_star_min else INDETERMINATE)
    rep.hypothesis("h_exponent_le_tau", h.exponent, tau + tols.tol)
    ns = seq.window_indices()
    for Rp in sorted({R, *s_grid}):
        worst = max(gz.log_jensen_mean(seq[n], Rp) / seq.k(n) for n in ns)
        rep.hypothesis("jensen_le_h", math.exp(worst), float(h(Rp)) * (1 + tols.tol), at=f"R={Rp:g}")
    eta = estimate_eta_R(seq, R)
    rep.conclusion("eta_le_tau", f"R={R:g}", eta.value, tau + tols.tol)
    return rep


# --------------------------------------------------------------------------
# growth bound on disks and geometric growth on non-thin sets (lemma3, theorem1)
# --------------------------------------------------------------------------


def _lemma3_hypotheses(rep, seq, R_grid, tau, R_n, tols):
    c0 = estimate_C0(seq)
    rep.hypothesis("C0_finite", c0.value, math.inf, status=PASS if math.isfinite(c0.value) else FAIL)
    _tail_surrogate(rep, seq, max(R_grid), tols)
    kappa = _kappa(seq, R_n)
    rep.hypothesis("kappa_finite", kappa, tols.kappa_max)
    Rb = max(R_grid)
    if Rb > 1 and tau is not None:
        ns = seq.window_indices()
        rate = max(gz.log_jensen_mean(seq[n], Rb) / seq.k(n) for n in ns) / math.log(Rb)
        rep.hypothesis("log_jensen_rate_le_tau", rate, tau + tols.tol, at=f"R={Rb:g}")
    return c0


def check_lemma3(seq, R_grid, tau, tol=None, R_n="sqrt", tolerances=Tolerances()):
    """||P_n||_R^{1/k_n} <= C_0 (1+R)^tau on the window."""
    tols = tolerances if tol is None else tolerances.replace(tol=tol)
    rep = _report("lemma3", seq, tols, R_grid=list(map(float, R_grid)), tau=tau,
                  R_n=R_n if isinstance(R_n, str) else "custom")
    c0 = _lemma3_hypotheses(rep, seq, R_grid, tau, rn_schedule(R_n), tols)
    prof = growth_profile(seq, R_grid)
    for i, n in enumerate(prof.ns):
        for j, R in enumerate(prof.radii):
            rep.conclusion("growth_le_C0_power", f"n={n},R={R:g}", prof.values[i, j],
                           c0.value * (1 + R) ** tau * (1 + tols.tol))
    return rep


def _nonthin_hypothesis(rep, E, s, grid, tols):
    diag = pt.nonthin_diagnostic(E, s, grid, tols.quad_nodes, tols.leja_points, tols.boundary_points,
                                 tols.nonthin_threshold, tols.noise)
    if diag.flag:
        status = PASS
    elif diag.monotone and diag.total_drop > tols.noise:
        status = INDETERMINATE
    else:
        status = FAIL
    rep.hypothesis("nonthin_green_average", float(diag.averages[-1]), tols.nonthin_threshold, status=status,
                   at=f"s={s:g},R={diag.radii[-1]:g}")
    rep.notes.append("nonthin averages " + ", ".join(f"R={r:g}:{a:.4g}" for r, a in zip(diag.radii, diag.averages)))
    return diag


def check_theorem1(seq, E, R_grid, sample_count=400, tol=None, R_n="sqrt", sample_radius=None,
                   nonthin_s=1.0, nonthin_grid=(4.0, 16.0, 64.0, 256.0, 1024.0), tolerances=Tolerances()):
    """Geometric growth on a non-thin E propagates to every disk.

    ``sample_radius`` bounds the part of E where the pointwise hypothesis
    |P_n(z)|^{1/k_n} <= 1 + tol is sampled; it defaults to the first index
    of the window, since the hypothesis is a limit in n at fixed z.
    """
    tols = tolerances if tol is None else tolerances.replace(tol=tol)
    sample_radius = float(seq.window[0] if sample_radius is None else sample_radius)
    rep = _report("theorem1", seq, tols, set=E, R_grid=list(map(float, R_grid)), sample_count=sample_count,
                  sample_radius=sample_radius, R_n=R_n if isinstance(R_n, str) else "custom",
                  nonthin_s=nonthin_s, nonthin_grid=list(nonthin_grid))
    _nonthin_hypothesis(rep, E, nonthin_s, nonthin_grid, tols)
    _tail_surrogate(rep, seq, max(R_grid), tols)
    rep.hypothesis("kappa_finite", _kappa(seq, rn_schedule(R_n)), tols.kappa_max)

    filled = pt.fill_bounded_components(E.truncate(max(R_grid)))
    if filled == E.truncate(max(R_grid)):
        rep.notes.append("E_R^* = E_R for this set (no bounded complementary components)")

    pts = _pointwise_samples(E, sample_radius, sample_count)
    for n in seq.window_indices():
        worst = float(np.max(gz.log_abs_eval(seq[n], pts))) / seq.k(n)
        rep.hypothesis("pointwise_on_E", math.exp(worst), 1 + tols.tol, at=f"n={n}")

    prof = growth_profile(seq, R_grid)
    for i, n in enumerate(prof.ns):
        for j, R in enumerate(prof.radii):
            rep.conclusion("growth_le_1", f"n={n},R={R:g}", prof.values[i, j], 1 + tols.tol)
    return rep


# --------------------------------------------------------------------------
# converse construction of R_n (theorem4)
# --------------------------------------------------------------------------


def construct_Rn(seq, tau, s_max=None):
    """R_n = s for n_s <= n < n_{s+1}, restricted to the window.

    n_s is the least window index with n_s >= s, n_s > n_{s-1}, and
    eta(P_n, s)/k_n <= tau + 1/s for every later window index.  Returns a
    dict n -> R_n (indices before n_1 are left out) and the list of n_s.
    """
    ns = seq.window_indices()
    s_max = s_max or int(ns[-1])
    n_s = []
    for s in range(1, s_max + 1):
        ok = np.array([gz.zero_count(seq[n], s) / seq.k(n) <= tau + 1.0 / s for n in ns])
        # suffix-all: position i qualifies if ok[i:] all true
        suffix = np.logical_and.accumulate(ok[::-1])[::-1]
        lower = max(s, n_s[-1] + 1 if n_s else 0)
        cand = [int(n) for n, good in zip(ns, suffix) if good and n >= lower]
        if not cand:
            break
        n_s.append(cand[0])
    Rn = {}
    for idx, start in enumerate(n_s):
        stop = n_s[idx + 1] if idx + 1 < len(n_s) else int(ns[-1]) + 1
        for n in range(start, stop):
            Rn[n] = float(idx + 1)
    return Rn, n_s


def check_theorem4(seq, h, tol=None, R_grid=(0.5, 1.0, 2.0, 4.0, 8.0), tau=None, tolerances=Tolerances()):
    """From C_0* > 0 and C(P_n,R)^{1/k_n} <= h(R) build R_n giving the tail conditions."""
    tols = tolerances if tol is None else tolerances.replace(tol=tol)
    tau = h.exponent if tau is None else tau
    rep = _report("theorem4", seq, tols, h=h, R_grid=list(map(float, R_grid)), tau=tau)
    c0s = estimate_C0_star(seq)
    if not c0s.value > tols.c0_star_min:
        rep.hypothesis("C0_star_positive", -c0s.value, -tols.c0_star_min, status=INDETERMINATE)
        rep.notes.append(f"precondition C_0* > {tols.c0_star_min} not met (surrogate {c0s.value:.6g})")
        return rep
    rep.hypothesis("C0_star_positive", -c0s.value, -tols.c0_star_min)
    ns = seq.window_indices()
    for R in R_grid:
        worst = max(gz.log_jensen_mean(seq[n], R) / seq.k(n) for n in ns)
        rep.hypothesis("jensen_le_h", math.exp(worst), float(h(R)) * (1 + tols.tol), at=f"R={R:g}")
    if rep.hypothesis_violated:
        return rep

    Rn, n_s = construct_Rn(seq, tau)
    if not n_s:
        rep.reason = "ConstructionFailed"
        rep.notes.append("no n_1 exists within the window")
        return rep
    rep.notes.append(f"n_s for s=1..{len(n_s)}: first {n_s[:5]}, last {n_s[-1]}; R_n ranges "
                     f"{min(Rn.values()):g}..{max(Rn.values()):g} over {len(Rn)} window indices")
    tail = max(abs(gz.tail_reciprocal_sum(seq[n], R, strict=True)) / seq.k(n) for n, R in Rn.items())
    kappa = max(gz.zero_count(seq[n], R) / seq.k(n) for n, R in Rn.items())
    rep.conclusion("tail_sum_beyond_Rn", "window", tail, tols.tol)
    rep.conclusion("kappa_finite", "window", kappa, tols.kappa_max)
    rep.provenance["kappa"] = kappa
    return rep


# --------------------------------------------------------------------------
# polynomial growth via the capacity exponent (theorem2)
# --------------------------------------------------------------------------


def check_theorem2(seq, E, h, gamma, R_grid, capacity_R_grid, tol=None, R_n="sqrt", sample_count=400,
                   sample_radius=None, tolerances=Tolerances()):
    """||P_n||_R^{1/k_n} <= C_0 (1+R)^{gamma/beta} when cap(E_R) ~ R^beta."""
    tols = tolerances if tol is None else tolerances.replace(tol=tol)
    sample_radius = float(seq.window[0] if sample_radius is None else sample_radius)
    rep = _report("theorem2", seq, tols, set=E, h=h, gamma=gamma, R_grid=list(map(float, R_grid)),
                  capacity_R_grid=list(map(float, capacity_R_grid)), sample_count=sample_count,
                  sample_radius=sample_radius, R_n=R_n if isinstance(R_n, str) else "custom")
    fit = pt.beta_exponent(E, capacity_R_grid, tols.leja_points, tols.boundary_points)
    beta = fit.beta
    rep.provenance["beta"] = beta
    rep.provenance["beta_residual"] = fit.residual
    rep.hypothesis("beta_positive", -beta, -tols.beta_min)
    rep.hypothesis("beta_fit_residual", fit.residual, tols.beta_residual_max)
    rep.hypothesis("h_exponent_le_gamma", h.exponent, gamma + tols.tol)
    c0 = _lemma3_hypotheses(rep, seq, R_grid, None, rn_schedule(R_n), tols)

    pts = _pointwise_samples(E, sample_radius, sample_count)
    log_h = np.asarray(h.log(np.abs(pts)))
    for n in seq.window_indices():
        excess = gz.log_abs_eval(seq[n], pts) / seq.k(n) - log_h
        i = int(np.argmax(excess))
        rep.hypothesis("pointwise_le_h", math.exp(float(excess[i])), 1 + tols.tol, at=f"n={n}")

    if beta <= 0:
        return rep
    expo = gamma / beta
    prof = growth_profile(seq, R_grid)
    for i, n in enumerate(prof.ns):
        for j, R in enumerate(prof.radii):
            rep.conclusion("growth_le_C0_power", f"n={n},R={R:g}", prof.values[i, j],
                           c0.value * (1 + R) ** expo * (1 + tols.tol))
    kappa = _kappa(seq, rn_schedule(R_n))
    rep.provenance["kappa"] = kappa
    rep.conclusion("kappa_le_gamma_over_beta", "window", kappa, expo + tols.tol)
    return rep


# --------------------------------------------------------------------------
# Bernstein-Walsh
# --------------------------------------------------------------------------


def check_bernstein(Q, E, samples, tol_g=None, tolerances=Tolerances()):
    """Report wrapper around :func:`potential.bernstein_walsh_check`."""
    tols = tolerances if tol_g is None else tolerances.replace(green_tol=tol_g)
    samples = np.asarray(samples, dtype=complex)
    prov = {"function": Q.to_dict(), "set": E.to_dict(), "tolerances": asdict(tols),
            "samples": [[z.real, z.imag] for z in samples.tolist()]}
    prov["config_hash"] = config_hash(prov)
    rep = VerificationReport("bernstein", provenance=prov)
    try:
        res = pt.bernstein_walsh_check(Q, E, samples, tols.leja_points, tols.boundary_points, tols.green_tol)
    except HypothesisViolated as exc:
        rep.hypothesis("sup_on_E_le_1", math.inf, 1.0, status=FAIL)
        rep.notes.append(str(exc))
        return rep
    rep.hypothesis("sup_on_E_le_1", res.sup_on_set, 1.0 + 1e-9)
    for z, l, r in zip(res.points.tolist(), res.lhs.tolist(), res.rhs.tolist()):
        rep.conclusion("log_Q_le_deg_green", f"{z.real:.6g}{z.imag:+.6g}j", l, r)
    return rep
