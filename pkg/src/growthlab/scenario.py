"""Scenario documents: which family, set and statements to check, and how.

A scenario is a JSON object::

    {
      "name": "theorem1_binomial",
      "seed": 0,
      "family": {"kind": "binomial", "N": 256},
      "set": {"primitives": [{"type": "ray", "start": [0, 0], "angle": 0}]},
      "growth": {"kind": "power", "gamma": 1},
      "statements": ["theorem1"],
      "grids": {"R_grid": [2]},
      "params": {"R_n": "sqrt"},
      "tolerances": {"tol": 0.02},
      "output_dir": "out"
    }

Grids: ``R_grid``, ``s_grid``, ``capacity_R_grid``, ``nonthin_R_grid``.
Params: ``tau``, ``gamma``, ``R``, ``R_n``, ``sample_count``,
``sample_radius``, ``nonthin_s``.  ``bernstein`` configures the
Bernstein-Walsh statement (see :func:`_bernstein_inputs`).
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import harness as hz
from .errors import ConfigError, InvalidDescriptor
from .families import chebyshev_zeros, make_family
from .genus_zero import GenusZeroFunction
from .potential import PlanarSet
from .reporting import atomic_write, report_to_csv

STATEMENTS = ("lemma2i", "lemma2ii", "lemma3", "theorem1", "theorem4", "theorem2", "bernstein")
GRIDS = ("R_grid", "s_grid", "capacity_R_grid", "nonthin_R_grid")
PARAMS = ("tau", "gamma", "R", "R_n", "sample_count", "sample_radius", "nonthin_s", "s_max")
TOP_LEVEL = ("name", "seed", "family", "set", "growth", "statements", "grids", "params", "tolerances",
             "output_dir", "bernstein", "description")

# what each statement needs beyond the family
_NEEDS = {
    "lemma2i": ("R_grid",),
    "lemma2ii": ("growth", "tau", "R", "s_grid"),
    "lemma3": ("R_grid", "tau"),
    "theorem1": ("set", "R_grid"),
    "theorem4": ("growth",),
    "theorem2": ("set", "growth", "gamma", "R_grid", "capacity_R_grid"),
    "bernstein": ("bernstein",),
}


@dataclass
class Scenario:
    name: str
    family: dict
    statements: list
    grids: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    tolerances: hz.Tolerances = field(default_factory=hz.Tolerances)
    set: PlanarSet | None = None
    growth: object = None
    bernstein: dict | None = None
    seed: int = 0
    output_dir: str = "out"
    raw: dict = field(default_factory=dict)


def _line_of(text, key):
    if text is None:
        return None
    m = re.search(r'"%s"\s*:' % re.escape(key), text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def _fail(msg, fieldname, text=None):
    raise ConfigError(msg, field=fieldname, line=_line_of(text, fieldname.split(".")[-1].split("[")[0]))


def _grid(values, name, text):
    if not isinstance(values, list) or not values:
        _fail("must be a nonempty list of numbers", f"grids.{name}", text)
    try:
        arr = [float(v) for v in values]
    except (TypeError, ValueError):
        _fail("must contain only numbers", f"grids.{name}", text)
    if any(not math.isfinite(v) or v <= 0 for v in arr):
        _fail("entries must be positive and finite", f"grids.{name}", text)
    if any(b <= a for a, b in zip(arr, arr[1:])):
        _fail("must be strictly increasing", f"grids.{name}", text)
    return arr


def parse_scenario(doc, text=None):
    """Validate a decoded scenario document and build a :class:`Scenario`."""
    if not isinstance(doc, dict):
        raise ConfigError("scenario must be a JSON object")
    for key in doc:
        if key not in TOP_LEVEL:
            _fail(f"unknown key; expected one of {list(TOP_LEVEL)}", key, text)
    if "family" not in doc:
        raise ConfigError("missing family descriptor", field="family")
    seed = doc.get("seed", 0)
    if isinstance(seed, bool) or not isinstance(seed, int):
        _fail("seed must be an integer", "seed", text)
    family = dict(doc["family"]) if isinstance(doc["family"], dict) else None
    if family is None:
        _fail("must be an object", "family", text)
    if family.get("kind") == "random_disk_zeros":
        family.setdefault("seed", seed)

    statements = doc.get("statements", [])
    if isinstance(statements, str):
        statements = [statements]
    if not isinstance(statements, list) or not statements:
        _fail("must list at least one statement", "statements", text)
    for s in statements:
        if s not in STATEMENTS:
            _fail(f"unknown statement {s!r}; expected one of {list(STATEMENTS)}", "statements", text)

    grids_in = doc.get("grids", {})
    if not isinstance(grids_in, dict):
        _fail("must be an object", "grids", text)
    grids = {}
    for key, values in grids_in.items():
        if key not in GRIDS:
            _fail(f"unknown grid; expected one of {list(GRIDS)}", f"grids.{key}", text)
        grids[key] = _grid(values, key, text)

    params = doc.get("params", {})
    if not isinstance(params, dict):
        _fail("must be an object", "params", text)
    for key in params:
        if key not in PARAMS:
            _fail(f"unknown parameter; expected one of {list(PARAMS)}", f"params.{key}", text)

    tol_in = doc.get("tolerances", {})
    if not isinstance(tol_in, dict):
        _fail("must be an object", "tolerances", text)
    for key, v in tol_in.items():
        if key not in hz.Tolerances.__dataclass_fields__:
            _fail("unknown tolerance", f"tolerances.{key}", text)
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not v > 0:
            _fail("tolerances must be positive numbers", f"tolerances.{key}", text)
    tolerances = hz.Tolerances().replace(**tol_in)

    try:
        make_family(family)  # validate early so diagnostics name the field
    except InvalidDescriptor as exc:
        raise ConfigError(str(exc), field=f"family.{exc.field}" if exc.field else "family",
                          line=_line_of(text, exc.field or "family")) from None

    pset = None
    if doc.get("set") is not None:
        try:
            pset = PlanarSet.from_dict(doc["set"])
        except InvalidDescriptor as exc:
            raise ConfigError(str(exc), field=f"set.{exc.field}", line=_line_of(text, "set")) from None

    growth = None
    if doc.get("growth") is not None:
        try:
            growth = hz.growth_from_dict(doc["growth"])
        except (InvalidDescriptor, KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad growth function: {exc}", field="growth", line=_line_of(text, "growth")) from None

    available = set(grids) | set(params) | {k for k in ("set", "growth", "bernstein") if doc.get(k) is not None}
    for s in statements:
        for need in _NEEDS[s]:
            if need not in available:
                where = "grids" if need in GRIDS else ("params" if need in PARAMS else need)
                raise ConfigError(f"statement {s!r} needs {need!r}", field=f"{where}.{need}" if where != need else need)

    if "R_n" in params:
        try:
            hz.rn_schedule(params["R_n"])
        except (InvalidDescriptor, ValueError):
            _fail("unknown R_n schedule", "params.R_n", text)

    return Scenario(
        name=str(doc.get("name", "scenario")),
        family=family,
        statements=list(statements),
        grids=grids,
        params=dict(params),
        tolerances=tolerances,
        set=pset,
        growth=growth,
        bernstein=doc.get("bernstein"),
        seed=seed,
        output_dir=str(doc.get("output_dir", "out")),
        raw=doc,
    )


def load_scenario(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    return parse_scenario(doc, text)


def _bernstein_inputs(cfg):
    """``{"function": {...} | {"chebyshev": {"L": 4, "degree": 8}},
    "samples": [[x, y], ...] | {"circles": [r, ...], "per_circle": m}}``"""
    fn = cfg.get("function", {})
    if "chebyshev" in fn:
        ch = fn["chebyshev"]
        L, deg = float(ch["L"]), int(ch["degree"])
        Q = make_family({"kind": "chebyshev_on_segment", "L": L, "N": deg})[deg]
    else:
        Q = GenusZeroFunction.from_dict(fn)
    samples = cfg.get("samples", {"circles": [3.0], "per_circle": 200})
    if isinstance(samples, dict):
        per = int(samples.get("per_circle", 40))
        t = 2 * np.pi * (np.arange(per) + 0.5) / per
        pts = np.concatenate([r * np.exp(1j * t) for r in samples["circles"]])
    else:
        pts = np.array([complex(x, y) for x, y in samples])
    return Q, pts


def run_statement(sc, statement, seq=None):
    """Run one statement of a scenario and return its report."""
    seq = seq if seq is not None else make_family(sc.family)
    g, p, tols = sc.grids, sc.params, sc.tolerances
    R_n = p.get("R_n", "sqrt")
    if statement == "lemma2i":
        return hz.check_lemma2_i(seq, g["R_grid"], tolerances=tols)
    if statement == "lemma2ii":
        return hz.check_lemma2_ii(seq, float(p["R"]), g["s_grid"], sc.growth, float(p["tau"]), tolerances=tols)
    if statement == "lemma3":
        return hz.check_lemma3(seq, g["R_grid"], float(p["tau"]), R_n=R_n, tolerances=tols)
    if statement == "theorem1":
        kw = {}
        if "nonthin_R_grid" in g:
            kw["nonthin_grid"] = g["nonthin_R_grid"]
        if "nonthin_s" in p:
            kw["nonthin_s"] = float(p["nonthin_s"])
        return hz.check_theorem1(seq, sc.set, g["R_grid"], sample_count=int(p.get("sample_count", 400)),
                                 R_n=R_n, sample_radius=p.get("sample_radius"), tolerances=tols, **kw)
    if statement == "theorem4":
        kw = {"R_grid": g["R_grid"]} if "R_grid" in g else {}
        return hz.check_theorem4(seq, sc.growth, tau=p.get("tau"), tolerances=tols, **kw)
    if statement == "theorem2":
        return hz.check_theorem2(seq, sc.set, sc.growth, float(p["gamma"]), g["R_grid"], g["capacity_R_grid"],
                                 R_n=R_n, sample_count=int(p.get("sample_count", 400)),
                                 sample_radius=p.get("sample_radius"), tolerances=tols)
    if statement == "bernstein":
        Q, pts = _bernstein_inputs(sc.bernstein)
        E = sc.set if sc.set is not None else PlanarSet.from_dict(sc.bernstein["set"])
        return hz.check_bernstein(Q, E, pts, tolerances=tols)
    raise ConfigError(f"unknown statement {statement!r}", field="statements")


def run_scenario(sc, out_dir=None):
    """Run every selected statement; write one CSV per statement and a summary.

    Returns ``(reports, written_paths)``.
    """
    out = Path(out_dir or sc.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    seq = make_family(sc.family) if any(s != "bernstein" for s in sc.statements) else None
    reports, paths = [], []
    for statement in sc.statements:
        rep = run_statement(sc, statement, seq)
        reports.append(rep)
        paths.append(report_to_csv(rep, out / f"{sc.name}_{statement}.csv"))
    summary = "\n".join(r.summary() for r in reports) + "\n"
    paths.append(atomic_write(out / f"{sc.name}_summary.txt", summary))
    return reports, paths


def exit_status(reports):
    overall = [r.overall for r in reports]
    if hz.FAIL in overall:
        return 1
    if hz.INDETERMINATE in overall:
        return 2
    return 0
