"""CSV and text output.  Files are written once via write-then-rename."""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np
import scipy

from . import __version__
from . import genus_zero as gz

__all__ = [
    "atomic_write",
    "provenance_line",
    "write_csv",
    "report_to_csv",
    "emit_profile",
    "measure_to_csv",
    "fmt",
]


def fmt(x):
    """Deterministic text for a number; -inf logs become NEG_INF."""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    if x == -math.inf:
        return "NEG_INF"
    return repr(x)


def atomic_write(path, text):
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def provenance_line(config_hash="", tolerances=None, **extra):
    parts = [
        f"growthlab={__version__}",
        f"numpy={np.__version__}",
        f"scipy={scipy.__version__}",
        f"config_hash={config_hash}",
        "tolerances=" + json.dumps(tolerances or {}, sort_keys=True, separators=(",", ":")),
    ]
    parts += [f"{k}={v}" for k, v in sorted(extra.items())]
    return "# " + " ".join(parts)


def write_csv(path, header, rows, provenance):
    buf = io.StringIO()
    buf.write(provenance + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) if isinstance(v, (float, int, np.floating, np.integer)) and not isinstance(v, bool)
                    else v for v in row])
    return atomic_write(path, buf.getvalue())


def report_to_csv(report, path):
    prov = provenance_line(report.provenance.get("config_hash", ""), report.provenance.get("tolerances"),
                           statement=report.statement_id, overall=report.overall)
    rows = [(r.kind, r.name, r.at, r.lhs, r.rhs, r.margin, r.status) for r in report.records]
    return write_csv(path, ["kind", "name", "at", "lhs", "rhs", "margin", "status"], rows, prov)


def emit_profile(seq, R_grid, out, grid_size=4096, config_hash=""):
    """CSV of ||P_n||_R^{1/k_n} and C(P_n,R)^{1/k_n} for every n <= N and R in the grid."""
    rows = []
    for n, P, k in seq:
        for R in R_grid:
            sup_pow = math.exp(gz.log_sup_norm(P, R, grid_size=grid_size) / k)
            jen_pow = math.exp(gz.log_jensen_mean(P, R) / k)
            rows.append((n, k, float(R), sup_pow, jen_pow))
    prov = provenance_line(config_hash, None, family=json.dumps(seq.descriptor, sort_keys=True,
                                                                separators=(",", ":")))
    return write_csv(out, ["n", "k_n", "R", "sup_norm_pow", "jensen_pow"], rows, prov)


def measure_to_csv(mu, path, config_hash=""):
    prov = provenance_line(config_hash, None, capacity=fmt(mu.capacity), n=mu.n)
    return write_csv(path, ["re", "im", "weight"], mu.rows(), prov)
