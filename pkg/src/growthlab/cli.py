"""``growthlab`` command line.

Exit status: 0 pass, 1 fail, 2 indeterminate, 3 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from . import potential as pt
from .errors import ConfigError, GrowthLabError, InvalidDescriptor
from .families import estimate_C0, estimate_C0_star, estimate_eta_R, make_family
from .reporting import emit_profile, measure_to_csv, write_csv, provenance_line, fmt
from .scenario import exit_status, load_scenario, run_scenario, STATEMENTS

EXIT_USAGE = 3
OUTPUT_ENV = "GROWTHLAB_OUTPUT_DIR"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2, which is reserved for "indeterminate"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _floats(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _point(text):
    v = _floats(text)
    if len(v) == 1:
        return complex(v[0])
    if len(v) == 2:
        return complex(v[0], v[1])
    raise argparse.ArgumentTypeError(f"expected x or x,y, got {text!r}")


def _family_from_args(args):
    if args.family_json:
        desc = json.loads(args.family_json)
    else:
        desc = {"kind": args.family}
        for item in args.param or []:
            key, _, value = item.partition("=")
            try:
                desc[key] = json.loads(value)
            except json.JSONDecodeError:
                desc[key] = value
    if args.N is not None:
        desc["N"] = args.N
    return make_family(desc)


def _set_from_args(args):
    return pt.PlanarSet.parse("+".join(args.set))


def cmd_verify(args):
    sc = load_scenario(args.config)
    if args.seed is not None:
        sc.seed = args.seed
        if sc.family.get("kind") == "random_disk_zeros":
            sc.family["seed"] = args.seed
    if args.statements:
        chosen = [s.strip() for s in args.statements.split(",") if s.strip()]
        bad = [s for s in chosen if s not in STATEMENTS]
        if bad:
            raise ConfigError(f"unknown statement(s) {bad}", field="statements")
        sc.statements = chosen
    out = args.out or os.environ.get(OUTPUT_ENV) or sc.output_dir
    reports, paths = run_scenario(sc, out)
    print(f"{'statement':<10} {'overall':<14} outcome")
    for r in reports:
        print(f"{r.statement_id:<10} {r.overall:<14} {r.outcome}")
    if args.verbose:
        for r in reports:
            print(r.summary())
    for p in paths:
        print(f"wrote {p}")
    return exit_status(reports)


def cmd_capacity(args):
    E = _set_from_args(args)
    cap = pt.capacity_estimate(E, args.points, args.boundary, args.method)
    print(f"capacity {cap:.10g} (n={args.points}, boundary={args.boundary}, method={args.method})")
    if args.csv:
        mu = pt.equilibrium_measure(E, args.points, args.boundary, args.method)
        measure_to_csv(mu, args.csv)
        print(f"wrote {args.csv}")
    return 0


def cmd_green(args):
    E = _set_from_args(args)
    mu = pt.equilibrium_measure(E, args.points, args.boundary)
    zs = np.array(args.z, dtype=complex)
    g = np.atleast_1d(pt.green_eval(mu, zs))
    rows = [(z.real, z.imag, v) for z, v in zip(zs.tolist(), g.tolist())]
    for x, y, v in rows:
        print(f"g({x:g}{y:+g}i) = {v:.10g}")
    if args.csv:
        prov = provenance_line("", None, capacity=fmt(mu.capacity), n=mu.n)
        write_csv(args.csv, ["re", "im", "green"], rows, prov)
        print(f"wrote {args.csv}")
    return 0


def cmd_sequence_stats(args):
    seq = _family_from_args(args)
    c0, c0s = estimate_C0(seq), estimate_C0_star(seq)
    print(f"family {seq.name} N={seq.horizon} window={seq.window}")
    print(f"C0       {c0.value:.10g} (at n={c0.index}, trend {c0.trend_slope:+.4g})")
    print(f"C0_star  {c0s.value:.10g} (at n={c0s.index}, trend {c0s.trend_slope:+.4g})")
    for R in args.R or []:
        eta = estimate_eta_R(seq, R)
        print(f"eta({R:g})  {eta.value:.10g} (at n={eta.index})")
    for key, val in sorted(seq.info.items()):
        print(f"{key} {val}")
    return 0


def cmd_profile(args):
    seq = _family_from_args(args)
    emit_profile(seq, args.R, args.out)
    print(f"wrote {args.out} ({seq.horizon * len(args.R)} rows)")
    return 0


def build_parser():
    p = _Parser(prog="growthlab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"growthlab {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run the statements selected in a scenario config")
    v.add_argument("--config", required=True)
    v.add_argument("--out", help=f"output directory (overrides config and ${OUTPUT_ENV})")
    v.add_argument("--seed", type=int)
    v.add_argument("--statements", help="comma-separated subset of statements")
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    def set_args(q):
        q.add_argument("--set", action="append", required=True,
                       help="primitive, e.g. segment:-2,2 or disk:0,0,1 (repeatable)")
        q.add_argument("--points", type=int, default=48, help="Leja points")
        q.add_argument("--boundary", type=int, default=2048, help="boundary sample size")

    c = sub.add_parser("capacity", help="estimate logarithmic capacity")
    set_args(c)
    c.add_argument("--method", choices=["energy", "transfinite"], default="energy")
    c.add_argument("--csv", help="write the equilibrium measure (re, im, weight)")
    c.set_defaults(func=cmd_capacity)

    g = sub.add_parser("green", help="evaluate the Green function with pole at infinity")
    set_args(g)
    g.add_argument("--z", type=_point, action="append", required=True, help="point x,y (repeatable)")
    g.add_argument("--csv")
    g.set_defaults(func=cmd_green)

    def family_args(q):
        q.add_argument("--family", default="binomial", help="built-in family kind")
        q.add_argument("--family-json", help="full family descriptor as JSON")
        q.add_argument("--param", action="append", help="descriptor field key=value (repeatable)")
        q.add_argument("--N", type=int)

    s = sub.add_parser("sequence-stats", help="window surrogates of C0, C0*, eta(R)")
    family_args(s)
    s.add_argument("--R", type=float, action="append")
    s.set_defaults(func=cmd_sequence_stats)

    pr = sub.add_parser("profile", help="CSV of growth profiles")
    family_args(pr)
    pr.add_argument("--R", type=_floats, required=True, help="comma-separated radii")
    pr.add_argument("--out", required=True)
    pr.set_defaults(func=cmd_profile)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, InvalidDescriptor) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        print(f"config error: invalid JSON: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 4
    except GrowthLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
