"""Command-line interface for batch enumeration, fitting and rendering.

Exit codes: 0 success, 2 usage error, 3 budget refusal.  Artifacts are
written atomically (temp file + rename).  The environment variable
``RAILGRID_BUDGET`` overrides the default sweep-size guard.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import fitting, records
from .assembly import is_constructible
from .curves import catalogue_min_clearance, sweep_pair_catalogue
from .randombuild import RandomParams, build_random
from .render import RenderConfig, to_polygon_view, to_svg
from .sweep import (DEFAULT_BUDGET, BudgetExceeded, SweepSpec, merge_shards,
                    polygon_comparison, sweep, sweep_shard)

USAGE_ERROR = 2
BUDGET_REFUSED = 3

#: paper-box defaults selected by --easyloop: at most 4 copies per type
EASYLOOP_CAP = 4


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi or lo < 1:
        raise ValueError(f"bad length range: {text}")
    return lo, hi


def _parse_cap(text: str) -> int | None:
    if text.lower() in ("inf", "none", "unlimited"):
        return None
    cap = int(text)
    if cap < 0:
        raise ValueError("cap must be non-negative")
    return cap


def _budget() -> int | None:
    env = os.environ.get("RAILGRID_BUDGET")
    if env is not None:
        return None if env.lower() == "inf" else int(env)
    return DEFAULT_BUDGET


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        records.atomic_write_text(out, text)


def _spec_from_args(args: argparse.Namespace, n: int) -> SweepSpec:
    cap = args.max_per_type
    if getattr(args, "easyloop", False) and cap is None:
        cap = EASYLOOP_CAP
    pieces = None
    if getattr(args, "pieces", None):
        pieces = frozenset(int(p) for p in args.pieces.split(","))
    return SweepSpec(n, copies_cap=cap, piece_types=pieces)


def _run_sweep(spec: SweepSpec, shards: int, budget: int | None):
    if budget is not None and spec.possible > budget:
        raise BudgetExceeded(
            f"length {spec.n} explores {spec.possible} code words, over "
            f"budget {budget}; set RAILGRID_BUDGET to proceed")
    if shards <= 1:
        return sweep(spec, budget=None)
    groups = [tuple(d for d in range(8) if d % shards == s)
              for s in range(min(shards, 8))]
    with ProcessPoolExecutor(max_workers=len(groups)) as pool:
        parts = list(pool.map(sweep_shard, [spec] * len(groups), groups))
    table = merge_shards(parts, spec)
    direct: dict = {}
    for _, part in parts:
        for key, circ in part.items():
            direct.setdefault(key, circ)
    from .circuit import canonical_full
    full: dict = {}
    for key in sorted(direct):
        full.setdefault(canonical_full(direct[key].codes), direct[key])
    return table, full


def cmd_count(args: argparse.Namespace) -> int:
    lo, hi = _parse_range(args.n)
    budget = _budget()
    rows = []
    for n in range(lo, hi + 1):
        table, _ = _run_sweep(_spec_from_args(args, n), args.shards, budget)
        rows.append(table)
    buf = io.StringIO()
    if args.format == "csv":
        records.write_counts_csv(rows, buf)
    else:
        for row in rows:
            buf.write(" ".join(map(str, row.as_tuple())) + "\n")
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    lo, hi = _parse_range(args.n)
    budget = _budget()
    circuits = []
    for n in range(lo, hi + 1):
        spec = _spec_from_args(args, n)
        _, full = _run_sweep(spec, args.shards, budget)
        for key in sorted(full):
            circ = full[key]
            if args.stage == "constructible" and not is_constructible(circ):
                continue
            circuits.append(circ)
    buf = io.StringIO()
    records.write_circuits(circuits, buf)
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_catalogue(args: argparse.Namespace) -> int:
    args.stage = "constructible"
    return cmd_enumerate(args)


def cmd_brio(args: argparse.Namespace) -> int:
    lo, hi = _parse_range(args.n)
    budget = _budget()
    buf = io.StringIO()
    buf.write("n,classes,polygons\n")
    for n in range(lo, hi + 1):
        pc = polygon_comparison(n, budget)
        buf.write(f"{pc.n},{pc.classes},{pc.polygons}\n")
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_fit(args: argparse.Namespace) -> int:
    with open(args.input) as handle:
        rows = records.read_counts_csv(handle)
    samples = []
    for row in rows:
        value = getattr(row, args.column)
        if value > 0:
            samples.append((row.n, float(value)))
    params = fitting.fit(samples)
    buf = io.StringIO()
    buf.write("A,mu,gamma_minus_1,residual\n")
    buf.write(f"{params.A!r},{params.mu!r},{params.gamma_minus_1!r},"
              f"{params.residual!r}\n")
    if args.estimate:
        lo, hi = _parse_range(args.estimate)
        buf.write("n,estimate\n")
        for n, q in zip(range(lo, hi + 1),
                        fitting.estimate_series(params, lo, hi)):
            buf.write(f"{n},{q}\n")
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_random(args: argparse.Namespace) -> int:
    params = RandomParams(r=args.r, s=args.s, q=args.q, R=args.box,
                          seed=args.seed)
    cap = args.max_per_type
    if args.easyloop and cap is None:
        cap = EASYLOOP_CAP
    found = build_random(params, copies_cap=cap)
    buf = io.StringIO()
    records.write_circuits(found, buf)
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    with open(args.input) as handle:
        circuits = records.read_circuits(handle)
    if not 0 <= args.index < len(circuits):
        raise ValueError(f"index {args.index} out of range "
                         f"(file holds {len(circuits)} circuits)")
    circuit = circuits[args.index]
    cfg = RenderConfig(scale=args.scale)
    if args.polygon_view:
        svg = to_polygon_view(circuit, cfg)
    else:
        svg = to_svg(circuit, cfg, force=args.force)
    _emit(svg, args.out)
    return 0


def cmd_clearance(args: argparse.Namespace) -> int:
    catalogue = sweep_pair_catalogue(args.extended)
    buf = io.StringIO()
    if args.format == "csv":
        buf.write("k1,k2,q1,q2,crossing,delta\n")
        for (k1, k2, q1, q2), (crossing, delta) in sorted(catalogue.items()):
            buf.write(f"{k1},{k2},{q1},{q2},{int(crossing)},{delta:.6f}\n")
    buf.write(f"pairs: {len(catalogue)}\n")
    buf.write(f"delta_min: {catalogue_min_clearance(args.extended):.5f}\n")
    _emit(buf.getvalue(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="railgrid",
        description="Closed train-track circuits on the square grid: "
                    "enumeration, fitting, rendering.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sweep_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", required=True,
                       help="piece count or inclusive range a..b")
        p.add_argument("--max-per-type", type=_parse_cap, default=None,
                       help="copies available per piece type (or 'inf')")
        p.add_argument("--pieces", default=None,
                       help="comma-separated allowed type ids, e.g. 1,2")
        p.add_argument("--shards", type=int, default=1,
                       help="parallel sweep shards")
        p.add_argument("--easyloop", action="store_true",
                       help="defaults for the standard boxed set "
                            "(4 copies per type)")
        p.add_argument("--out", default=None, help="output file")

    p = sub.add_parser("count", help="census table by length")
    add_sweep_flags(p)
    p.add_argument("--format", choices=("csv", "plain"), default="csv")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="write circuit records")
    add_sweep_flags(p)
    p.add_argument("--stage", choices=("full", "constructible"),
                   default="constructible")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("catalogue", help="write the constructible catalogue")
    add_sweep_flags(p)
    p.set_defaults(func=cmd_catalogue)

    p = sub.add_parser("brio", help="straights-and-arcs vs polygon counts")
    add_sweep_flags(p)
    p.set_defaults(func=cmd_brio)

    p = sub.add_parser("fit", help="fit growth parameters to a counts CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--column", default="constructible",
                   choices=("looping", "direct", "isometries",
                            "constructible"))
    p.add_argument("--estimate", default=None,
                   help="also print rounded estimates over range a..b")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("random", help="randomized large-circuit search")
    p.add_argument("--r", type=int, required=True, help="prefix pieces")
    p.add_argument("--s", type=int, required=True, help="suffix pieces")
    p.add_argument("--q", type=int, required=True, help="prefix draws")
    p.add_argument("--box", type=int, required=True,
                   help="bounding-box radius R")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-per-type", type=_parse_cap, default=None)
    p.add_argument("--easyloop", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("render", help="render a circuit record to SVG")
    p.add_argument("--input", required=True)
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--scale", type=float, default=60.0)
    p.add_argument("--polygon-view", action="store_true")
    p.add_argument("--force", action="store_true",
                   help="render even if not constructible")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("clearance", help="same-square pair clearance table")
    p.add_argument("--extended", action="store_true",
                   help="include the sharp parabolic pieces")
    p.add_argument("--format", choices=("summary", "csv"), default="summary")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_clearance)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return BUDGET_REFUSED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
