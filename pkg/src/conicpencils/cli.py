"""Command line interface.

Exit codes:
  0  success (all requested checks passed)
  2  argument or input parsing error
  3  a solid's invariants matched no orbit (classification inconsistency)
  4  a verification check failed
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report as rpt
from .classifier import ClassificationInconsistency, classify, expected_row
from .field import gf
from .group import representative
from .pencil import PencilSolid
from .projgeom import solid_from_hex, solid_to_hex
from .sweep import (
    expected_hyperplane_census,
    expected_point_census,
    hyperplane_census,
    point_census,
)
from .verify import LEVELS, run_level, summary
from .veronese import Conic

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INCONSISTENT = 3
EXIT_FAILED = 4

EPILOG = """exit codes:
  0  success
  2  argument or input parsing error
  3  classification inconsistency (invariants match no orbit)
  4  verification failure
"""


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="conicpencils",
        description="Classify pencils of conics in PG(2, q) / solids in PG(5, q), q even.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify one solid or pencil")
    c.add_argument("--q", type=int, required=True, choices=(2, 4, 8))
    c.add_argument("--solid", help="solid as q=<q>: plus 24 hex digits (row-major 4x6)")
    c.add_argument(
        "--conics", nargs=2, metavar=("C1", "C2"),
        help="two conics as 6 hex digits each (a00 a01 a02 a11 a12 a22)",
    )
    c.add_argument("--format", default="json-lines", choices=rpt.FORMATS)
    c.add_argument("--out", type=Path)

    t = sub.add_parser("table", help="print the 15-orbit invariant table")
    t.add_argument("--q", type=int, required=True, choices=(2, 4, 8))
    t.add_argument("--campbell", action="store_true",
                   help="append the historical pencil-type concordance column")
    t.add_argument("--format", default="json-lines", choices=rpt.FORMATS)
    t.add_argument("--out", type=Path)

    v = sub.add_parser("verify", help="run a verification level")
    v.add_argument("--level", required=True, choices=LEVELS)
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--format", default="json-lines", choices=rpt.FORMATS)
    v.add_argument("--out", type=Path)

    r = sub.add_parser("rep", help="print a canonical orbit representative")
    r.add_argument("--q", type=int, required=True, choices=(2, 4, 8))
    r.add_argument("--rep", type=int, required=True, choices=range(1, 16),
                   metavar="LABEL", help="orbit label 1..15")
    r.add_argument("--format", default="json-lines", choices=rpt.FORMATS)
    r.add_argument("--out", type=Path)

    n = sub.add_parser("census", help="point and hyperplane class censuses")
    n.add_argument("--q", type=int, required=True, choices=(2, 4, 8))
    n.add_argument("--format", default="json-lines", choices=rpt.FORMATS)
    n.add_argument("--out", type=Path)
    return p


def _emit(rows: list[dict], fmt: str, out: Path | None) -> None:
    text = rpt.write_report(rows, fmt, out)
    sys.stdout.write(text)


def _cmd_classify(args) -> int:
    f = gf(args.q)
    if bool(args.solid) == bool(args.conics):
        print("classify needs exactly one of --solid or --conics", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.solid:
            ps = PencilSolid.from_solid(solid_from_hex(f, args.solid))
        else:
            c1 = Conic.from_hex(f, args.conics[0])
            c2 = Conic.from_hex(f, args.conics[1])
            ps = PencilSolid.from_conics(f, c1, c2)
    except ValueError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    try:
        label = classify(ps)
    except ClassificationInconsistency as e:
        print(f"classification inconsistency: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT
    _emit([ps.record(label)], args.format, args.out)
    return EXIT_OK


def _cmd_table(args) -> int:
    rows = rpt.table_rows(args.q, campbell=args.campbell)
    _emit(rows, args.format, args.out)
    if args.out:
        counts = {r["label"]: r["orbit_size"] for r in rows}
        rpt.render_orbit_figure(args.q, counts, rpt.figure_path(args.out))
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        checks = run_level(args.level, threads=args.threads)
    except ClassificationInconsistency as e:
        print(f"classification inconsistency: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT
    for c in checks:
        status = "PASS" if c.ok else "FAIL"
        print(f"[{status}] {c.name}: {c.detail} ({c.elapsed:.2f}s)", file=sys.stderr)
    rows = [c.to_dict() for c in checks] + [summary(args.level, checks)]
    _emit(rows, args.format, args.out)
    if args.out:
        rpt.render_check_figure(args.level, checks, rpt.figure_path(args.out))
    return EXIT_OK if all(c.ok for c in checks) else EXIT_FAILED


def _cmd_rep(args) -> int:
    ps = representative(args.q, args.rep)
    try:
        label = classify(ps)
    except ClassificationInconsistency as e:
        print(f"classification inconsistency: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT
    rec = ps.record(label)
    rec["conics"] = [c.to_hex() for c in ps.conics()]
    row = expected_row(args.q, args.rep)
    rec["stabilizer_order"] = row.stabilizer_order
    rec["orbit_size"] = row.orbit_size
    _emit([rec], args.format, args.out)
    return EXIT_OK if label == args.rep else EXIT_INCONSISTENT


def _cmd_census(args) -> int:
    pc, hc = point_census(args.q), hyperplane_census(args.q)
    rows = [
        {
            "q": args.q,
            "census": "points",
            "counts": pc,
            "expected": expected_point_census(args.q),
        },
        {
            "q": args.q,
            "census": "hyperplanes",
            "counts": hc,
            "expected": expected_hyperplane_census(args.q),
        },
    ]
    _emit(rows, args.format, args.out)
    if args.out:
        rpt.render_census_figure(args.q, pc, hc, rpt.figure_path(args.out))
    ok = pc == expected_point_census(args.q) and hc == expected_hyperplane_census(args.q)
    return EXIT_OK if ok else EXIT_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code not in (0, None) else 0
    handlers = {
        "classify": _cmd_classify,
        "table": _cmd_table,
        "verify": _cmd_verify,
        "rep": _cmd_rep,
        "census": _cmd_census,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
