"""``gkverma`` command-line interface.

Subcommands::

    compute    GK dimension of L(lambda) from --weight, or of L(z xi_p) from --p/--z
    reducible  reducibility verdict for a single z
    set        closed-form reducibility set
    first      first reducible points (--search forces the descending scan)
    table      atlas of first reducible points over a range of n
    selfcheck  consistency sweep; exit status 1 on any mismatch

Exit status: 0 success, 1 self-check mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import datetime
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .closedform import (
    first_reducible_point,
    first_reducible_point_searched,
    gkdim_closed_form,
    is_reducible,
    reducibility_set,
    wallach_annotation,
)
from .errors import DomainError, ParseError
from .gkdim import gkdim_general, gkdim_scalar
from .records import FirstPoint, OutputRecord, parse_rational, parse_weight, write_records
from .rootdata import RANK_FLOOR, LieAlgebra, LieType, ParabolicChoice, dim_nilradical
from .selfcheck import DEFAULT_GRID, DEFAULT_MAX_N, map_cells, run_selfcheck

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _choice(args) -> ParabolicChoice:
    if args.p is None:
        raise ParseError("--p is required")
    return ParabolicChoice.of(args.type, args.n, args.p)


def _z(args) -> Fraction:
    if args.z is None:
        raise ParseError("--z is required")
    return parse_rational(args.z)


def _scalar_record(choice: ParabolicChoice, z: Fraction) -> OutputRecord:
    gk = gkdim_scalar(choice, z)
    table = gkdim_closed_form(choice, z)
    return OutputRecord(
        type=choice.type.value,
        n=choice.n,
        p=choice.p,
        z=z,
        gkdim=gk,
        dim_u=dim_nilradical(choice),
        reducible=gk < dim_nilradical(choice),
        wallach=wallach_annotation(choice, z),
        source="both" if table == gk else "algorithm",
    )


def cmd_compute(args) -> list[OutputRecord]:
    if args.weight is not None:
        if args.p is not None or args.z is not None:
            raise ParseError("give either --weight or --p/--z, not both")
        alg = LieAlgebra(LieType(args.type), args.n)
        return [OutputRecord(type=alg.type.value, n=alg.n, gkdim=gkdim_general(alg, parse_weight(args.weight)))]
    return [_scalar_record(_choice(args), _z(args))]


def cmd_reducible(args) -> list[OutputRecord]:
    choice, z = _choice(args), _z(args)
    verdict = is_reducible(choice, z)
    agree = verdict == (z in reducibility_set(choice))
    return [
        OutputRecord(
            type=choice.type.value,
            n=choice.n,
            p=choice.p,
            z=z,
            gkdim=gkdim_scalar(choice, z),
            dim_u=dim_nilradical(choice),
            reducible=verdict,
            source="both" if agree else "algorithm",
        )
    ]


def cmd_set(args) -> list[OutputRecord]:
    choice = _choice(args)
    comps = reducibility_set(choice).components
    return [
        OutputRecord(
            type=choice.type.value,
            n=choice.n,
            p=choice.p,
            dim_u=dim_nilradical(choice),
            first_points=tuple(FirstPoint(c.lattice.value, c.base, c.step) for c in comps),
            source="closed_form",
        )
    ]


def cmd_first(args) -> list[OutputRecord]:
    choice = _choice(args)
    if args.search:
        floor = None if args.floor is None else parse_rational(args.floor)
        points, source = first_reducible_point_searched(choice, floor), "algorithm"
    else:
        points, source = first_reducible_point(choice), "closed_form"
    return [
        OutputRecord(
            type=choice.type.value,
            n=choice.n,
            p=choice.p,
            dim_u=dim_nilradical(choice),
            first_points=tuple(FirstPoint(lat.value, z) for lat, z in points),
            source=source,
        )
    ]


def table_rows(cell: tuple[str, int]) -> list[OutputRecord]:
    """Atlas rows for one ``(type, n)``: one per parabolic and reducibility component."""
    type_, n = cell
    alg = LieAlgebra(LieType(type_), n)
    rows = []
    for p in range(1, alg.rank + 1):
        choice = ParabolicChoice(alg, p)
        dim_u = dim_nilradical(choice)
        confirmed = first_reducible_point(choice) == first_reducible_point_searched(choice)
        for c in reducibility_set(choice).components:
            gk = gkdim_scalar(choice, c.base)
            rows.append(
                OutputRecord(
                    type=type_,
                    n=n,
                    p=p,
                    z=c.base,
                    gkdim=gk,
                    dim_u=dim_u,
                    reducible=gk < dim_u,
                    first_points=(FirstPoint(c.lattice.value, c.base, c.step),),
                    wallach=wallach_annotation(choice, c.base),
                    source="both" if confirmed else "closed_form",
                )
            )
    return rows


def _parse_types(text: Optional[str]) -> list[LieType]:
    if text is None:
        return list(LieType)
    try:
        return [LieType(t.strip().upper()) for t in text.split(",")]
    except ValueError:
        raise ParseError(f"unknown type in {text!r} (expected A, B, C or D)") from None


def _parse_n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise ParseError(f"malformed --n {text!r} (expected N or LO:HI)") from None
    if bounds[0] > bounds[1]:
        raise ParseError(f"empty range --n {text!r}")
    return bounds


def cmd_table(args) -> list[OutputRecord]:
    lo, hi = _parse_n_range(args.n)
    cells = []
    for t in _parse_types(args.type):
        start = max(lo, RANK_FLOOR[t])
        if start > hi:
            raise DomainError(f"type {t.value} needs n >= {RANK_FLOOR[t]}")
        cells += [(t.value, n) for n in range(start, hi + 1)]
    return [r for rows in map_cells(table_rows, cells, args.jobs) for r in rows]


def cmd_selfcheck(args) -> int:
    report = run_selfcheck(args.max_n, args.grid, args.jobs)
    sys.stdout.write("\n".join(report.lines()) + "\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="json")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--timestamps", action="store_true", help="log start and end times to stderr")

    def point_flags(sp, with_z: bool) -> None:
        sp.add_argument("--type", required=True, type=str.upper, choices=[t.value for t in LieType])
        sp.add_argument("--n", required=True, type=int)
        sp.add_argument("--p", type=int)
        if with_z:
            sp.add_argument("--z", help="rational a or a/b")

    parser = argparse.ArgumentParser(prog="gkverma", description="GK dimensions and reducibility of scalar generalized Verma modules")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("compute", parents=[common], help="GK dimension of a highest weight module")
    point_flags(sp, with_z=True)
    sp.add_argument("--weight", help='lambda + rho as "a/b,c/d,..."')
    sp.set_defaults(handler=cmd_compute)

    sp = sub.add_parser("reducible", parents=[common], help="reducibility verdict at one z")
    point_flags(sp, with_z=True)
    sp.set_defaults(handler=cmd_reducible)

    sp = sub.add_parser("set", parents=[common], help="reducibility set")
    point_flags(sp, with_z=False)
    sp.set_defaults(handler=cmd_set)

    sp = sub.add_parser("first", parents=[common], help="first reducible points")
    point_flags(sp, with_z=False)
    sp.add_argument("--search", action="store_true", help="scan downward instead of using the closed form")
    sp.add_argument("--floor", help="lowest z scanned by --search (default -3n)")
    sp.set_defaults(handler=cmd_first)

    sp = sub.add_parser("table", parents=[common], help="first-reducible-point atlas")
    sp.add_argument("--type", help="comma-separated types (default: all)")
    sp.add_argument("--n", required=True, help="N or LO:HI")
    sp.set_defaults(handler=cmd_table)

    sp = sub.add_parser("selfcheck", parents=[common], help="consistency sweep")
    sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    sp.add_argument("--grid", default=DEFAULT_GRID, help="z grid, comma-separated LO:HI:STEP terms affine in n")
    sp.set_defaults(handler=cmd_selfcheck)
    return parser


def _stamp(label: str) -> None:
    now = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    sys.stderr.write(f"[{now}] {label}\n")


# flags whose value may start with "-" (e.g. "--z -3/2"), which argparse
# would otherwise read as an option
_VALUE_FLAGS = ("--z", "--floor", "--weight", "--grid", "--n")


def _bind_values(argv: Sequence[str]) -> list[str]:
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_bind_values(argv))
    if args.timestamps:
        _stamp(f"start {args.command}")
    try:
        if args.jobs < 1:
            raise ParseError("--jobs must be at least 1")
        result = args.handler(args)
    except (ParseError, DomainError) as exc:
        sys.stderr.write(f"gkverma: error: {exc}\n")
        return EXIT_USAGE
    if isinstance(result, int):
        status = result
    else:
        write_records(result, args.format, sys.stdout)
        status = EXIT_OK
    if args.timestamps:
        _stamp(f"end {args.command}")
    return status


if __name__ == "__main__":
    sys.exit(main())
