"""Consistency sweep: algorithm versus closed forms, plus structural laws.

The sweep is split into independent cells, one per ``(type, n, p)``.  Cells
are pure and may run in worker processes; results are merged in cell order,
so the report does not depend on the number of workers.
"""

from __future__ import annotations

import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .closedform import (
    first_reducible_point,
    first_reducible_point_searched,
    gkdim_closed_form,
    reducibility_set,
)
from .errors import ParseError
from .gkdim import gkdim_general, gkdim_integral, gkdim_scalar
from .misprints import known_table_misprint
from .records import format_rational, parse_rational
from .rootdata import (
    HALF,
    LieAlgebra,
    LieType,
    ParabolicChoice,
    dim_nilradical,
    dim_nilradical_enumerated,
    positive_roots,
    rho,
)

DEFAULT_GRID = "-3n:n:1/2,-3n+1/3:n+1/3:1"
DEFAULT_MAX_N = 10
MAX_N_CEILING = 16
SWEEP_FLOOR = {LieType.A: 2, LieType.B: 2, LieType.C: 2, LieType.D: 4}
MAX_EXAMPLES = 10

DOMINANT_POINTS = tuple(Fraction(z) for z in (0, 1, 2, 3))
OFF_LATTICE_POINTS = (Fraction(1, 3), Fraction(1, 5), Fraction(-7, 3))
RANDOM_WEIGHTS_PER_CELL = 12

SUITES = (
    "dim_nilradical",
    "rho",
    "reducibility_oracle",
    "table",
    "first_points",
    "below_minimum",
    "monotonicity",
    "dominant_vanishing",
    "off_lattice",
    "bounds",
    "integral_coherence",
    "type_a_dominance",
    "d_convention",
)

# --------------------------------------------------------------------------
# z-grid specifications

_AFFINE_TERM = re.compile(r"[+-]?[^+-]+")


def _parse_affine(text: str) -> tuple[Fraction, Fraction]:
    """``"-3n+1/3"`` -> ``(-3, 1/3)``, i.e. coefficients of ``n`` and ``1``."""
    compact = text.replace(" ", "")
    if not compact or "".join(_AFFINE_TERM.findall(compact)) != compact:
        raise ParseError(f"malformed grid bound {text!r}")
    slope, const = Fraction(0), Fraction(0)
    for term in _AFFINE_TERM.findall(compact):
        if term.endswith("n"):
            coeff = term[:-1]
            slope += parse_rational(coeff + "1" if coeff in ("", "+", "-") else coeff)
        else:
            const += parse_rational(term)
    return slope, const


@dataclass(frozen=True)
class GridTerm:
    lo: tuple[Fraction, Fraction]
    hi: tuple[Fraction, Fraction]
    step: Fraction

    def points(self, n: int) -> Iterator[Fraction]:
        lo = self.lo[0] * n + self.lo[1]
        hi = self.hi[0] * n + self.hi[1]
        z = lo
        while z <= hi:
            yield z
            z += self.step


@dataclass(frozen=True)
class ZGrid:
    """Union of arithmetic progressions ``LO:HI:STEP`` whose bounds are affine in ``n``."""

    terms: tuple[GridTerm, ...]

    @classmethod
    def parse(cls, spec: str) -> "ZGrid":
        terms = []
        for chunk in spec.split(","):
            parts = chunk.split(":")
            if len(parts) != 3:
                raise ParseError(f"grid term {chunk!r} must look like LO:HI:STEP")
            step = parse_rational(parts[2])
            if step <= 0:
                raise ParseError(f"grid step must be positive, got {parts[2]!r}")
            terms.append(GridTerm(_parse_affine(parts[0]), _parse_affine(parts[1]), step))
        return cls(tuple(terms))

    def points(self, n: int) -> tuple[Fraction, ...]:
        return tuple(sorted({z for t in self.terms for z in t.points(n)}))


# --------------------------------------------------------------------------
# results


@dataclass
class SuiteResult:
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    allowlisted: list[str] = field(default_factory=list)
    silent: int = 0

    def merge(self, other: "SuiteResult") -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.allowlisted.extend(other.allowlisted)
        self.silent += other.silent

    def check(self, ok: bool, witness: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(witness)


@dataclass
class Report:
    max_n: int
    grid: str
    suites: dict[str, SuiteResult]

    @property
    def ok(self) -> bool:
        return all(not s.failures for s in self.suites.values())

    def lines(self) -> list[str]:
        out = [f"selfcheck max_n={self.max_n} grid={self.grid}"]
        for name in SUITES:
            s = self.suites[name]
            status = "PASS" if not s.failures else "FAIL"
            extra = ""
            if s.allowlisted:
                extra += f" allowlisted={len(s.allowlisted)}"
            if s.silent:
                extra += f" silent={s.silent}"
            out.append(f"{status} {name}: checked={s.checked} failed={len(s.failures)}{extra}")
            out += [f"  mismatch: {w}" for w in s.failures[:MAX_EXAMPLES]]
            out += [f"  allowlisted: {w}" for w in s.allowlisted[:MAX_EXAMPLES]]
        out.append("selfcheck: " + ("all suites pass" if self.ok else "mismatches found"))
        return out


# --------------------------------------------------------------------------
# cells


def _tag(choice: ParabolicChoice, z: Optional[Fraction] = None) -> str:
    head = f"{choice.type.value} n={choice.n} p={choice.p}"
    return head if z is None else f"{head} z={format_rational(z)}"


def _random_integral_weight(rng: random.Random, algebra: LieAlgebra) -> tuple[Fraction, ...]:
    n = algebra.n
    ints = [Fraction(rng.randint(-2 * n, 2 * n)) for _ in range(n)]
    if algebra.type is LieType.C or rng.random() < 0.5:
        return tuple(ints)
    if algebra.type is LieType.A:
        shift = Fraction(rng.randint(1, 5), rng.randint(2, 6))
        return tuple(v + shift for v in ints)
    return tuple(v + HALF for v in ints)


def random_pq_dominant(rng: random.Random, n: int, p: int, integral: bool) -> tuple[Fraction, ...]:
    """Strictly decreasing integral blocks of sizes ``p`` and ``n - p``.

    With ``integral=False`` the second block is shifted off the integers, so
    no entry of it is congruent to an entry of the first block.
    """

    def block(size: int) -> list[Fraction]:
        top = Fraction(rng.randint(-n, n))
        out = [top]
        for _ in range(size - 1):
            out.append(out[-1] - rng.randint(1, 3))
        return out

    shift = Fraction(0)
    if not integral:
        shift = Fraction(rng.randint(1, 5), rng.randint(2, 7))
        if shift.denominator == 1:
            shift += HALF
    first = block(p)
    return tuple(first + [v + shift for v in block(n - p)])


def _second_column(x: Sequence[Fraction]) -> int:
    # columns of an RS shape are strictly decreasing subsequences, and a
    # (p,q)-dominant weight is a union of two of them, so the second column
    # has n minus the longest strictly decreasing subsequence boxes
    best = [1] * len(x)
    for i in range(len(x)):
        for j in range(i):
            if x[j] > x[i]:
                best[i] = max(best[i], best[j] + 1)
    return len(x) - max(best, default=0)


def _cell_seed(choice: ParabolicChoice) -> int:
    return {"A": 1, "B": 2, "C": 3, "D": 4}[choice.type.value] * 10_000 + choice.n * 100 + choice.p


def run_cell(args: tuple[str, int, int, tuple[Fraction, ...]]) -> dict[str, SuiteResult]:
    type_, n, p, grid = args
    choice = ParabolicChoice.of(type_, n, p)
    algebra = choice.algebra
    res = {name: SuiteResult() for name in SUITES}
    dim_u = dim_nilradical(choice)

    res["dim_nilradical"].check(
        dim_u == dim_nilradical_enumerated(choice), f"{_tag(choice)}: closed={dim_u} enumerated={dim_nilradical_enumerated(choice)}"
    )
    if p == 1:
        half_sum = tuple(sum(col) / 2 for col in zip(*(r.vector(n) for r in positive_roots(algebra))))
        res["rho"].check(half_sum == rho(algebra), f"{algebra}: half-sum={half_sum}")

    gk: dict[Fraction, int] = {}

    def g(z: Fraction) -> int:
        if z not in gk:
            gk[z] = gkdim_scalar(choice, z)
        return gk[z]

    rset = reducibility_set(choice)
    for z in grid:
        v = g(z)
        res["reducibility_oracle"].check(
            (v < dim_u) == (z in rset), f"{_tag(choice, z)}: algorithm={v < dim_u} closed_form={z in rset}"
        )
        res["bounds"].check(0 <= v <= dim_u, f"{_tag(choice, z)}: gkdim={v} dim_u={dim_u}")
        res["monotonicity"].check(g(z + 1) <= v, f"{_tag(choice, z)}: g(z)={v} g(z+1)={g(z + 1)}")
        if choice.type is not LieType.C:
            tv = gkdim_closed_form(choice, z)
            table = res["table"]
            if tv is None:
                table.silent += 1
            elif tv == v:
                table.checked += 1
            else:
                reason = known_table_misprint(choice, z, v)
                witness = f"{_tag(choice, z)}: table={tv} algorithm={v}"
                table.checked += 1
                if reason is None:
                    table.failures.append(witness)
                else:
                    table.allowlisted.append(f"{witness} [{reason}]")
        if choice.type is LieType.D and p == n - 1:
            flipped = gkdim_scalar(choice, z, standard_d_convention=True)
            res["d_convention"].check(flipped == v, f"{_tag(choice, z)}: flipped={flipped} default={v}")

    closed = first_reducible_point(choice)
    searched = first_reducible_point_searched(choice)
    res["first_points"].check(closed == searched, f"{_tag(choice)}: closed={closed} searched={searched}")

    lowest = min(c.base for c in rset.components)
    for z in (lowest - HALF, lowest - 1, lowest - 3 * HALF):
        res["below_minimum"].check(g(z) == dim_u, f"{_tag(choice, z)}: gkdim={g(z)} dim_u={dim_u}")
    for z in DOMINANT_POINTS:
        res["dominant_vanishing"].check(g(z) == 0, f"{_tag(choice, z)}: gkdim={g(z)}")
    for z in OFF_LATTICE_POINTS:
        res["off_lattice"].check(g(z) == dim_u, f"{_tag(choice, z)}: gkdim={g(z)} dim_u={dim_u}")

    rng = random.Random(_cell_seed(choice))
    for _ in range(RANDOM_WEIGHTS_PER_CELL):
        w = _random_integral_weight(rng, algebra)
        a, b = gkdim_integral(algebra, w), gkdim_general(algebra, w)
        res["integral_coherence"].check(a == b, f"{algebra} weight={list(map(str, w))}: integral={a} general={b}")
    if choice.type is LieType.A:
        for integral in (True, False):
            for _ in range(RANDOM_WEIGHTS_PER_CELL // 2):
                w = random_pq_dominant(rng, n, p, integral)
                got = gkdim_general(algebra, w)
                if integral:
                    m = _second_column(w)
                    want = m * (n - m)
                else:
                    want = p * (n - p)
                res["type_a_dominance"].check(got == want, f"{_tag(choice)} weight={list(map(str, w))}: gkdim={got} expected={want}")
    return res


def sweep_cells(max_n: int, grid: ZGrid, types: Iterable[LieType] = tuple(LieType)) -> list[tuple]:
    cells = []
    for t in types:
        for n in range(SWEEP_FLOOR[t], max_n + 1):
            alg = LieAlgebra(t, n)
            pts = grid.points(n)
            cells += [(t.value, n, p, pts) for p in range(1, alg.rank + 1)]
    return cells


def map_cells(func, cells: Sequence, jobs: int = 1) -> list:
    """``map`` in cell order, optionally over a process pool."""
    if jobs <= 1 or len(cells) <= 1:
        return [func(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, cells, chunksize=max(1, len(cells) // (4 * jobs))))


def run_selfcheck(max_n: int = DEFAULT_MAX_N, grid_spec: str = DEFAULT_GRID, jobs: int = 1) -> Report:
    if not 2 <= max_n <= MAX_N_CEILING:
        raise ParseError(f"max_n must lie in 2..{MAX_N_CEILING}, got {max_n}")
    grid = ZGrid.parse(grid_spec)
    suites = {name: SuiteResult() for name in SUITES}
    for cell in map_cells(run_cell, sweep_cells(max_n, grid), jobs):
        for name, r in cell.items():
            suites[name].merge(r)
    return Report(max_n, grid_spec, suites)
