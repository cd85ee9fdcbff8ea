"""Robinson-Schensted shapes and the partition statistics built on them."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (a Young diagram shape).

    Compares equal to the plain tuple of its rows.
    """

    def __new__(cls, rows: Iterable[int] = ()) -> "Partition":
        rows = tuple(rows)
        for a in rows:
            if isinstance(a, bool) or not isinstance(a, int) or a < 1:
                raise ValueError(f"partition rows must be positive integers: {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError(f"partition rows must be weakly decreasing: {rows}")
        return super().__new__(cls, rows)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True)
class RowParityCounts:
    """Per-row numbers of even and odd boxes; box ``(k, l)`` is even iff ``k + l`` is even."""

    ev: tuple[int, ...]
    odd: tuple[int, ...]


def _scaled(x: Sequence[Fraction | int]) -> list[int]:
    # clear denominators; order and ties are preserved
    dens = [v.denominator for v in x if isinstance(v, Fraction) and v.denominator != 1]
    if not dens:
        return [int(v) for v in x]
    scale = lcm(*dens)
    return [v.numerator * (scale // v.denominator) for v in map(Fraction, x)]


def rs_shape(x: Sequence[Fraction | int]) -> Partition:
    """Shape of the Robinson-Schensted insertion tableau of ``x``.

    Row insertion bumps the leftmost entry strictly greater than the
    incoming value, so equal values stay together in a row.
    """
    rows: list[list[int]] = []
    for v in _scaled(x):
        for row in rows:
            k = bisect_right(row, v)
            if k == len(row):
                row.append(v)
                break
            row[k], v = v, row[k]
        else:
            rows.append([v])
    return Partition(len(r) for r in rows)


def dual_partition(p: Sequence[int]) -> Partition:
    if not p:
        return Partition()
    return Partition(sum(1 for r in p if r > c) for c in range(p[0]))


def row_parity_counts(p: Sequence[int]) -> RowParityCounts:
    ev, odd = [], []
    for i, pi in enumerate(p, start=1):
        lo, hi = pi // 2, (pi + 1) // 2
        if i % 2:
            ev.append(hi)
            odd.append(lo)
        else:
            ev.append(lo)
            odd.append(hi)
    return RowParityCounts(tuple(ev), tuple(odd))


def _weighted(rows: Sequence[int]) -> int:
    return sum(k * r for k, r in enumerate(rows))


def f_a(x: Sequence[Fraction | int]) -> int:
    """``sum (k-1) p_k`` over the RS shape of ``x``."""
    return _weighted(rs_shape(x))


def g_odd(x: Sequence[Fraction | int]) -> int:
    return _weighted(row_parity_counts(rs_shape(x)).odd)


def g_ev(x: Sequence[Fraction | int]) -> int:
    return _weighted(row_parity_counts(rs_shape(x)).ev)
