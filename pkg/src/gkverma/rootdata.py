"""Classical root data and maximal parabolic bookkeeping.

All weights are tuples of :class:`fractions.Fraction` in the standard
``e_i`` coordinates.  For type A the parameter ``n`` is the size of the
matrix algebra ``sl(n)``: weights have length ``n`` and the rank is
``n - 1``.  For types B, C and D, ``n`` is the rank.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import ParabolicError, RankError

Weight = tuple[Fraction, ...]

HALF = Fraction(1, 2)


class LieType(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


RANK_FLOOR = {LieType.A: 2, LieType.B: 2, LieType.C: 2, LieType.D: 3}


@dataclass(frozen=True)
class LieAlgebra:
    """A classical complex Lie algebra ``sl(n)``, ``so(2n+1)``, ``sp(2n)`` or ``so(2n)``."""

    type: LieType
    n: int

    def __post_init__(self) -> None:
        t = LieType(self.type)
        object.__setattr__(self, "type", t)
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise RankError(f"n must be an integer, got {self.n!r}")
        if self.n < RANK_FLOOR[t]:
            raise RankError(f"type {t.value} requires n >= {RANK_FLOOR[t]}, got n={self.n}")

    @property
    def rank(self) -> int:
        return self.n - 1 if self.type is LieType.A else self.n

    @property
    def num_positive_roots(self) -> int:
        n = self.n
        return {
            LieType.A: n * (n - 1) // 2,
            LieType.B: n * n,
            LieType.C: n * n,
            LieType.D: n * n - n,
        }[self.type]

    def __str__(self) -> str:
        return f"{self.type.value}{self.n}"


@dataclass(frozen=True)
class ParabolicChoice:
    """Maximal parabolic obtained by removing the simple root ``alpha_p``."""

    algebra: LieAlgebra
    p: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise ParabolicError(f"p must be an integer, got {self.p!r}")
        hi = self.algebra.rank
        if not 1 <= self.p <= hi:
            raise ParabolicError(f"p must lie in 1..{hi} for {self.algebra}, got p={self.p}")

    @classmethod
    def of(cls, type_: str | LieType, n: int, p: int) -> "ParabolicChoice":
        return cls(LieAlgebra(LieType(type_), n), p)

    @property
    def type(self) -> LieType:
        return self.algebra.type

    @property
    def n(self) -> int:
        return self.algebra.n


class RootKind(str, enum.Enum):
    DIFF = "e_i-e_j"
    SUM = "e_i+e_j"
    SHORT = "e_i"
    LONG = "2e_i"


@dataclass(frozen=True, order=True)
class Root:
    """A positive root stored structurally; indices are 1-based."""

    kind: RootKind
    i: int
    j: Optional[int] = None

    def __post_init__(self) -> None:
        two_index = self.kind in (RootKind.DIFF, RootKind.SUM)
        if two_index and (self.j is None or not self.i < self.j):
            raise ValueError(f"{self.kind.value} needs i < j, got i={self.i}, j={self.j}")
        if not two_index and self.j is not None:
            raise ValueError(f"{self.kind.value} takes a single index")

    def vector(self, n: int) -> Weight:
        v = [Fraction(0)] * n
        if self.kind is RootKind.DIFF:
            v[self.i - 1] += 1
            v[self.j - 1] -= 1
        elif self.kind is RootKind.SUM:
            v[self.i - 1] += 1
            v[self.j - 1] += 1
        elif self.kind is RootKind.SHORT:
            v[self.i - 1] += 1
        else:
            v[self.i - 1] += 2
        return tuple(v)

    def __str__(self) -> str:
        if self.kind is RootKind.DIFF:
            return f"e{self.i}-e{self.j}"
        if self.kind is RootKind.SUM:
            return f"e{self.i}+e{self.j}"
        if self.kind is RootKind.SHORT:
            return f"e{self.i}"
        return f"2e{self.i}"


def rho(algebra: LieAlgebra) -> Weight:
    """Half-sum of positive roots."""
    n = algebra.n
    t = algebra.type
    if t is LieType.A:
        return tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))
    if t is LieType.B:
        return tuple(Fraction(2 * (n - i) - 1, 2) for i in range(n))
    if t is LieType.C:
        return tuple(Fraction(n - i) for i in range(n))
    return tuple(Fraction(n - 1 - i) for i in range(n))


def fundamental_weight(choice: ParabolicChoice, standard_d_convention: bool = False) -> Weight:
    """Fundamental weight attached to the removed simple root.

    For type D with ``p = n - 1`` the default returns ``(1/2, ..., 1/2)``,
    the same vector as ``p = n``.  Pass ``standard_d_convention=True`` to
    get the usual ``(1/2, ..., 1/2, -1/2)`` instead.
    """
    n, p, t = choice.n, choice.p, choice.type
    if t is LieType.A:
        a = Fraction(n - p, n)
        return tuple([a] * p + [a - 1] * (n - p))
    spin = (t is LieType.B and p == n) or (t is LieType.D and p >= n - 1)
    if spin:
        xi = [HALF] * n
        if t is LieType.D and p == n - 1 and standard_d_convention:
            xi[-1] = -HALF
        return tuple(xi)
    return tuple([Fraction(1)] * p + [Fraction(0)] * (n - p))


def scalar_weight(choice: ParabolicChoice, z: Fraction | int, standard_d_convention: bool = False) -> Weight:
    """``lambda + rho`` for ``lambda = z * xi_p``."""
    z = Fraction(z)
    xi = fundamental_weight(choice, standard_d_convention)
    return tuple(z * x + r for x, r in zip(xi, rho(choice.algebra)))


def positive_roots(algebra: LieAlgebra) -> list[Root]:
    n, t = algebra.n, algebra.type
    roots = [Root(RootKind.DIFF, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if t is LieType.A:
        return roots
    roots += [Root(RootKind.SUM, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if t is LieType.B:
        roots += [Root(RootKind.SHORT, i) for i in range(1, n + 1)]
    elif t is LieType.C:
        roots += [Root(RootKind.LONG, i) for i in range(1, n + 1)]
    return roots


def simple_roots(algebra: LieAlgebra) -> list[Root]:
    n, t = algebra.n, algebra.type
    if t is LieType.A:
        return [Root(RootKind.DIFF, i, i + 1) for i in range(1, n)]
    simple = [Root(RootKind.DIFF, i, i + 1) for i in range(1, n)]
    last = {
        LieType.B: Root(RootKind.SHORT, n),
        LieType.C: Root(RootKind.LONG, n),
        LieType.D: Root(RootKind.SUM, n - 1, n),
    }[t]
    return simple + [last]


def dim_nilradical(choice: ParabolicChoice) -> int:
    n, p, t = choice.n, choice.p, choice.type
    if t is LieType.A:
        return p * (n - p)
    if t in (LieType.B, LieType.C):
        # 2np - 3p^2/2 + p/2, kept integral
        return (4 * n * p - 3 * p * p + p) // 2
    if p >= n - 1:
        # both spin nodes give an A_{n-1} Levi
        return n * (n - 1) // 2
    return (4 * n * p - 3 * p * p - p) // 2


@lru_cache(maxsize=None)
def _coordinate_map(algebra: LieAlgebra) -> tuple[tuple[Weight, ...], tuple[Weight, ...]]:
    """Left inverse of the simple-root matrix, plus rows annihilating its span.

    Exact Gauss-Jordan elimination of ``[B | I]``, where the columns of ``B``
    are the simple roots.  Pivot rows of the right block map a vector of the
    root span to its simple-root coordinates; the remaining rows vanish
    exactly on that span.
    """
    n = algebra.n
    basis = [s.vector(n) for s in simple_roots(algebra)]
    r = len(basis)
    rows = [[basis[k][i] for k in range(r)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pivots: list[int] = []
    row = 0
    for col in range(r):
        pivot = next((i for i in range(row, n) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        lead = rows[row][col]
        rows[row] = [x / lead for x in rows[row]]
        for i in range(n):
            if i != row and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[row])]
        pivots.append(col)
        row += 1
    inverse = [tuple(Fraction(0) for _ in range(n))] * r
    for i, col in enumerate(pivots):
        inverse[col] = tuple(rows[i][r:])
    annihilator = tuple(tuple(rows[i][r:]) for i in range(row, n))
    return tuple(inverse), annihilator


def _sparse(root: Root) -> list[tuple[int, int]]:
    i = root.i - 1
    if root.kind is RootKind.DIFF:
        return [(i, 1), (root.j - 1, -1)]
    if root.kind is RootKind.SUM:
        return [(i, 1), (root.j - 1, 1)]
    return [(i, 1 if root.kind is RootKind.SHORT else 2)]


def simple_root_coefficients(algebra: LieAlgebra, root: Root) -> list[Fraction]:
    """Expand ``root`` in the simple-root basis (exact linear algebra, no closed form)."""
    inverse, annihilator = _coordinate_map(algebra)
    entries = _sparse(root)
    if any(sum(row[i] * c for i, c in entries) != 0 for row in annihilator):
        raise ArithmeticError(f"{root} is not in the root lattice of {algebra}")
    return [sum((row[i] * c for i, c in entries), Fraction(0)) for row in inverse]


def levi_positive_roots(choice: ParabolicChoice) -> list[Root]:
    """Positive roots whose support avoids ``alpha_p``."""
    alg = choice.algebra
    row = _coordinate_map(alg)[0][choice.p - 1]
    return [rt for rt in positive_roots(alg) if sum(row[i] * c for i, c in _sparse(rt)) == 0]


def dim_nilradical_enumerated(choice: ParabolicChoice) -> int:
    return len(positive_roots(choice.algebra)) - len(levi_positive_roots(choice))


def iter_choices(type_: LieType | str, n: int) -> Iterator[ParabolicChoice]:
    alg = LieAlgebra(LieType(type_), n)
    for p in range(1, alg.rank + 1):
        yield ParabolicChoice(alg, p)


def coerce_weight(values: Sequence[Fraction | int | str]) -> Weight:
    return tuple(Fraction(v) for v in values)
