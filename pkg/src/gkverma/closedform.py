"""Closed-form reducibility loci, GK-dimension tables and Wallach labels.

The algorithmic verdict (:func:`is_reducible`) compares the GK dimension of
``L(z xi_p)`` against ``dim(u)``.  Everything else in this module is a
closed-form answer meant to be checked against it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .gkdim import gkdim_scalar
from .rootdata import HALF, LieType, ParabolicChoice, dim_nilradical

ONE = Fraction(1)


class Lattice(str, enum.Enum):
    INT = "Z"
    HALF_INT = "1/2+Z"
    HALF_STEP = "1/2*Z"


def _is_int(z: Fraction) -> bool:
    return z.denominator == 1


def _is_half_int(z: Fraction) -> bool:
    return z.denominator == 2


@dataclass(frozen=True, order=True)
class HalfLattice:
    """The progression ``base + step * Z_{>=0}`` with ``step`` in ``{1/2, 1}``."""

    base: Fraction
    step: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", Fraction(self.base))
        object.__setattr__(self, "step", Fraction(self.step))
        if self.step not in (HALF, ONE):
            raise ValueError(f"step must be 1/2 or 1, got {self.step}")
        if self.base.denominator > 2:
            raise ValueError(f"base must lie in (1/2)Z, got {self.base}")

    def __contains__(self, z: object) -> bool:
        k = (Fraction(z) - self.base) / self.step
        return k >= 0 and k.denominator == 1

    @property
    def lattice(self) -> Lattice:
        if self.step == HALF:
            return Lattice.HALF_STEP
        return Lattice.INT if _is_int(self.base) else Lattice.HALF_INT


@dataclass(frozen=True)
class ReducibilitySet:
    """Finite union of half-lattices; ``z`` not in ``(1/2)Z`` is never a member."""

    components: tuple[HalfLattice, ...]

    @classmethod
    def of(cls, parts: Iterable[tuple[Fraction, Fraction] | HalfLattice]) -> "ReducibilitySet":
        comps = [c if isinstance(c, HalfLattice) else HalfLattice(*c) for c in parts]
        return cls(_normalize(comps))

    def __contains__(self, z: object) -> bool:
        return any(z in c for c in self.components)


def _normalize(comps: list[HalfLattice]) -> tuple[HalfLattice, ...]:
    halves = {c for c in comps if c.step == HALF}
    ints = sorted({c for c in comps if c.step == ONE})
    # two step-1 progressions with bases 1/2 apart form one step-1/2 progression
    for a in ints:
        for b in ints:
            if b.base - a.base == HALF:
                halves.add(_half_step(a.base))
    # a step-1/2 progression covers every point of (1/2)Z above its base
    lowest_half = min((h.base for h in halves), default=None)
    out = [] if lowest_half is None else [_half_step(lowest_half)]
    for c in ints:
        if lowest_half is not None and c.base >= lowest_half:
            continue
        if any(o.base < c.base and _is_int(c.base - o.base) for o in ints):
            continue
        out.append(c)
    return tuple(sorted(out))


def _half_step(base: Fraction) -> HalfLattice:
    return HalfLattice(base, HALF)


def is_reducible(choice: ParabolicChoice, z: Fraction | int) -> bool:
    """Reducibility of the scalar generalized Verma module ``M_I(z xi_p)``."""
    return gkdim_scalar(choice, z) < dim_nilradical(choice)


def reducibility_set(choice: ParabolicChoice) -> ReducibilitySet:
    n, p, t = choice.n, choice.p, choice.type
    F = Fraction
    if t is LieType.A:
        return ReducibilitySet.of([(1 - min(p, n - p), 1)])
    if t is LieType.B:
        if p == 1:
            return ReducibilitySet.of([(0, 1), (F(3, 2) - n, 1)])
        if p < n:
            if p % 2 == 0 or 3 * p < 2 * n + 1:
                return ReducibilitySet.of([(1 - n + F(p, 2), HALF)])
            return ReducibilitySet.of([(HALF - n + F(p, 2), HALF)])
        return ReducibilitySet.of([(2 - n if n % 2 == 0 else 1 - n, 1)])
    if t is LieType.C:
        if p == 1:
            return ReducibilitySet.of([(0, 1)])
        if p < n:
            if p % 2 == 1 or 3 * p > 2 * n:
                return ReducibilitySet.of([(F(p, 2) - n + HALF, HALF)])
            return ReducibilitySet.of([(F(p, 2) - n, HALF)])
        return ReducibilitySet.of([(HALF - F(n, 2), HALF)])
    if p == 1:
        return ReducibilitySet.of([(2 - n, 1)])
    if p <= n - 2:
        if p % 2 == 1 or 3 * p < 2 * n:
            return ReducibilitySet.of([(F(3, 2) + F(p, 2) - n, HALF)])
        return ReducibilitySet.of([(1 + F(p, 2) - n, HALF)])
    return ReducibilitySet.of([(2 - n if n % 2 == 0 else 3 - n, 1)])


def first_reducible_point(choice: ParabolicChoice) -> list[tuple[Lattice, Fraction]]:
    return [(c.lattice, c.base) for c in reducibility_set(choice).components]


def default_floor(choice: ParabolicChoice) -> Fraction:
    return Fraction(-3 * choice.n)


def first_reducible_point_searched(
    choice: ParabolicChoice, z_floor: Optional[Fraction | int] = None
) -> list[tuple[Lattice, Fraction]]:
    """Minimal reducible ``z`` on ``Z`` and on ``1/2 + Z``, found by scanning down to ``z_floor``.

    Reducible points are upward closed on each lattice, so two lattice
    minima exactly ``1/2`` apart are reported as one half-step point.  A
    lattice with no reducible point above the floor is omitted.
    """
    floor = default_floor(choice) if z_floor is None else Fraction(z_floor)
    top = choice.n + 1
    found: dict[Lattice, Fraction] = {}
    for lattice, offset in ((Lattice.INT, Fraction(0)), (Lattice.HALF_INT, HALF)):
        z = top + offset
        lowest = None
        while z >= floor:
            if is_reducible(choice, z):
                lowest = z
            z -= 1
        if lowest is not None:
            found[lattice] = lowest
    if len(found) == 2 and abs(found[Lattice.INT] - found[Lattice.HALF_INT]) == HALF:
        return [(Lattice.HALF_STEP, min(found.values()))]
    return sorted(((lat, z) for lat, z in found.items()), key=lambda item: item[1])


# ---------------------------------------------------------------------------
# GK-dimension tables for L(z xi_p), transcribed branch by branch.  Branches
# are tried in printed order and the first match wins; no match means the
# table is silent at that z.  Index variables (k) range over the integers
# constrained only by the printed inequalities.

def _table_a(n: int, p: int, z: Fraction) -> Optional[int]:
    r = min(p, n - p)
    if _is_int(z) and z >= 0:
        return 0
    if _is_int(z):
        k = -int(z)
        if 1 <= k <= r - 1:
            return k * (n - k)
    if z < 1 - r or not _is_int(z):
        return p * (n - p)
    return None


def _table_b(n: int, p: int, z: Fraction) -> Optional[int]:
    hit = table_b_branch(n, p, z)
    return None if hit is None else hit[0]


# branch label of the shifted integral family whose printed value ends in "+ n"
B_SHIFTED_PLUS_N = "int-shifted-plus-n"


def table_b_branch(n: int, p: int, z: Fraction) -> Optional[tuple[int, str]]:
    """Type B table value together with a label naming the branch that produced it."""
    F = Fraction
    dim_u = (4 * n * p - 3 * p * p + p) // 2
    half_z = _is_int(2 * z)
    if p == 1:
        if z < F(3, 2) - n or (_is_int(z) and z < 0) or not half_z:
            return 2 * n - 1, "generic"
        if _is_half_int(z) and z >= F(3, 2) - n:
            return 2 * n - 2, "half"
        if _is_int(z) and z >= 0:
            return 0, "dominant"
        return None
    if p == n:
        if _is_int(z) and z >= 0:
            return 0, "dominant"
        threshold = 2 - n if n % 2 == 0 else 1 - n
        kmax = (n - 2) // 2 if n % 2 == 0 else (n - 1) // 2
        if z < threshold or not _is_int(z):
            return n * (n + 1) // 2, "generic"
        for k in range(1, kmax + 1):
            if z in (-2 * k, -2 * k + 1):
                return k * (2 * n - 2 * k + 1), "int-pair"
        return None

    if _is_int(z) and z >= 0:
        return 0, "dominant"
    odd_high = p % 2 == 1 and 3 * p >= 2 * n + 1
    low = F(1, 2) - n + F(p, 2) if odd_high else 1 - n + F(p, 2)
    if z < low or not half_z:
        return dim_u, "generic"
    base = 2 * n * p - 2 * p * p
    if _is_int(z):
        k = -int(z)  # z = -k
        if odd_high:
            if 1 <= k <= n - p:
                return k * (2 * n - 2 * k + 1), "int-small"
        else:
            if p >= k and 1 <= k <= n - p:
                return k * (2 * n - 2 * k + 1), "int-small"
            if p < k <= n - p:
                return p * (2 * n - 2 * p + 1), "int-plateau"
        k = p - n - int(z)  # z = p - n - k
        if odd_high:
            if 1 <= k <= n - p:
                return base + 2 * k * p - 2 * k * k + n, B_SHIFTED_PLUS_N
            if n - p < k <= F(p - 1, 2):
                return base + 2 * k * p - 2 * k * k + k, "int-shifted-plus-k"
        elif p % 2 == 0:
            if k < F(p, 2) and 1 <= k <= n - p:
                return base + 2 * k * p - 2 * k * k + n, B_SHIFTED_PLUS_N
            if n - p < k <= F(p, 2) - 1:
                return base + 2 * k * p - 2 * k * k + k, "int-shifted-plus-k"
        else:
            if 1 <= k <= 2 * p - n:
                return base + 2 * k * p - 2 * k * k + n, B_SHIFTED_PLUS_N
            if 2 * p - n < k <= F(p - 3, 2):
                return base + (2 * k + 1) * (p - k), "int-shifted-odd"
        return None
    k = int(-z - HALF)  # z = -k - 1/2
    if k < n - p:
        return base, "half-small"
    k = int(p - n - z - HALF)  # z = p - n - k - 1/2
    kmax = F(p - 4, 2) if p % 2 == 0 else F(p - 3, 2)
    if 0 <= k <= kmax:
        return base + k * (2 * p - 2 * k - 3) + 2 * p - 1, "half-shifted"
    return None


def _table_d(n: int, p: int, z: Fraction) -> Optional[int]:
    F = Fraction
    half_z = _is_int(2 * z)
    if p == 1:
        if z < 2 - n or not _is_int(z):
            return 2 * n - 2
        if 2 - n <= z <= -1:
            return 2 * n - 3
        return 0
    if p >= n - 1:
        if _is_int(z) and z >= 0:
            return 0
        threshold = 2 - n if n % 2 == 0 else 3 - n
        kmax = (n - 2) // 2 if n % 2 == 0 else (n - 3) // 2
        if z < threshold or not _is_int(z):
            return n * (n - 1) // 2
        for k in range(1, kmax + 1):
            if z in (-2 * k, -2 * k + 1):
                return k * (2 * n - 2 * k - 1)
        return None

    dim_u = (4 * n * p - 3 * p * p - p) // 2
    base = 2 * n * p - 2 * p * p
    if _is_int(z) and z >= 0:
        return 0
    even_high = p % 2 == 0 and 3 * p >= 2 * n
    low = 1 + F(p, 2) - n if even_high else F(3 + p, 2) - n
    if z < low or not half_z:
        return dim_u
    if _is_int(z):
        k = -int(z)  # z = -k
        if even_high:
            if 1 <= k < n - p:
                return 2 * n * k - 2 * k * k - k
        elif p % 2 == 1:
            if k < n - p and 1 <= k <= p:
                return 2 * n * k - 2 * k * k - k
            if p < k < n - p:
                return base - p
        else:
            if 1 <= k < n - p and k < p:
                return 2 * n * k - 2 * k * k - k
            if p <= k < n - p:
                return base - p
        k = p - n - int(z)  # z = p - n - k
        if even_high:
            if 0 <= k < n - p:
                return base + k * (2 * p - 2 * k - 2) + n - p - 1
            if n - p <= k < F(p, 2):
                return base + k * (2 * p - 2 * k - 1)
        elif p % 2 == 1:
            if max(0, 2 * p - n) < k <= F(p - 3, 2):
                return base + k * (2 * p - 2 * k - 3) + p - 1
            if k <= 2 * p - n and 0 <= k < n - p:
                return base + k * (2 * p - 2 * k - 2) + n - p - 1
            if n - p <= k <= F(p - 3, 2):
                return base + k * (2 * p - 2 * k - 1)
        else:
            if 0 <= k <= 2 * p - n:
                return base + k * (2 * p - 2 * k - 2) + n - p - 1
            # printed as the chain "2p - n < 0 <= k <= (p-3)/2"
            if 2 * p - n < 0 <= k <= F(p - 3, 2):
                return base + k * (2 * p - 2 * k - 3) + p - 1
        return None
    k = int(HALF - z)  # z = -k + 1/2
    if k <= n - p:
        return base
    k = int(p - n - z - HALF)  # z = p - n - k - 1/2
    kmax = F(p - 5, 2) if p % 2 == 1 else F(p - 4, 2)
    if 0 <= k <= kmax:
        return base + k * (2 * p - 2 * k - 5) + 2 * p - 3
    return None


def gkdim_closed_form(choice: ParabolicChoice, z: Fraction | int) -> Optional[int]:
    """Tabulated GK dimension of ``L(z xi_p)``; ``None`` for type C or where the table is silent."""
    z = Fraction(z)
    n, p, t = choice.n, choice.p, choice.type
    if t is LieType.A:
        return _table_a(n, p, z)
    if t is LieType.B:
        return _table_b(n, p, z)
    if t is LieType.D:
        return _table_d(n, p, z)
    return None


def _ordinal(k: int) -> str:
    if 10 <= k % 100 <= 20:
        suffix = "th"
    else:
        suffix = {1: "st", 2: "nd", 3: "rd"}.get(k % 10, "th")
    return f"{k}{suffix}"


def wallach_annotation(choice: ParabolicChoice, z: Fraction | int) -> Optional[str]:
    z = Fraction(z)
    n, p, t = choice.n, choice.p, choice.type
    if t is LieType.A and _is_int(z):
        k = -int(z)
        if 1 <= k <= min(p, n - p) - 1:
            return f"{_ordinal(k)} Wallach rep of SU({p},{n - p})"
    elif t is LieType.B and p == 1 and z == -(n - Fraction(3, 2)):
        return f"Wallach rep of SO(2,{2 * n - 1})"
    elif t is LieType.C and p == n and _is_int(2 * z):
        k = int(-2 * z)
        if 1 <= k <= n - 1:
            return f"{_ordinal(k)} Wallach rep of Sp({n},R)"
    elif t is LieType.D and p == 1 and z == -(n - 2):
        return f"Wallach rep of SO(2,{2 * n - 2})"
    elif t is LieType.D and p == n and _is_int(z) and z < 0 and z % 2 == 0:
        k = int(-z) // 2
        if 1 <= k <= n // 2 - 1:
            return f"{_ordinal(k)} Wallach rep of SO*({2 * n})"
    return None
