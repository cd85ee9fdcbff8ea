"""Gelfand-Kirillov dimension of simple highest weight modules ``L(lambda)``.

Every function takes ``lambda + rho`` (not ``lambda``) in ``e_i``
coordinates.  Entries are grouped into congruence classes and each class is
fed to a Robinson-Schensted shape statistic:

* type A: one class per residue of ``x mod Z``, each scored with ``f_a``;
* types B/C/D: classes of ``{x, -x} mod Z``.  The integral class and the
  half-integral class are doubled with :func:`minus_extension` and scored
  with ``g_odd`` or ``g_ev`` depending on the type; every other class is
  folded by :func:`tilde_normalize` and scored with ``f_a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ClassError, IntegralityError, WeightError
from .rootdata import LieAlgebra, LieType, ParabolicChoice, Weight, scalar_weight
from .tableaux import f_a, g_ev, g_odd

Seq = tuple[Fraction, ...]


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def _is_half_int(x: Fraction) -> bool:
    return x.denominator == 2


@dataclass(frozen=True)
class ClassDecomposition:
    class_int: Optional[Seq] = None
    class_half: Optional[Seq] = None
    others: list[Seq] = field(default_factory=list)


def minus_extension(x: Sequence[Fraction]) -> Seq:
    """``x`` followed by the negated reverse of ``x``."""
    x = tuple(Fraction(v) for v in x)
    return x + tuple(-v for v in reversed(x))


def _class_key(algebra_type: LieType, x: Fraction) -> tuple[int, int]:
    # residue of x mod Z (type A) or of {x, -x} mod Z, as (numerator, denominator)
    d = x.denominator
    r = x.numerator % d
    if algebra_type is not LieType.A:
        r = min(r, -r % d)
    return r, d


def _check_length(algebra: LieAlgebra, weight: Sequence) -> Weight:
    if len(weight) != algebra.n:
        raise WeightError(f"{algebra} needs a weight of length {algebra.n}, got {len(weight)}")
    return tuple(Fraction(v) for v in weight)


def decompose_classes(algebra: LieAlgebra, weight: Sequence[Fraction]) -> ClassDecomposition:
    w = _check_length(algebra, weight)
    groups: dict[tuple[int, int], list[Fraction]] = {}
    for v in w:
        groups.setdefault(_class_key(algebra.type, v), []).append(v)
    if algebra.type is LieType.A:
        return ClassDecomposition(others=[tuple(g) for g in groups.values()])
    class_int = groups.pop((0, 1), None)
    class_half = groups.pop((1, 2), None)
    return ClassDecomposition(
        class_int=tuple(class_int) if class_int else None,
        class_half=tuple(class_half) if class_half else None,
        others=[tuple(g) for g in groups.values()],
    )


def tilde_normalize(x: Sequence[Fraction]) -> Seq:
    """Fold a non-(half-)integral class onto a single residue.

    Entries congruent to ``x[0]`` mod Z are kept in order; the remaining
    entries (congruent to ``-x[0]``) are appended negated and reversed.
    """
    x = tuple(Fraction(v) for v in x)
    if not x:
        return x
    if all(_is_int(v) for v in x) or all(_is_half_int(v) for v in x):
        raise ClassError(f"{x} is an integral or half-integral class")
    head = x[0]
    y, z = [], []
    for v in x:
        if _is_int(v - head):
            y.append(v)
        elif _is_int(v + head):
            z.append(v)
        else:
            raise ClassError(f"{v} is not congruent to +-{head} mod Z")
    return tuple(y) + tuple(-v for v in reversed(z))


def gkdim_general(algebra: LieAlgebra, weight: Sequence[Fraction]) -> int:
    """GK dimension of ``L(lambda)`` for an arbitrary ``lambda + rho``."""
    dec = decompose_classes(algebra, weight)
    n = algebra.n
    rest = sum(f_a(tilde_normalize(x)) if algebra.type is not LieType.A else f_a(x) for x in dec.others)
    if algebra.type is LieType.A:
        return n * (n - 1) // 2 - rest

    def score(stat, cls: Optional[Seq]) -> int:
        return stat(minus_extension(cls)) if cls else 0

    if algebra.type is LieType.B:
        return n * n - score(g_odd, dec.class_int) - score(g_odd, dec.class_half) - rest
    if algebra.type is LieType.C:
        return n * n - score(g_odd, dec.class_int) - score(g_ev, dec.class_half) - rest
    return n * n - n - score(g_ev, dec.class_int) - score(g_ev, dec.class_half) - rest


def is_integral(algebra: LieAlgebra, weight: Sequence[Fraction]) -> bool:
    """Integrality of ``lambda + rho`` against the coroots of ``algebra``."""
    w = tuple(Fraction(v) for v in weight)
    if algebra.type is LieType.A:
        return all(_is_int(v - w[0]) for v in w)
    if all(_is_int(v) for v in w):
        return True
    # C has coroots e_i, so half-integral weights are not integral there
    return algebra.type is not LieType.C and all(_is_half_int(v) for v in w)


def gkdim_integral(algebra: LieAlgebra, weight: Sequence[Fraction]) -> int:
    """GK dimension restricted to integral weights (one class, no folding)."""
    w = _check_length(algebra, weight)
    if not is_integral(algebra, w):
        raise IntegralityError(f"{w} is not integral for {algebra}")
    n = algebra.n
    if algebra.type is LieType.A:
        return n * (n - 1) // 2 - f_a(w)
    if algebra.type in (LieType.B, LieType.C):
        return n * n - g_odd(minus_extension(w))
    return n * n - n - g_ev(minus_extension(w))


def gkdim_scalar(choice: ParabolicChoice, z: Fraction | int, standard_d_convention: bool = False) -> int:
    return gkdim_general(choice.algebra, scalar_weight(choice, z, standard_d_convention))


def max_gkdim(algebra: LieAlgebra) -> int:
    return algebra.num_positive_roots
