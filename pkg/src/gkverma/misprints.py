"""Allow-list of known defects in the tabulated type B closed form.

Only one family of the type B table is affected: the shifted integral
branch ``z = p - n - k`` whose printed value is
``2np - 2p^2 + 2kp - 2k^2 + n`` (see ``docs/table_misprints.md``).

* ``overcount-by-p``: when ``4p - 2k - 2n >= 0`` the tableau shape that
  justifies the branch, ``(3^{2k}, 2^{2n-2p-2k}, 1^{4p-2k-2n})``, gives a GK
  dimension exactly ``p`` smaller than the printed value.
* ``range-exceeds-shape``: when ``4p - 2k - 2n < 0`` that shape would need a
  negative multiplicity, so the printed range of ``k`` is too wide and the
  branch does not apply.

Every allow-listed point is still reported by ``selfcheck``; it just does
not count as a failure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .closedform import B_SHIFTED_PLUS_N, table_b_branch
from .rootdata import LieType, ParabolicChoice

OVERCOUNT = "overcount-by-p"
RANGE = "range-exceeds-shape"


def corrected_shifted_value(n: int, p: int, k: int) -> int:
    """GK dimension read off the shape ``(3^{2k}, 2^{2n-2p-2k}, 1^{4p-2k-2n})``."""
    return 2 * n * p - 2 * p * p + 2 * k * p - 2 * k * k + n - p


def known_table_misprint(choice: ParabolicChoice, z: Fraction | int, algorithmic: int) -> Optional[str]:
    """Reason code if a table/algorithm disagreement at ``z`` is a documented misprint."""
    z = Fraction(z)
    n, p = choice.n, choice.p
    if choice.type is not LieType.B or not 2 <= p <= n - 1 or z.denominator != 1:
        return None
    hit = table_b_branch(n, p, z)
    if hit is None or hit[1] != B_SHIFTED_PLUS_N:
        return None
    value = hit[0]
    if value == algorithmic:
        return None
    k = p - n - int(z)
    if 4 * p - 2 * k - 2 * n >= 0:
        return OVERCOUNT if algorithmic == corrected_shifted_value(n, p, k) else None
    return RANGE
