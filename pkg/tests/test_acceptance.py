"""Acceptance criteria, one test per criterion; all checks are exact.

Run directly (``python tests/test_acceptance.py``) or under pytest; either
way a PASS/FAIL line per criterion is printed in the terminal summary.
"""

import random
import subprocess
import sys
from fractions import Fraction as F
from functools import lru_cache

import pytest

from gkverma.cli import main
from gkverma.closedform import (
    first_reducible_point,
    first_reducible_point_searched,
    gkdim_closed_form,
    is_reducible,
    reducibility_set,
)
from gkverma.gkdim import gkdim_general, gkdim_integral, gkdim_scalar
from gkverma.misprints import known_table_misprint
from gkverma.rootdata import RANK_FLOOR, LieAlgebra, LieType, ParabolicChoice, dim_nilradical, dim_nilradical_enumerated
from gkverma.tableaux import rs_shape

SWEEP_MAX_N = 12
SWEEP_FLOOR = {"A": 2, "B": 2, "C": 2, "D": 4}


def sweep_choices():
    for t in "ABCD":
        for n in range(SWEEP_FLOOR[t], SWEEP_MAX_N + 1):
            alg = LieAlgebra(t, n)
            for p in range(1, alg.rank + 1):
                yield ParabolicChoice(alg, p)


def sweep_points(n):
    halves = [F(k, 2) for k in range(-6 * n, 2 * n + 1)]
    thirds = [k + F(1, 3) for k in range(-3 * n, n + 1)]
    return halves + thirds


@lru_cache(maxsize=None)
def g(choice, z):
    return gkdim_scalar(choice, z)


def _report(witnesses, allowed=()):
    unexplained = [w for w in witnesses if w not in allowed]
    for w in witnesses:
        print(("allow-listed " if w in allowed else "MISMATCH ") + w)
    return unexplained


def test_criterion_01_rs_regression():
    assert rs_shape((2, 0, 3, 1)) == (2, 2)


PUBLISHED = [
    ("B", 3, 3, -1, 5),
    ("B", 3, 3, -3, 6),
    ("B", 3, 3, -2, 5),
    ("B", 4, 4, -1, 7),
    ("C", 4, 1, -1, 7),
    ("C", 4, 4, "-1/2", 4),
    ("D", 4, 1, -3, 6),
    ("D", 4, 1, -1, 5),
    ("A", 4, 2, -1, 3),
    ("D", 4, 4, 1, 0),
]
NILRADICALS = [("A", 5, 2, 6), ("B", 5, 2, 15), ("D", 6, 3, 21)]
VERDICTS = [("A", 3, 1, 0, True), ("B", 3, 3, -2, True), ("B", 3, 3, -3, False), ("C", 4, 1, "-1/2", False)]


def test_criterion_02_published_values():
    assert len(PUBLISHED) + len(NILRADICALS) + len(VERDICTS) + 2 >= 15
    for t, n, p, z, want in PUBLISHED:
        assert gkdim_scalar(ParabolicChoice.of(t, n, p), F(z)) == want, (t, n, p, z)
    for t, n, p, want in NILRADICALS:
        assert dim_nilradical(ParabolicChoice.of(t, n, p)) == want
    for t, n, p, z, want in VERDICTS:
        assert is_reducible(ParabolicChoice.of(t, n, p), F(z)) is want
    # reducibility loci of the two worked examples
    a31 = reducibility_set(ParabolicChoice.of("A", 3, 1)).components
    b33 = reducibility_set(ParabolicChoice.of("B", 3, 3)).components
    assert [(c.base, c.step) for c in a31] == [(0, 1)]
    assert [(c.base, c.step) for c in b33] == [(-2, 1)]


def test_criterion_03_reducibility_oracle():
    witnesses = []
    for ch in sweep_choices():
        rset = reducibility_set(ch)
        for z in sweep_points(ch.n):
            if (g(ch, z) < dim_nilradical(ch)) != (z in rset):
                witnesses.append(f"{ch.type.value} n={ch.n} p={ch.p} z={z}")
    # no allow-list is needed for any type, D included
    assert _report(witnesses) == []


def test_criterion_04_table_equivalence():
    witnesses, allowed, compared = [], set(), 0
    for ch in sweep_choices():
        if ch.type is LieType.C:
            continue
        for z in sweep_points(ch.n):
            tv = gkdim_closed_form(ch, z)
            if tv is None:
                continue
            compared += 1
            v = g(ch, z)
            if tv != v:
                w = f"{ch.type.value} n={ch.n} p={ch.p} z={z}: table={tv} algorithm={v}"
                witnesses.append(w)
                if known_table_misprint(ch, z, v):
                    allowed.add(w)
    assert compared > 20_000
    assert _report(witnesses, allowed) == []


def test_criterion_05_nilradical_dimension():
    for t in "ABCD":
        for n in range(RANK_FLOOR[LieType(t)], 21):
            alg = LieAlgebra(t, n)
            for p in range(1, alg.rank + 1):
                ch = ParabolicChoice(alg, p)
                assert dim_nilradical(ch) == dim_nilradical_enumerated(ch), (t, n, p)


def test_criterion_06_monotonicity():
    for ch in sweep_choices():
        for z in sweep_points(ch.n):
            assert g(ch, z + 1) <= g(ch, z), (ch, z)


def test_criterion_07_dominant_vanishing():
    for ch in sweep_choices():
        for z in range(4):
            assert g(ch, F(z)) == 0, (ch, z)


def _integral_weight(rng, t, n, half):
    w = [F(rng.randint(-2 * n, 2 * n)) for _ in range(n)]
    if not half:
        return w
    # a common non-integral shift keeps type A integral; B and D accept a
    # half-integral shift; type C has none (its coroots include e_i)
    shift = F(rng.randint(1, 5), 6) if t == "A" else F(1, 2)
    return [v + shift for v in w]


def test_criterion_08_integral_coherence():
    rng = random.Random(8)
    for t in "ABCD":
        for i in range(1000):
            n = rng.randint(RANK_FLOOR[LieType(t)], 8)
            alg = LieAlgebra(t, n)
            w = _integral_weight(rng, t, n, half=(i % 2 == 1 and t != "C"))
            assert gkdim_integral(alg, w) == gkdim_general(alg, w), (t, w)


def _pq_dominant(rng, n, p, shift):
    def block(size):
        out = [F(rng.randint(-n, n))]
        for _ in range(size - 1):
            out.append(out[-1] - rng.randint(1, 3))
        return out

    return block(p) + [v + shift for v in block(n - p)]


def _longest_strictly_decreasing(x):
    best = []
    for i, v in enumerate(x):
        best.append(1 + max((best[j] for j in range(i) if x[j] > v), default=0))
    return max(best)


def test_criterion_09_type_a_dominance():
    rng = random.Random(9)
    for _ in range(500):
        n = rng.randint(2, 8)
        p = rng.randint(1, n - 1)
        w = _pq_dominant(rng, n, p, F(0))
        # two columns; the first is the longest strictly decreasing subsequence
        m = n - _longest_strictly_decreasing(w)
        assert gkdim_general(LieAlgebra("A", n), w) == m * (n - m), w
    for _ in range(500):
        n = rng.randint(2, 8)
        p = rng.randint(1, n - 1)
        shift = F(rng.choice([1, 2, 3, 4]), rng.choice([5, 7]))
        w = _pq_dominant(rng, n, p, shift)
        assert gkdim_general(LieAlgebra("A", n), w) == p * (n - p), w


def _table(*extra):
    cmd = [sys.executable, "-m", "gkverma", "table", "--n", "2:8", *extra]
    return subprocess.run(cmd, capture_output=True, check=True).stdout


def test_criterion_10_selfcheck_and_determinism(capsys):
    assert main(["selfcheck"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "selfcheck: all suites pass"
    for fmt in ("csv", "json"):
        first = _table("--format", fmt)
        assert first
        assert _table("--format", fmt) == first
        assert _table("--format", fmt, "--jobs", "3") == first


def test_first_points_agree_on_sweep():
    # companion to criterion 3: closed-form first points equal the scan
    for ch in sweep_choices():
        assert first_reducible_point(ch) == first_reducible_point_searched(ch), ch


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
