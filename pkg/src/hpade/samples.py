"""Input generators: random general-position tuples and a few classic series."""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from .errors import DegenerateError
from .oracle import hp_nullspace
from .series import SeriesTuple, a_coefficients, from_coefficients, step
from .viskovatov import multiindex_for_step


def exp_prefix(degree: int = 11) -> list[Fraction]:
    return [Fraction(1, factorial(k)) for k in range(degree + 1)]


def geometric_prefix(length: int) -> list[Fraction]:
    return [Fraction(1)] * length


def random_rows(m: int, length: int, rng: random.Random, max_num: int = 9,
                max_den: int = 3) -> list[list[Fraction]]:
    """``m+1`` rows of small random rationals with nonzero constant terms."""
    rows = []
    for _ in range(m + 1):
        c0 = 0
        while c0 == 0:
            c0 = rng.randint(-max_num, max_num)
        row = [Fraction(c0)]
        row += [Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
                for _ in range(length - 1)]
        rows.append(row)
    return rows


def in_general_position(t: SeriesTuple, levels: int, degrees: bool = True) -> bool:
    """Every constant term stays nonzero for levels ``0..levels``.

    With ``degrees`` the linear-system solution for each multiindex along the
    way must also attain every degree bound exactly.  That check goes through
    the oracle only, never through the row recurrence.
    """
    cur = t
    try:
        for n in range(levels + 1):
            a_coefficients(cur, strict=True)
            if n < levels:
                cur, _ = step(cur)
    except DegenerateError:
        return False
    if degrees:
        for n in range(max(t.m - 1, 0), levels + 1):
            k = multiindex_for_step(n, t.m).permuted(t.perm)
            polys, _ = hp_nullspace(t, k)
            if polys.degrees != k.degrees:
                return False
    return True


def random_general_position(m: int, length: int, rng: random.Random,
                            levels: int | None = None, degrees: bool = True
                            ) -> tuple[SeriesTuple, int]:
    """Draw until a tuple passes :func:`in_general_position`.

    Returns the tuple and the number of rejected draws.
    """
    levels = length - 2 if levels is None else levels
    rejected = 0
    while True:
        t = from_coefficients(random_rows(m, length, rng))
        if in_general_position(t, levels, degrees):
            return t, rejected
        rejected += 1


def random_suite(count: int, m: int, length: int, seed: int, degrees: bool = True
                 ) -> list[SeriesTuple]:
    rng = random.Random(f"{seed}:{m}")
    return [random_general_position(m, length, rng, degrees=degrees)[0] for _ in range(count)]
