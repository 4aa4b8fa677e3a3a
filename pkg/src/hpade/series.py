"""Truncated formal power series and the series phase of the recurrence.

A tuple of ``m+1`` series ``(f_0, ..., f_m)`` is advanced one level at a time:

    f_m'  = f_0
    f_j'  = (f_{j+1} + a_{j+1} f_j) / z,      j = 0, ..., m-1,

with ``a_j = -c_j / c_{j-1}`` built from the constant terms ``c_j``.  Only a
finite prefix of every series is known, so each step consumes exactly one
trustworthy coefficient.
"""

from __future__ import annotations

from concurrent.futures import Executor
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    DegenerateError,
    EmptyInputError,
    ExhaustedError,
    LengthMismatchError,
    MixedLengthsError,
    PermAfterStartError,
)
from .field import RATIONAL, Field, RationalField, get_field
from .poly import PolyVector


@dataclass(frozen=True)
class TruncatedSeries:
    """The first ``valid_order`` coefficients of a power series.

    Coefficients past the prefix are unknown, never implicitly zero.
    """

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def valid_order(self) -> int:
        return len(self.coeffs)

    @property
    def constant(self):
        return self.coeffs[0]

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class SeriesTuple:
    """The vector ``(f_0, ..., f_m)`` at some recurrence level.

    ``perm[i]`` is the index of the original input function stored in slot
    ``i``; it is the identity unless a start permutation was applied.
    """

    series: tuple[TruncatedSeries, ...]
    level: int = 0
    perm: tuple[int, ...] | None = None
    field: Field = field(default=RATIONAL, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "series", tuple(self.series))
        if self.perm is None:
            object.__setattr__(self, "perm", tuple(range(len(self.series))))
        lengths = {s.valid_order for s in self.series}
        if len(lengths) > 1:
            raise MixedLengthsError(f"series lengths differ: {sorted(lengths)}")
        if sorted(self.perm) != list(range(len(self.series))):
            raise ValueError(f"perm {self.perm} is not a bijection")

    @property
    def m(self) -> int:
        return len(self.series) - 1

    @property
    def valid_order(self) -> int:
        return self.series[0].valid_order

    def constants(self) -> tuple:
        return tuple(s.constant for s in self.series)

    def original(self, index: int) -> TruncatedSeries:
        """Series of the original input function ``index``."""
        return self.series[self.perm.index(index)]

    def originals(self) -> tuple[TruncatedSeries, ...]:
        return tuple(self.original(i) for i in range(self.m + 1))


def from_coefficients(rows: Sequence[Sequence], backend: str | Field = "rational",
                      tol: float = 1e-10) -> SeriesTuple:
    """Build a level-0 tuple from ``m+1`` coefficient lists (ascending powers).

    Entries may be numbers or coefficient strings (``"3"``, ``"-2/7"``).
    """
    fld = get_field(backend, tol) if isinstance(backend, str) else backend
    rows = [list(r) for r in rows]
    if len(rows) < 2:
        raise EmptyInputError("need at least two series (m >= 1)")
    if any(len(r) == 0 for r in rows):
        raise EmptyInputError("empty series")
    if len({len(r) for r in rows}) > 1:
        raise MixedLengthsError(f"series lengths differ: {[len(r) for r in rows]}")
    series = []
    for r in rows:
        series.append(TruncatedSeries(tuple(
            fld.parse(c) if isinstance(c, str) else fld.coerce(c) for c in r)))
    return SeriesTuple(tuple(series), 0, None, fld)


def apply_start_permutation(t: SeriesTuple, s: int) -> SeriesTuple:
    """Reorder slots so the engine processes ``(f_{s-1}, ..., f_0, f_m, ..., f_s)``.

    In slot terms (slot ``m`` first in that listing) slot ``i`` receives the
    original function ``(i + s) mod (m+1)``.
    """
    if t.level != 0:
        raise PermAfterStartError("start permutation must be applied at level 0")
    size = t.m + 1
    if not 0 <= s < size:
        raise ValueError(f"start index {s} outside 0..{t.m}")
    originals = t.originals()
    perm = tuple((i + s) % size for i in range(size))
    return SeriesTuple(tuple(originals[p] for p in perm), 0, perm, t.field)


def a_coefficients(t: SeriesTuple, strict: bool = True) -> tuple:
    """``(a_1, ..., a_m)`` with ``a_j = -c_j / c_{j-1}`` at the current level.

    A zero divisor always raises :class:`DegenerateError`.  With ``strict``
    (the default) a zero numerator does too, since ``a_j = 0`` breaks the
    degree pattern the recurrence relies on.
    """
    if t.valid_order < 1:
        raise ExhaustedError("no coefficients left", required=1)
    fld = t.field
    c = t.constants()
    out = []
    for j in range(1, t.m + 1):
        if fld.is_zero(c[j - 1]):
            raise DegenerateError(t.level, j, j - 1)
        if strict and fld.is_zero(c[j]):
            raise DegenerateError(t.level, j, j)
        out.append(-c[j] / c[j - 1])
    return tuple(out)


def _next_slot(t: SeriesTuple, a: tuple, j: int) -> TruncatedSeries:
    src = t.series
    if j == t.m:
        return TruncatedSeries(src[0].coeffs[:-1])
    hi, lo, aj = src[j + 1].coeffs, src[j].coeffs, a[j]
    if isinstance(t.field, RationalField):
        # the constant term must cancel exactly before dividing by z
        assert hi[0] + aj * lo[0] == 0
    return TruncatedSeries(tuple(hi[k] + aj * lo[k] for k in range(1, len(hi))))


def step(t: SeriesTuple, executor: Executor | None = None, strict: bool = True):
    """Advance one level.  Returns ``(next_tuple, a)`` with ``a`` the values used.

    Each output slot depends only on ``t``; pass an ``executor`` to evaluate
    the ``m+1`` slots concurrently.
    """
    if t.valid_order < 2:
        raise ExhaustedError(
            f"valid order {t.valid_order} at level {t.level}: cannot divide by z",
            required=t.level + 2,
        )
    a = a_coefficients(t, strict)
    slots = range(t.m + 1)
    if executor is None:
        new = [_next_slot(t, a, j) for j in slots]
    else:
        new = list(executor.map(lambda j: _next_slot(t, a, j), slots))
    return SeriesTuple(tuple(new), t.level + 1, t.perm, t.field), a


class AtLeast(int):
    """Lower bound on a residual order: every computable coefficient vanished."""

    def __repr__(self) -> str:
        return f"AtLeast({int(self)})"

    __str__ = __repr__


def meets(order, target: int) -> bool:
    """True when a residual order (exact or :class:`AtLeast`) is ``>= target``."""
    return int(order) >= target


def residual_coefficients(original: SeriesTuple, polys: PolyVector) -> list:
    """Coefficients of ``sum_j polys[j] * f_j`` (``j`` = original index).

    Coefficient ``i`` only needs input coefficients up to ``i``, so all
    ``valid_order`` coefficients of the product are exact.
    """
    if len(polys) != original.m + 1:
        raise LengthMismatchError(f"expected {original.m + 1} polynomials, got {len(polys)}")
    if original.level != 0:
        raise ValueError("residual must be computed against the level-0 tuple")
    L = original.valid_order
    out = [0] * L
    for j, p in enumerate(polys):
        f = original.original(j).coeffs
        for d, q in enumerate(p.coeffs):
            if q == 0 or d >= L:
                continue
            for i in range(d, L):
                out[i] += q * f[i - d]
    return out


def residual_order(original: SeriesTuple, polys: PolyVector):
    """Index of the first nonzero residual coefficient, or ``AtLeast(L)``."""
    fld = original.field
    res = residual_coefficients(original, polys)
    for i, r in enumerate(res):
        if not fld.is_zero(r):
            return i
    return AtLeast(len(res))
