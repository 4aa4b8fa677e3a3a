"""Row recurrence producing Hermite-Pade polynomials of type I.

The matrix ``A[n] = M[n] ... M[0]`` maps the stacked series ``(f_m, ..., f_0)``
to ``z**(n+1)`` times the level-``n+1`` series.  Only rows ``2..m+1`` at level
``n`` and row ``m+1`` at level ``n-1`` are needed to advance:

    A_2[n+1] = a_m[n+1] A_2[n] + z A_{m+1}[n-1]
    A_j[n+1] = a_{m+2-j}[n+1] A_j[n] + A_{j-1}[n],    j = 3, ..., m+1

Row ``m+1`` read backwards gives the polynomials ``Q_0, ..., Q_m`` with
``sum_j Q_j f_j = O(z**(n+1))``.
"""

from __future__ import annotations

from concurrent.futures import Executor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ArityError, ExhaustedError, ResidualShortfallError, TooEarlyError
from .field import FloatField
from .poly import Polynomial, PolyVector
from .series import (
    SeriesTuple,
    TruncatedSeries,
    a_coefficients,
    from_coefficients,
    meets,
    residual_order,
    step,
)


@dataclass(frozen=True)
class MultiIndex:
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __iter__(self):
        return iter(self.degrees)

    def permuted(self, perm: Sequence[int]) -> MultiIndex:
        """Re-index from slot order to original-function order."""
        out = [0] * len(self.degrees)
        for slot, orig in enumerate(perm):
            out[orig] = self.degrees[slot]
        return MultiIndex(tuple(out))


def multiindex_for_step(n: int, m: int) -> MultiIndex:
    """Multiindex reached at level ``n``: ``l`` entries ``k+1`` then ``m+1-l`` entries ``k``,
    where ``n - m + 1 = (m+1) k + l``.
    """
    if n < m - 1:
        raise TooEarlyError(f"level {n} < m-1 = {m - 1} has no multiindex")
    ell = (n - m + 1) % (m + 1)
    k = (n - m + 1 - ell) // (m + 1)
    return MultiIndex((k + 1,) * ell + (k,) * (m + 1 - ell))


@dataclass(frozen=True)
class RowState:
    """Rows ``A_2..A_{m+1}`` at ``level`` plus row ``A_{m+1}`` one level earlier."""

    level: int
    rows: tuple[PolyVector, ...]
    last_row_prev: PolyVector

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def last_row(self) -> PolyVector:
        return self.rows[-1]

    def full_rows(self) -> tuple[PolyVector, ...]:
        """All ``m+1`` rows of ``A[level]``; the first is ``z * A_{m+1}[level-1]``."""
        return (self.last_row_prev.shift(),) + self.rows


def _check_arity(values, m: int, what: str) -> None:
    if len(values) != m:
        raise ArityError(f"{what}: expected {m} a-coefficients, got {len(values)}")


def level_zero(a0: Sequence) -> RowState:
    """State for ``A[0] = M[0]``, with the identity standing in for ``A[-1]``."""
    m = len(a0)
    if m < 1:
        raise ArityError("need m >= 1")
    size = m + 1
    rows = []
    for j in range(2, m + 2):
        cols = [Polynomial()] * size
        cols[j - 2] = Polynomial((1,))
        cols[j - 1] = Polynomial((a0[m + 1 - j],))
        rows.append(PolyVector(tuple(cols)))
    return RowState(0, tuple(rows), PolyVector.unit(size, m))


def init_rows(a0: Sequence, a1: Sequence) -> RowState:
    """Rows ``A_2[1], ..., A_{m+1}[1]`` and ``A_{m+1}[0]`` in closed form."""
    m = len(a0)
    _check_arity(a1, m, "a[1]")
    if m < 1:
        raise ArityError("need m >= 1")
    size = m + 1

    def a(vals, k):  # a_k, 1-based
        return vals[k - 1]

    last0 = [[0] for _ in range(size)]
    last0[m - 1] = [1]
    last0[m] = [a(a0, 1)]

    row2 = [[0, 0] for _ in range(size)]
    row2[0][0] = a(a1, m)
    row2[1][0] += a(a1, m) * a(a0, m)
    row2[m][1] += 1
    rows = [PolyVector.from_lists(row2)]
    for j in range(3, m + 2):
        r = [[0] for _ in range(size)]
        r[j - 3] = [1]
        r[j - 2] = [a(a1, m + 2 - j) + a(a0, m + 3 - j)]
        r[j - 1] = [a(a1, m + 2 - j) * a(a0, m + 2 - j)]
        rows.append(PolyVector.from_lists(r))
    return RowState(1, tuple(rows), PolyVector.from_lists(last0))


def _advance(state: RowState, a_next: Sequence) -> RowState:
    m = state.m
    rows = state.rows
    new = [rows[0].scale(a_next[m - 1]) + state.last_row_prev.shift()]
    for i in range(1, m):
        j = i + 2
        new.append(rows[i].scale(a_next[m + 1 - j]) + rows[i - 1])
    return RowState(state.level + 1, tuple(new), rows[-1])


def step_rows(state: RowState, a_next: Sequence) -> RowState:
    """Apply the three-term row recurrence once, ``level n -> n+1`` (``n >= 1``)."""
    if state.level < 1:
        raise ValueError("step_rows starts from level 1; use init_rows first")
    _check_arity(a_next, state.m, "a[n+1]")
    return _advance(state, a_next)


def iter_row_states(t: SeriesTuple, n_max: int, *, strict: bool = True,
                    executor: Executor | None = None) -> Iterator[tuple[RowState, tuple]]:
    """Yield ``(state, a)`` for levels ``0..n_max``, running the series phase lazily."""
    cur = t
    state = None
    a0 = None
    for n in range(n_max + 1):
        a = a_coefficients(cur, strict)
        if n == 0:
            a0 = a
            state = level_zero(a)
        elif n == 1:
            state = init_rows(a0, a)
        else:
            state = step_rows(state, a)
        yield state, a
        if n < n_max:
            cur, _ = step(cur, executor, strict)


@dataclass(frozen=True)
class HPResult:
    """Hermite-Pade polynomials for one level.

    ``polys[j]`` multiplies the original input ``f_j``; ``multiindex`` is
    indexed the same way.
    """

    polys: PolyVector
    multiindex: MultiIndex
    predicted_order: int
    verified_order: int
    degrees_match_theory: bool
    level: int
    perm: tuple[int, ...]

    @property
    def degrees(self) -> tuple:
        return self.polys.degrees


def _package(t: SeriesTuple, state: RowState, check: bool) -> HPResult:
    n, m = state.level, t.m
    slot_polys = state.last_row.reversed()
    ordered = [None] * (m + 1)
    for slot, orig in enumerate(t.perm):
        ordered[orig] = slot_polys[slot]
    polys = PolyVector(tuple(ordered))
    if isinstance(t.field, FloatField):
        polys = polys.trim(t.field.tol)
    k = multiindex_for_step(n, m).permuted(t.perm)
    order = residual_order(t, polys)
    if check and not meets(order, n + 1):
        raise ResidualShortfallError(n, n + 1, order)
    match = polys.degrees == k.degrees
    return HPResult(polys, k, n + 1, order, match, n, t.perm)


def _check_request(t: SeriesTuple, n: int) -> None:
    if t.level != 0:
        raise ValueError("hermite_pade expects a level-0 tuple")
    if n < t.m - 1:
        raise TooEarlyError(f"steps {n} < m-1 = {t.m - 1}")
    if t.valid_order < n + 2:
        raise ExhaustedError(
            f"level {n} needs at least {n + 2} coefficients per series, have {t.valid_order}",
            required=n + 2,
        )


def iter_hermite_pade(t: SeriesTuple, n_max: int, *, strict: bool = True, check: bool = True,
                      executor: Executor | None = None) -> Iterator[HPResult]:
    """Results for every level ``n = m-1, ..., n_max`` from a single pass."""
    _check_request(t, n_max)
    lo = max(t.m - 1, 0)
    for state, _ in iter_row_states(t, n_max, strict=strict, executor=executor):
        if state.level >= lo:
            yield _package(t, state, check)


def hermite_pade(t: SeriesTuple, n: int, *, strict: bool = True, check: bool = True,
                 executor: Executor | None = None) -> HPResult:
    """Hermite-Pade polynomials of type I for the multiindex reached at level ``n``.

    Raises :class:`~hpade.errors.DegenerateError` when the tuple leaves
    general position, :class:`~hpade.errors.ExhaustedError` when fewer than
    ``n+2`` coefficients are available and
    :class:`~hpade.errors.ResidualShortfallError` when the residual order is
    below ``n+1`` (disable with ``check=False``).
    """
    _check_request(t, n)
    state = None
    for state, _ in iter_row_states(t, n, strict=strict, executor=executor):
        pass
    return _package(t, state, check)


def _as_coeffs(f) -> list:
    return list(f.coeffs) if isinstance(f, TruncatedSeries) else list(f)


def pade_approximant(f, n: int, backend="rational", tol: float = 1e-10):
    """Staircase Pade approximant ``P/Q`` of ``f`` with ``Q f - P = O(z**(n+1))``.

    Degrees are ``[k/k]`` for ``n = 2k`` and ``[k+1/k]`` for ``n = 2k+1``.
    """
    coeffs = _as_coeffs(f)
    one = [1] + [0] * (len(coeffs) - 1)
    t = from_coefficients([one, coeffs], backend, tol)
    res = hermite_pade(t, n)
    return -res.polys[0], res.polys[1]


def iter_partial_quotients(t: SeriesTuple, n_max: int) -> Iterator:
    """Yield ``v_n = c_1[n] / c_0[n]`` for ``n = 0..n_max`` of an ``m = 1`` tuple.

    Raises :class:`~hpade.errors.DegenerateError` once ``c_0`` vanishes, which
    for exact input means the continued fraction has terminated.
    """
    if t.m != 1:
        raise ArityError("continued fractions need exactly two series")
    cur = t
    for n in range(n_max + 1):
        (a,) = a_coefficients(cur, strict=False)
        yield -a
        if n < n_max:
            cur, _ = step(cur, strict=False)


def cfraction_coefficients(f0, f1, N: int, backend="rational", tol: float = 1e-10) -> list:
    """Partial quotients ``v_0..v_N`` of ``f1/f0 = v_0 + z/(v_1 + z/(v_2 + ...))``."""
    t = from_coefficients([_as_coeffs(f0), _as_coeffs(f1)], backend, tol)
    if t.valid_order < N + 2:
        raise ExhaustedError(
            f"{N + 1} partial quotients need {N + 2} coefficients, have {t.valid_order}",
            required=N + 2,
        )
    return list(iter_partial_quotients(t, N))
