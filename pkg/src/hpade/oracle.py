"""Brute-force Hermite-Pade polynomials from the defining linear system.

For a multiindex ``k`` the unknowns are the ``k_j + 1`` coefficients of each
``Q_j``; the equations say the coefficients of ``z**0 .. z**(|k|+m-1)`` of
``sum_j Q_j f_j`` vanish.  One more unknown than equations, so the kernel is
never trivial.  Deliberately naive: no structure is exploited.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import InsufficientOrderError, LengthMismatchError
from .field import FloatField
from .poly import Polynomial, PolyVector
from .series import SeriesTuple


@dataclass(frozen=True)
class TangencySystem:
    matrix: tuple[tuple, ...]
    multiindex: tuple[int, ...]

    @property
    def offsets(self) -> list[int]:
        out, acc = [], 0
        for kj in self.multiindex:
            out.append(acc)
            acc += kj + 1
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), (len(self.matrix[0]) if self.matrix else 0)


def tangency_system(t: SeriesTuple, k: Sequence[int]) -> TangencySystem:
    """Rows are tangency conditions, columns are polynomial coefficients.

    ``k`` is indexed by original function index, as is the column layout.
    """
    k = tuple(int(x) for x in k)
    m = t.m
    if len(k) != m + 1:
        raise LengthMismatchError(f"multiindex has {len(k)} entries, expected {m + 1}")
    if min(k) < 0:
        raise ValueError("multiindex entries must be nonnegative")
    eqs = sum(k) + m
    if t.valid_order < eqs:
        raise InsufficientOrderError(
            f"multiindex {k} needs {eqs} coefficients per series, have {t.valid_order}",
            required=eqs,
        )
    f = [t.original(j).coeffs for j in range(m + 1)]
    rows = []
    for i in range(eqs):
        row = []
        for j, kj in enumerate(k):
            for d in range(kj + 1):
                row.append(f[j][i - d] if i >= d else 0)
        rows.append(tuple(row))
    return TangencySystem(tuple(rows), k)


def _integer_rows(matrix) -> list[list[int]]:
    out = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        den = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Returns the echelon rows (only the first ``rank`` are meaningful) and the
    pivot columns.  Every division is exact.
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            lead = ai[c]
            for j in range(c + 1, ncols):
                ai[j] = (piv * ai[j] - lead * a[r][j]) // prev
            ai[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def _kernel_exact(matrix) -> tuple[list[Fraction], int]:
    ncols = len(matrix[0])
    ech, pivots = bareiss_echelon(_integer_rows(matrix))
    free = [c for c in range(ncols) if c not in pivots]
    x = [Fraction(0)] * ncols
    x[free[-1]] = Fraction(1)
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = ech[r]
        s = sum(row[j] * x[j] for j in range(c + 1, ncols) if x[j])
        x[c] = Fraction(-s, row[c]) if isinstance(s, int) else -s / row[c]
    return x, len(free)


def _kernel_float(matrix, tol: float) -> tuple[list[float], int]:
    a = np.array(matrix, dtype=float)
    nrows, ncols = a.shape
    thresh = tol * max(1.0, float(np.abs(a).max(initial=0.0)))
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = r + int(np.argmax(np.abs(a[r:, c])))
        if abs(a[p, c]) <= thresh:
            a[r:, c] = 0.0
            continue
        a[[r, p]] = a[[p, r]]
        a[r] /= a[r, c]
        others = [i for i in range(nrows) if i != r]
        a[others] -= np.outer(a[others, c], a[r])
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    x = np.zeros(ncols)
    x[free[-1]] = 1.0
    for i, c in enumerate(pivots):
        x[c] = -a[i, free[-1]]
    return x.tolist(), len(free)


def hp_nullspace(t: SeriesTuple, k) -> tuple[PolyVector, int]:
    """One kernel vector of the tangency system, reshaped into ``m+1`` polynomials.

    The last free coefficient is set to 1.  Also returns the kernel dimension.
    """
    k = tuple(getattr(k, "degrees", k))
    system = tangency_system(t, k)
    if isinstance(t.field, FloatField):
        x, dim = _kernel_float(system.matrix, t.field.tol)
    else:
        x, dim = _kernel_exact(system.matrix)
    assert dim >= 1
    polys = []
    for off, kj in zip(system.offsets, k):
        polys.append(Polynomial(x[off:off + kj + 1]))
    return PolyVector(tuple(polys)), dim


def proportional(p: PolyVector, q: PolyVector, rtol: float | None = None) -> bool:
    """True iff ``p = lam * q`` for some nonzero scalar ``lam``.

    Exact comparison by default; pass ``rtol`` for floating coefficients.
    """
    if len(p) != len(q):
        raise LengthMismatchError("arity mismatch")
    flat_p = [p[j][d] for j in range(len(p)) for d in range(max(len(p[j]), len(q[j])))]
    flat_q = [q[j][d] for j in range(len(q)) for d in range(max(len(p[j]), len(q[j])))]
    if rtol is None:
        ref = next((i for i, v in enumerate(flat_q) if v != 0), None)
        if ref is None or flat_p[ref] == 0:
            return False
        a, b = flat_p[ref], flat_q[ref]
        lam = Fraction(a) / Fraction(b) if _exact(a) and _exact(b) else a / b
        return all(a == lam * b for a, b in zip(flat_p, flat_q))
    vp, vq = np.array(flat_p, dtype=float), np.array(flat_q, dtype=float)
    if not vq.any() or not vp.any():
        return False
    ref = int(np.argmax(np.abs(vq)))
    lam = vp[ref] / vq[ref]
    if lam == 0:
        return False
    scale = max(np.abs(vp).max(), abs(lam) * np.abs(vq).max())
    return bool(np.all(np.abs(vp - lam * vq) <= rtol * scale))


def _exact(x) -> bool:
    return isinstance(x, (int, Fraction))
