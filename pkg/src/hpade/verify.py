"""Independent checks of a Hermite-Pade result.

Residual order is recomputed from scratch.  Degrees are compared with the
closed-form staircase; optionally the full matrix ``A[n]`` is rebuilt to check
row-degree monotonicity and that ``det A[n]`` is a monomial of degree ``n+1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import MismatchedInputError
from .field import FloatField
from .poly import NEG_INF, Polynomial, PolyVector
from .series import AtLeast, SeriesTuple, meets, residual_order
from .viskovatov import HPResult, iter_row_states, multiindex_for_step

EQUAL, BELOW, ABOVE = "equal", "below", "above"


def pade_staircase(n: int) -> tuple[int, int]:
    """Degrees of the ``m = 1`` polynomial row ``(Q_1, Q_2)`` at level ``n``."""
    k, odd = divmod(n, 2)
    return (k, k + 1) if odd else (k, k)


def m2_degree_table(n: int) -> dict[str, tuple[int, int, int]]:
    """Degrees of rows ``Q = A_2`` and ``R = A_3`` for ``m = 2``, case by case."""
    k, r = divmod(n, 3)
    out = {}
    if r == 0:
        out["Q"] = (k, k, k)
        if k >= 1:
            out["R"] = (k - 1, k, k)
    elif r == 1:
        out["R"] = (k, k, k)
        out["Q"] = (k, k, k + 1)
    else:
        out["R"] = (k, k, k + 1)
        out["Q"] = (k, k + 1, k + 1)
    return out


def row_degree_pattern(n: int, m: int) -> list[tuple[int, ...]]:
    """Generic degrees of all rows ``A_1..A_{m+1}`` of ``A[n]``, ``n >= m-1``."""
    ell = (n - m + 1) % (m + 1)
    k = (n - m + 1 - ell) // (m + 1)
    rows: list = [None] * (m + 1)
    for s in range(1, m + 2 - ell):
        rows[ell + s - 1] = (k,) * s + (k + 1,) * (m + 1 - s)
    for j in range(ell):
        rows[ell - j - 1] = (k + 1,) * (m + 1 - j) + (k + 2,) * j
    return rows


def last_row_pattern(n: int, m: int) -> tuple[int, ...]:
    ell = (n - m + 1) % (m + 1)
    k = (n - m + 1 - ell) // (m + 1)
    return (k,) * (m + 1 - ell) + (k + 1,) * ell


def m2_table_consistent(n: int) -> bool:
    """The ``m = 2`` case table agrees with the general row pattern at level ``n``."""
    pattern = row_degree_pattern(n, 2)
    table = m2_degree_table(n)
    return all(pattern[{"Q": 1, "R": 2}[key]] == val for key, val in table.items())


def determinant(rows) -> Polynomial:
    """Leibniz expansion; fine for the small sizes used here."""
    size = len(rows)
    total = Polynomial()
    for perm in itertools.permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        term = Polynomial((1,))
        for i, p in enumerate(perm):
            term = term * rows[i][p]
            if term.is_zero():
                break
        if not term.is_zero():
            total = total + (term if inversions % 2 == 0 else -term)
    return total


def monomial_info(p: Polynomial, fld=None):
    """``(degree, coefficient)`` if ``p`` has exactly one nonzero coefficient."""
    is_zero = fld.is_zero if fld is not None else (lambda x: x == 0)
    nz = [(k, c) for k, c in enumerate(p.coeffs) if not is_zero(c)]
    return nz[0] if len(nz) == 1 else None


def _tri(observed, predicted) -> str:
    if observed == predicted:
        return EQUAL
    return BELOW if observed < predicted else ABOVE


def _deg_json(d):
    return None if d == NEG_INF else int(d)


def order_json(order):
    if isinstance(order, AtLeast):
        return {"at_least": int(order)}
    return int(order)


@dataclass
class VerificationReport:
    residual_order: int
    predicted_order: int
    degrees_observed: tuple
    degrees_predicted: tuple
    degree_match: tuple[str, ...]
    backend: str
    lemma1_ok: bool | None = None
    det_ok: bool | None = None
    det_sign: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def residual_ok(self) -> bool:
        return meets(self.residual_order, self.predicted_order)

    @property
    def ok(self) -> bool:
        return (self.residual_ok and ABOVE not in self.degree_match
                and self.lemma1_ok is not False and self.det_ok is not False)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "residual_order": order_json(self.residual_order),
            "predicted_order": self.predicted_order,
            "degrees_observed": [_deg_json(d) for d in self.degrees_observed],
            "degrees_predicted": list(self.degrees_predicted),
            "degree_match": list(self.degree_match),
            "lemma1_ok": self.lemma1_ok,
            "det_ok": self.det_ok,
            "det_sign": self.det_sign,
            "backend": self.backend,
            "notes": list(self.notes),
        }


def check_rows(full_rows, n: int, m: int) -> list[str]:
    """Problems with row-degree monotonicity and the generic row pattern."""
    problems = []
    degs = [r.degrees for r in full_rows]
    for j in range(1, m + 1):
        if any(a < b for a, b in zip(degs[j - 1], degs[j])):
            problems.append(f"row {j} degrees {degs[j - 1]} not >= row {j + 1} degrees {degs[j]}")
    for j, (obs, want) in enumerate(zip(degs, row_degree_pattern(n, m)), start=1):
        if obs != want:
            problems.append(f"row {j} degrees {obs} differ from pattern {want}")
    if tuple(degs[-1]) != last_row_pattern(n, m):
        problems.append(f"last row degrees {degs[-1]} differ from {last_row_pattern(n, m)}")
    if m == 2:
        for key, want in m2_degree_table(n).items():
            obs = degs[{"Q": 1, "R": 2}[key]]
            if obs != want:
                problems.append(f"m=2 {key}-row degrees {obs} differ from case table {want}")
    if m == 1 and degs[1] != pade_staircase(n):
        problems.append(f"m=1 Q-row degrees {degs[1]} differ from {pade_staircase(n)}")
    return problems


def verify(t: SeriesTuple, result: HPResult, lemma1: bool = False, det: bool = False
           ) -> VerificationReport:
    if len(result.polys) != t.m + 1:
        raise MismatchedInputError(
            f"result has {len(result.polys)} polynomials for a tuple with m={t.m}")
    if t.level != 0:
        raise MismatchedInputError("verify needs the level-0 tuple")
    m, n = t.m, result.level
    floating = isinstance(t.field, FloatField)
    order = residual_order(t, result.polys)
    predicted = multiindex_for_step(n, m).permuted(t.perm).degrees
    observed = result.polys.degrees
    match = tuple(_tri(o, p) for o, p in zip(observed, predicted))
    notes = []
    if not meets(order, n + 1):
        notes.append(f"RESIDUAL order {order} below predicted {n + 1}")
    for j, tri in enumerate(match):
        if tri != EQUAL:
            notes.append(f"deg Q_{j} = {_deg_json(observed[j])} {tri} prediction {predicted[j]}")
    if floating:
        notes.append("floating backend: degree checks are advisory")
    report = VerificationReport(order, n + 1, observed, predicted, match, t.field.tag, notes=notes)

    if lemma1 or det:
        state = None
        for state, _ in iter_row_states(t, n, strict=False):
            pass
        rows = state.full_rows()
        if floating:
            rows = tuple(r.trim(t.field.tol) for r in rows)
        if lemma1:
            problems = check_rows(rows, n, m)
            report.lemma1_ok = not problems
            notes.extend(problems)
        if det:
            info = monomial_info(determinant(rows), t.field)
            if info is None or info[0] != n + 1:
                report.det_ok = False
                notes.append(f"det A[{n}] is not a monomial of degree {n + 1}")
            else:
                c = info[1]
                report.det_ok = floating or abs(c) == 1
                report.det_sign = 1 if c > 0 else -1
                if not report.det_ok:
                    notes.append(f"det A[{n}] leading coefficient {c} is not +-1")
    return report
