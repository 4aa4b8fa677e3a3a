"""Dense univariate polynomials and fixed-length vectors of them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

# Degree of the zero polynomial; compares below every integer.
NEG_INF = -math.inf


def _strip(coeffs: Iterable) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Polynomial:
    """Polynomial in ``z`` stored low-order first, exact trailing zeros removed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, c, power: int) -> Polynomial:
        return cls([0] * power + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def scale(self, c) -> Polynomial:
        if c == 0:
            return Polynomial()
        return Polynomial(c * x for x in self.coeffs)

    def shift(self, k: int = 1) -> Polynomial:
        """Multiply by ``z**k``."""
        if not self.coeffs:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = scale

    def trim(self, tol: float) -> Polynomial:
        """Drop leading coefficients with magnitude at most ``tol``."""
        c = list(self.coeffs)
        while c and abs(c[-1]) <= tol:
            c.pop()
        return Polynomial(c)

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def pretty(self, fmt=str) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(fmt(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({fmt(c)})*{mono}")
        return " + ".join(terms)


@dataclass(frozen=True)
class PolyVector:
    """A row of ``m+1`` polynomials."""

    entries: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence]) -> PolyVector:
        return cls(tuple(Polynomial(r) for r in rows))

    @classmethod
    def unit(cls, size: int, index: int) -> PolyVector:
        return cls(tuple(Polynomial((1,)) if i == index else Polynomial() for i in range(size)))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Polynomial:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: PolyVector) -> PolyVector:
        if len(other) != len(self):
            raise ValueError("PolyVector arity mismatch")
        return PolyVector(tuple(p + q for p, q in zip(self.entries, other.entries)))

    def scale(self, c) -> PolyVector:
        return PolyVector(tuple(p.scale(c) for p in self.entries))

    def shift(self, k: int = 1) -> PolyVector:
        return PolyVector(tuple(p.shift(k) for p in self.entries))

    def reversed(self) -> PolyVector:
        """The reversal operator: ``(c_1, ..., c_{m+1}) -> (c_{m+1}, ..., c_1)``."""
        return PolyVector(self.entries[::-1])

    def trim(self, tol: float) -> PolyVector:
        return PolyVector(tuple(p.trim(tol) for p in self.entries))

    @property
    def degrees(self) -> tuple:
        return tuple(p.degree for p in self.entries)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.entries)

    def to_lists(self) -> list[list]:
        return [list(p.coeffs) for p in self.entries]
