"""Coefficient fields.

Coefficients are plain Python numbers: :class:`fractions.Fraction` for the
exact backend, :class:`float` for the floating one.  A field object only knows
how to coerce values, how to decide whether a value is zero, and how to parse
and format coefficient strings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


@dataclass(frozen=True)
class RationalField:
    """Exact arbitrary-precision rationals; zero test is exact equality."""

    name = "rational"
    tol = 0

    def coerce(self, x) -> Fraction:
        if isinstance(x, float):
            raise InputError(f"floating value {x!r} not allowed in the rational backend")
        return Fraction(x)

    def parse(self, text) -> Fraction:
        if isinstance(text, bool):
            raise InputError(f"malformed coefficient {text!r}")
        if isinstance(text, int):
            return Fraction(text)
        if not isinstance(text, str) or not _RATIONAL_RE.match(text):
            raise InputError(
                f"malformed coefficient {text!r}: expected an integer or 'p/q'"
            )
        try:
            return Fraction(text.replace(" ", ""))
        except ZeroDivisionError:
            raise InputError(f"zero denominator in {text!r}") from None

    def is_zero(self, x) -> bool:
        return x == 0

    def format(self, x) -> str:
        return str(x)

    @property
    def tag(self) -> str:
        return self.name


@dataclass(frozen=True)
class FloatField:
    """Binary floating point with an absolute zero tolerance."""

    tol: float = 1e-10
    name = "float"

    def coerce(self, x) -> float:
        return float(x)

    def parse(self, text) -> float:
        if isinstance(text, bool):
            raise InputError(f"malformed coefficient {text!r}")
        if isinstance(text, (int, float)):
            return float(text)
        if not isinstance(text, str):
            raise InputError(f"malformed coefficient {text!r}")
        try:
            if "/" in text:
                return float(Fraction(text.replace(" ", "")))
            return float(text)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"malformed coefficient {text!r}") from None

    def is_zero(self, x) -> bool:
        return abs(x) <= self.tol

    def format(self, x) -> str:
        return repr(float(x))

    @property
    def tag(self) -> str:
        return f"float(tol={self.tol!r})"


RATIONAL = RationalField()

Field = RationalField | FloatField


def get_field(backend: str = "rational", tol: float = 1e-10) -> Field:
    if backend == "rational":
        return RATIONAL
    if backend == "float":
        return FloatField(tol)
    raise InputError(f"unknown backend {backend!r}")
