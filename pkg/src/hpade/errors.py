"""Exception hierarchy.

Every error carries a short upper-case ``code`` that the CLI prints and maps
to an exit status.
"""

from __future__ import annotations


class HPadeError(Exception):
    code = "ERROR"
    exit_code = 1


class InputError(HPadeError, ValueError):
    """Malformed or contract-violating input."""

    code = "MALFORMED"
    exit_code = 4


class EmptyInputError(InputError):
    code = "EMPTY_INPUT"


class MixedLengthsError(InputError):
    code = "MIXED_LENGTHS"


class PermAfterStartError(InputError):
    code = "PERM_AFTER_START"


class LengthMismatchError(InputError):
    code = "LENGTH_MISMATCH"


class ArityError(InputError):
    code = "ARITY"


class TooEarlyError(InputError):
    code = "TOO_EARLY"


class MismatchedInputError(InputError):
    code = "MISMATCHED_INPUT"


class DegenerateError(HPadeError, ArithmeticError):
    """A constant term needed by the recurrence vanished (loss of general position).

    ``level`` is the recurrence level, ``index`` the a-coefficient that could
    not be formed and ``slot`` the series slot whose constant term is zero.
    """

    code = "DEGENERATE"
    exit_code = 2

    def __init__(self, level: int, index: int, slot: int):
        self.level = level
        self.index = index
        self.slot = slot
        super().__init__(
            f"constant term of slot {slot} vanishes at level {level} "
            f"(a_{index} undefined or zero)"
        )


class TruncationError(HPadeError):
    """Not enough series coefficients for the requested work."""

    code = "EXHAUSTED"
    exit_code = 3

    def __init__(self, message: str, required: int | None = None):
        self.required = required
        super().__init__(message)


class ExhaustedError(TruncationError):
    code = "EXHAUSTED"


class InsufficientOrderError(TruncationError):
    code = "INSUFFICIENT_ORDER"


class ResidualShortfallError(HPadeError):
    code = "RESIDUAL_SHORTFALL"
    exit_code = 5

    def __init__(self, level: int, predicted: int, verified):
        self.level = level
        self.predicted = predicted
        self.verified = verified
        super().__init__(
            f"residual order {verified} at level {level}, expected {predicted}"
        )
