"""Hermite-Pade polynomials of type I via the Viskovatov recurrence."""

from .errors import (
    DegenerateError,
    ExhaustedError,
    HPadeError,
    InputError,
    InsufficientOrderError,
    ResidualShortfallError,
    TooEarlyError,
)
from .field import FloatField, RationalField, get_field
from .oracle import hp_nullspace, proportional, tangency_system
from .poly import NEG_INF, Polynomial, PolyVector
from .series import (
    AtLeast,
    SeriesTuple,
    TruncatedSeries,
    a_coefficients,
    apply_start_permutation,
    from_coefficients,
    residual_order,
    step,
)
from .verify import VerificationReport, verify
from .viskovatov import (
    HPResult,
    MultiIndex,
    RowState,
    cfraction_coefficients,
    hermite_pade,
    init_rows,
    iter_hermite_pade,
    multiindex_for_step,
    pade_approximant,
    step_rows,
)

__version__ = "0.1.0"
