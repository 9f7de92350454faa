"""Shared exception hierarchy."""

from .errors import (
    PlateauError,
    NonPrime,
    ReduciblePoly,
    NoPrimitiveElement,
    FieldTooLarge,
    DivisionByZero,
    MixedRootOrder,
    NotAUnit,
    EvenPrime,
    TooLarge,
    InconsistentInput,
    InvalidParameters,
    DegenerateRows,
    NotSelfOrthogonalInput,
    UsageError,
    MalformedInput,
    EXIT_OK,
    EXIT_FAIL,
    EXIT_USAGE,
    EXIT_PRECONDITION,
    EXIT_CAP,
)

__all__ = [
    "PlateauError",
    "NonPrime",
    "ReduciblePoly",
    "NoPrimitiveElement",
    "FieldTooLarge",
    "DivisionByZero",
    "MixedRootOrder",
    "NotAUnit",
    "EvenPrime",
    "TooLarge",
    "InconsistentInput",
    "InvalidParameters",
    "DegenerateRows",
    "NotSelfOrthogonalInput",
    "UsageError",
    "MalformedInput",
    "EXIT_OK",
    "EXIT_FAIL",
    "EXIT_USAGE",
    "EXIT_PRECONDITION",
    "EXIT_CAP",
]
