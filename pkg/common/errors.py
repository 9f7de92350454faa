"""
ERROR HIERARCHY
===============
Every failure raised by the toolkit derives from ``PlateauError`` and carries
the process exit code the CLI maps it to:

    2  usage / malformed input
    3  precondition violated (bad parameters, degenerate rows, ...)
    4  desk-scale resource cap exceeded

Analysis outcomes that are answers rather than failures (NotPlateaued,
NotApplicable, NoSelfDual) are returned as values and never raised.
"""

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_CAP = 4


class PlateauError(Exception):
    """Base class for toolkit errors."""

    exit_code: int = EXIT_PRECONDITION


# ── Finite fields ────────────────────────────────────────────────────

class NonPrime(PlateauError):
    """Characteristic is not a prime."""


class ReduciblePoly(PlateauError):
    """Supplied modulus polynomial is not monic irreducible of degree m."""


class NoPrimitiveElement(PlateauError):
    """No generator of the multiplicative group was found (internal error)."""


class FieldTooLarge(PlateauError):
    exit_code = EXIT_CAP


class DivisionByZero(PlateauError, ZeroDivisionError):
    """Inverse of the zero element requested."""


# ── Cyclotomic integers ──────────────────────────────────────────────

class MixedRootOrder(PlateauError):
    """Operands live in cyclotomic rings of different orders."""


class NotAUnit(PlateauError):
    """Automorphism index is not coprime to p."""


class EvenPrime(PlateauError):
    """Operation needs an odd prime."""


# ── Codes ────────────────────────────────────────────────────────────

class TooLarge(PlateauError):
    exit_code = EXIT_CAP


class InconsistentInput(PlateauError):
    """Weight distribution does not describe a code of the stated size."""


class InvalidParameters(PlateauError):
    pass


class DegenerateRows(PlateauError):
    """Generator rows are linearly dependent."""


class NotSelfOrthogonalInput(PlateauError):
    pass


# ── Front end ────────────────────────────────────────────────────────

class UsageError(PlateauError):
    exit_code = EXIT_USAGE


class MalformedInput(PlateauError):
    exit_code = EXIT_USAGE
