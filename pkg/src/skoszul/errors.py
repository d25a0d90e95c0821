"""Exception hierarchy shared by the whole package.

Every error raised on purpose derives from SkoszulError, so callers can
catch one base class.  Mathematical *findings* (a check that evaluates to
false) are never exceptions; they travel inside reports.
"""


class SkoszulError(Exception):
    """Base class for all errors raised by this package."""


class ArityMismatch(SkoszulError):
    """Operands live in different polynomial rings (variable count or field)."""


class UndefinedColon(SkoszulError):
    """Colon ideal (J : I) requested with I the zero ideal."""


class InvalidExponent(SkoszulError):
    """An exponent outside the allowed range (e.g. bracket power with q = 0)."""


class NotStructural(SkoszulError):
    """An endomorphism image violates the shape x_i maps to s_i * x_i with s_i nonzero."""


class CharacteristicMismatch(SkoszulError):
    """Frobenius family requested over a field of the wrong characteristic."""


class EndoMismatch(SkoszulError):
    """Skew elements built over different twisting endomorphisms were combined."""


class ShapeMismatch(SkoszulError):
    """Matrix dimensions are incompatible for the requested operation."""


class LevelOutOfRange(SkoszulError):
    """A homological level outside the valid range of the complex."""


class NoSolution(SkoszulError):
    """The linear system X * M = B is infeasible."""


class NonHomogeneous(SkoszulError):
    """Degree bounds for the graded solver cannot be established."""


class NotACycle(SkoszulError):
    """lift_cycle received a vector P with P * d_l != 0."""


class InvariantViolation(SkoszulError):
    """A solve that theory guarantees to succeed failed; indicates a bug
    or a violated caller assertion (flatness / Koszul regularity)."""


class NonMonomialSequence(SkoszulError):
    """An operation needing reduction modulo a monomial ideal got a
    sequence that does not generate one."""


class FieldUnsupported(SkoszulError):
    """Operation requires a finite prime field."""


class DegenerateIdeal(SkoszulError):
    """Fedder computations need a proper nonzero ideal."""


class EmptySequence(SkoszulError):
    """The phi-Koszul complex needs at least one sequence element."""


class ParseError(SkoszulError):
    """Malformed polynomial or descriptor text."""
