"""Exception types shared across the package."""

from __future__ import annotations


class GaError(Exception):
    """Base class for every error raised by this package."""


class IndexOutOfRange(GaError):
    """Basis index outside the supported range 1..64."""


class SignatureMismatch(GaError):
    """Operands were built under different metric signatures."""


class ZeroMultivector(GaError):
    """The zero multivector has no inverse."""


class Singular(GaError):
    """No inverse exists.  ``witness`` is a nonzero Y with A*Y = 0."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class DimensionTooSmall(GaError):
    """Requested dimension cannot hold the value's highest generator."""


class DimensionTooLarge(GaError):
    """Value uses generators beyond the dimension this operation supports."""


class NotAVector(GaError):
    """Operand must be a pure grade-1 element."""


class ZeroVector(GaError):
    """Operand must be a nonzero vector."""


class CollinearPlane(GaError):
    """The two vectors do not span a plane."""


class NotUnitVersor(GaError):
    """Versor factors fail the unit condition."""


class NotInEvenSubalgebra(GaError):
    """Multivector has components outside the even subalgebra mapped to."""


class ZeroQuaternion(GaError):
    """The zero quaternion has no inverse."""


class WrongSignature(GaError):
    """Operation requires a specific metric signature."""


class UnboundVariable(GaError):
    """A variable has no value in the evaluation environment."""


class DomainError(GaError):
    """Evaluation left the operation's domain (negative sqrt, zero division)."""


class DegenerateNormal(GaError):
    """Surface gradient is identically null; no unit normal exists."""


class IoError(GaError):
    """File export failed."""


class SourceError(GaError):
    """Error tied to a span of an input statement.

    ``span`` is a half-open character range into ``source``.
    """

    def __init__(self, message: str, span: tuple[int, int] | None = None,
                 source: str | None = None):
        super().__init__(message)
        self.span = span
        self.source = source

    def caret_lines(self) -> list[str]:
        """Source excerpt with a caret marker, for terminal display."""
        if self.source is None or self.span is None:
            return []
        start, end = self.span
        width = max(1, end - start)
        return ["  " + self.source, "  " + " " * start + "^" * width]


class LexError(SourceError):
    """Input contains a character sequence that is not a token."""


class ParseError(SourceError):
    """Token stream does not match the grammar.

    ``expected`` lists the token descriptions that would have been valid.
    """

    def __init__(self, message: str, span=None, source=None,
                 expected: frozenset[str] = frozenset()):
        super().__init__(message, span, source)
        self.expected = expected


class EvalError(SourceError):
    """A statement failed while evaluating; wraps the underlying error."""
