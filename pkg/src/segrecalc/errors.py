"""Exception hierarchy with stable machine-readable codes.

Every error that can surface through the CLI carries a short ``code`` string
that is echoed in JSON diagnostics, so scripted callers can dispatch on the
code instead of parsing messages.
"""

from __future__ import annotations


class SegrecalcError(Exception):
    """Base class for all package errors."""

    code = "error"


class RingMismatchError(SegrecalcError):
    code = "ring-mismatch"


class InvalidArgumentError(SegrecalcError):
    code = "invalid-argument"


class NonlinearSubstitutionError(SegrecalcError):
    code = "nonlinear-substitution"


class NotHomogeneousError(SegrecalcError):
    code = "not-homogeneous"


class AmbientMismatchError(SegrecalcError):
    code = "ambient-mismatch"


class NonInvertibleClassError(SegrecalcError):
    code = "non-invertible-class"


class SupportViolationError(SegrecalcError):
    """A class claimed to live on X has coefficients below codim X."""

    code = "invalid-class"


class OutOfRangeError(SegrecalcError):
    code = "out-of-range"


class ContainmentError(SegrecalcError):
    """X is not a subscheme of Y (the defining ideals fail I_Y <= I_X)."""

    code = "containment"


class NotAMorphismError(SegrecalcError):
    """The given forms have a base point on the source scheme."""

    code = "not-a-morphism"


class GenericityFailureError(SegrecalcError):
    """Random choices failed to be generic within the retry budget.

    ``index`` records which projective degree g_i was being computed.
    """

    code = "genericity-failure"

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class InternalConsistencyError(SegrecalcError):
    """A cross-check the engine runs on itself failed (e.g. a Segre class

    came out non-integral, or two seeds disagreed)."""

    code = "internal-consistency"


class PreconditionError(SegrecalcError):
    code = "precondition-violation"


class SourceError(SegrecalcError):
    """Error in an input program, with 1-based line/column position."""

    code = "parse-error"

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class UndefinedIdentifierError(SourceError):
    code = "undefined-identifier"


class DuplicateDefinitionError(SourceError):
    code = "duplicate-definition"


class NoRingError(SourceError):
    code = "no-ring"


class JobError(SegrecalcError):
    """Bad or missing CLI job parameters."""

    code = "bad-job"
