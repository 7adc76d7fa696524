"""Exception hierarchy for code construction and verification."""

from typing import Optional


class CodeError(Exception):
    """Base class for every error raised by the library."""


class PauliParseError(CodeError, ValueError):
    """Raised when a Pauli row contains a character outside {I,X,Y,Z}."""

    def __init__(self, message: str, position: Optional[int] = None, line: Optional[int] = None):
        super().__init__(message)
        self.position = position
        self.line = line


class DimensionMismatchError(CodeError, ValueError):
    """Raised when operands disagree on qubit count or matrix shape."""


class InvalidParameterError(CodeError, ValueError):
    """Raised for out-of-range lengths, family indices or labels."""


class PastingError(CodeError):
    """Raised when a paste precondition fails or an alignment cannot cancel."""


class EnumerationCapError(CodeError):
    """Raised when an exhaustive enumeration exceeds its configured cap."""


class UnknownBlockError(CodeError, KeyError):
    """Raised when a catalog name is not known."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown block"


class VerificationError(CodeError):
    """Raised when a constructed code fails verification.

    Args:
        message: Human readable reason
        report: The failing verification report, when one was produced
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
