"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Syntax error in a polynomial expression, with a 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PreconditionError(Exception):
    """An operation was called on input that violates its contract.

    Raised for non-global orders where globality is required, for walk
    inputs that are not a Sagbi basis of their subalgebra, and for
    NextCone calls whose base weight lies outside the cone.
    """


class ResourceGuardError(Exception):
    """A configurable resource guard was exceeded.

    Construction loops hitting this may indicate a subalgebra with no
    finite Sagbi basis under the requested order.  When raised from a
    walk, ``report`` carries the partial trace accumulated so far.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
