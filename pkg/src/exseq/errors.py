from __future__ import annotations


class NotExceptionalError(ValueError):
    """Raised when an operation needs an exceptional pair/sequence and gets none.

    ``pair`` holds the offending ordered pair of modules when known.
    """

    def __init__(self, message: str, pair: tuple | None = None):
        super().__init__(message)
        self.pair = pair


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug."""
