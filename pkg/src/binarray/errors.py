"""Exception types shared across the package."""


class BinArrayError(Exception):
    """Base class for all errors raised by :mod:`binarray`."""


class RangeError(BinArrayError, ValueError):
    """An index, prefix length or parameter lies outside the admissible range."""


class UnsupportedError(BinArrayError):
    """The operation needs a polynomial (finite-degree) initial condition."""


class DimensionError(BinArrayError, ValueError):
    """Two representation vectors live in spaces of different dimension."""


class NotApplicable(BinArrayError):
    """A hypothesis of an identity is not met, so the identity says nothing.

    Distinct from a failed identity: harness code counts these as skips.
    """

    def __init__(self, hypothesis: str):
        super().__init__(hypothesis)
        self.hypothesis = hypothesis


class InvariantError(BinArrayError, AssertionError):
    """A structural invariant (for example Pascal's recurrence in a window) failed."""
