"""Exception types shared across the toolkit."""


class TDPairError(Exception):
    """Base class for toolkit errors."""


class NotDiagonalizable(TDPairError):
    """Minimal polynomial is not squarefree."""


class IrrationalSpectrum(TDPairError):
    """Minimal polynomial has a factor without rational roots."""


class NotAPath(TDPairError):
    """The eigenspace support graph is not a simple path."""


class NotTDPair(TDPairError):
    """An operation that needs a verified TD pair got something else."""


class InternalInvariantViolation(TDPairError):
    """A structural identity that must hold for TD pairs failed."""


class Rho0NotOne(TDPairError):
    """The first split space is not one-dimensional."""


class BadParameter(TDPairError, ValueError):
    """A construction parameter is outside its admissible set."""


class ConstructionRejected(TDPairError):
    """A generated pair failed verification."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class FormSpaceDimension(TDPairError):
    """The space of invariant bilinear forms is not one-dimensional."""

    def __init__(self, k: int):
        super().__init__(f"invariant form space has dimension {k}, expected 1")
        self.k = k


class SolutionSpaceDimension(TDPairError):
    """An intertwiner space has dimension above one."""

    def __init__(self, k: int):
        super().__init__(f"intertwiner space has dimension {k}, expected at most 1")
        self.k = k
