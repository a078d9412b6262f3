"""Exception types shared across the package."""


class LimbforgeError(Exception):
    """Base class for all limbforge errors."""


class NotATreeError(LimbforgeError):
    """The graph is not connected and acyclic."""


class MissingRootError(LimbforgeError):
    """A rooted operation was applied to a graph without a root."""


class UnknownVertexError(LimbforgeError):
    """A vertex id does not exist in the graph."""


class NotACutEdgeError(LimbforgeError):
    """The edge is not a bridge (or does not exist)."""


class NonzeroConstantTermError(LimbforgeError):
    """The multiset transform needs a series with zero constant term."""


class BadLimbSizeError(LimbforgeError):
    """The forbidden-limb size is outside the valid range."""


class NoOccurrenceError(LimbforgeError):
    """The requested limb does not occur at the given vertex."""


class NoRootError(LimbforgeError):
    """The bisection target is not bracketed in (0, 1)."""


class NonPositiveError(LimbforgeError):
    """Radius estimation needs positive coefficients beyond degree 0."""


class TooLargeError(LimbforgeError):
    """The input exceeds the supported desk-scale size."""


class HypothesisViolatedError(LimbforgeError):
    """A construction hypothesis failed; `clause` names the violated one."""

    def __init__(self, clause: str, message: str = ""):
        self.clause = clause
        super().__init__(f"{clause}: {message}" if message else clause)
