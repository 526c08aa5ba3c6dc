"""Exception types shared across the package."""


class KnotError(Exception):
    """Base class for all domain errors."""


class MalformedCode(KnotError):
    """Input text is not syntactically valid PD / DT / Gauss code."""


class NotFourValent(KnotError):
    """An edge label is not used exactly twice."""


class NonPlanar(KnotError):
    """The rotation system does not embed in the sphere (F != V + 2)."""


class Disconnected(KnotError):
    """The underlying 4-valent graph is not connected."""


class NotAKnot(KnotError):
    """The diagram has more than one link component."""


class Unrealizable(KnotError):
    """No planar diagram realizes the given code."""


class NotReduced(KnotError):
    """The diagram has a nugatory crossing (or is too small to be reduced)."""


class NotPrime(KnotError):
    """The diagram is a diagrammatic connected sum."""


class InvalidDiagram(KnotError):
    """Structural invariants of a combinatorial map are violated."""


class InvalidSite(KnotError):
    """A flype site does not describe a legal flype on the given diagram."""


class InvalidTangle(KnotError):
    """A tangle cannot be closed into a valid alternating diagram."""


class ConfigurationA(KnotError):
    """Two dependent flypes sit in the configuration that forces a
    connected sum; impossible for prime knots."""


class LimitExceeded(KnotError):
    """A node or edge cap was hit before the search finished.

    The partially built structure, if any, is attached as ``partial``.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class TooLarge(KnotError):
    """Crossing count exceeds a hard cost cap (exponential algorithm)."""


class InvalidReport(KnotError):
    """A symmetry report fails its own invariants."""
