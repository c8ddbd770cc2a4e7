"""Error taxonomy shared across the package."""


class IwagraphError(Exception):
    """Base class for all domain errors raised by this package."""


class ZeroElement(IwagraphError):
    """An operation that needs a nonzero ring element received zero."""


class NotAugmentationZero(IwagraphError):
    """Input is outside the augmentation-zero (resp. zero-constant-term) domain."""


class InvalidParameter(IwagraphError):
    """A parameter is outside its documented range (non-prime p, bad counts, ...)."""


class EmptyGraph(IwagraphError):
    """The graph has no vertices."""


class DisconnectedGraph(IwagraphError):
    """A connected graph was required."""


class DisconnectedTower(IwagraphError):
    """Some derived level is disconnected."""

    def __init__(self, level: int):
        super().__init__(f"derived graph at level {level} is disconnected")
        self.level = level


class SingularLaplacian(IwagraphError):
    """The voltage Laplacian determinant vanished; invariants are undefined."""


class UnsupportedShape(IwagraphError):
    """The graph does not match the special shape required by a fast path."""


class InvalidTarget(IwagraphError):
    """A prescribed invariant target violates the parity or sign constraints."""


class RepairFailed(IwagraphError):
    """Constructor post-conditions could not be re-established after repair."""


class InconsistentTail(IwagraphError):
    """The last four valuation rows do not fit the growth formula; raise the level cap."""


class NonIntegralFit(IwagraphError):
    """The fitted growth parameters are not nonnegative integers."""


class SchemaError(IwagraphError):
    """A graph-spec file failed validation."""
