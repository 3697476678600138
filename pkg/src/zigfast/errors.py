"""Exception types raised by zigfast."""


class ZigfastError(Exception):
    """Base class for all zigfast errors."""


class NonConvergence(ZigfastError):
    """Root finding failed to bracket or converge at the requested tolerance."""


class InvalidSpec(ZigfastError):
    """A density violated the assumptions of the table builder."""


class QuadratureFailure(ZigfastError):
    """Adaptive quadrature could not certify an integral to tolerance."""


class CurvatureViolation(ZigfastError):
    """A chord dipped below the density inside an overhang box."""


class EmptyWeights(ZigfastError):
    """Alias table construction was given all-zero weights."""


class FormatError(ZigfastError):
    """Table file failed schema, version, or checksum validation."""


class BitBudgetExceeded(ZigfastError):
    """More low bits requested from a uniform word than can be reused safely."""
