"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands have incompatible dimensions."""


class NullSpaceDimensionError(ValueError):
    """Detected null space dimension is not exactly one."""

    def __init__(self, dimension: int, message: str = ""):
        self.dimension = dimension
        super().__init__(message or f"null space dimension is {dimension}, expected 1")


class EmptyInputError(ValueError):
    """An operation received an empty collection."""


class QuantumNumberMismatchError(ValueError):
    """Quantum numbers violate |m| <= ell or parity constraints."""


class DegenerateAlphaError(ValueError):
    """alpha = +-1: the shifted operator is nilpotent and the parameter maps are singular."""


class DegenerateBetaError(ValueError):
    """beta at a singular endpoint of the requested parameter map."""


class DimensionTooLargeError(ValueError):
    """Requested product-space dimension exceeds the supported cap."""
