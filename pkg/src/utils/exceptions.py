"""
Exception hierarchy for the Hermitian hull toolkit.
"""


class HullToolkitError(Exception):
    """Base class for every error raised on purpose by the toolkit."""


class FieldConstructionError(HullToolkitError, ValueError):
    """A finite field or one of its distinguished elements cannot be built."""


class InvalidParametersError(HullToolkitError, ValueError):
    """A code family parameter violates one of the construction assumptions.

    Attributes:
        assumption: stable identifier of the violated assumption
    """

    def __init__(self, assumption: str, message: str):
        super().__init__(message)
        self.assumption = assumption


class DimensionOutOfRangeError(HullToolkitError, ValueError):
    """A dimension, entanglement count or move size lies outside its admissible range."""
