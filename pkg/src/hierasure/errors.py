"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument violates a documented precondition."""


class ConstructionError(RuntimeError):
    """A randomized or budgeted construction failed to produce its object."""


class InvalidBasisError(ParameterError):
    """A tuple of extension-field elements is linearly dependent over the base."""


class MissingEigenvectorError(ValueError):
    """A matrix in a candidate set does not have the requested eigenvector.

    ``index`` is the position of the offending matrix.
    """

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"matrix {index} does not have the basis as an eigenvector")
