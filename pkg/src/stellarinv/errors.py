"""Exception types shared across the package."""


class DegenerateInputError(ValueError):
    """The input sits on a singular configuration for the requested quantity."""


class DivergentSumError(ArithmeticError):
    """A permutation-symmetrized sum diverges due to (near-)coincident roots."""
