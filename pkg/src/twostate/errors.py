"""Exception types shared across the library."""


class InvalidInputError(ValueError):
    """A caller-supplied value violates a documented precondition."""


class NumericalError(RuntimeError):
    """An iterative numerical routine could not reach its tolerance."""


class QuadratureError(NumericalError):
    """Adaptive quadrature exhausted its depth budget above tolerance."""
