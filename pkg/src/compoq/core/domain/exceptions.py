"""Domain exceptions."""


class CompoqError(Exception):
    """Base compoq exception."""


class InvalidParameterError(CompoqError):
    """Parameter outside its documented domain."""


class BoundTooSmallError(CompoqError):
    """Part set materialized below the size that is being asked for."""


class NonInvertibleSeriesError(CompoqError):
    """Series has no inverse over the integers."""


class DivergentSeriesError(CompoqError):
    """Dirichlet series or weighted sum does not converge at the requested point."""


class UnknownNameError(CompoqError):
    """Unknown generating function, identity or asymptotic name."""


class InfeasibleComputationError(CompoqError):
    """Requested size is beyond the configured feasibility limits."""
