"""Exception hierarchy shared by the solver, enumerator, parser and oracle."""


class PolyprojError(Exception):
    pass


class NumericalBreakdown(PolyprojError):
    """The simplex could not find an admissible pivot; the input is ill-conditioned."""


class DimensionTooLarge(PolyprojError):
    pass


class ParseError(PolyprojError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ProjectionUnbounded(PolyprojError):
    def __init__(self, theta_deg):
        self.theta_deg = theta_deg
        super().__init__(f"projection is unbounded in direction theta={theta_deg:.6g} deg")


class EmptyPolytope(PolyprojError):
    pass


class NoJunctionFound(PolyprojError):
    """Every sample in the searched arc returned the search vertex."""


class VertexBudgetExceeded(PolyprojError):
    pass


class TooManyBases(PolyprojError):
    pass


class UnboundedOrEmpty(PolyprojError):
    pass
