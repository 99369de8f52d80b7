"""Exception hierarchy for the spline-space engine."""


class EngineError(Exception):
    """Base class for all engine errors."""


class SpecError(EngineError):
    """Invalid user input (spec file, token string, matrix shape...)."""


class EmptyBasis(SpecError):
    pass


class MissingConstant(SpecError):
    pass


class DegenerateInterval(SpecError):
    pass


class OutOfInterval(SpecError):
    pass


class NotLowerTriangular(SpecError):
    pass


class NonPositiveDiagonal(SpecError):
    pass


class BadFirstRowOrColumn(SpecError):
    pass


class CountMismatch(SpecError):
    pass


class KnotsNotIncreasing(SpecError):
    pass


class DimensionMismatch(SpecError):
    pass


class SizeMismatch(SpecError):
    pass


class ComputationError(EngineError):
    """Numerical failure that carries a verdict about the space."""


class SingularSystem(ComputationError):
    """The block collocation system for one transition function is singular."""

    def __init__(self, ell, rcond=None):
        self.ell = ell
        self.rcond = rcond
        msg = f"singular transition system for function index {ell}"
        if rcond is not None:
            msg += f" (rcond={rcond:.3e})"
        super().__init__(msg)


class SingularChangeOfBasis(ComputationError):
    def __init__(self, interval):
        self.interval = interval
        super().__init__(
            f"degenerate local Bernstein family on interval {interval}"
        )


class DependentTransitions(ComputationError):
    """A transition function vanishes to higher order than prescribed."""

    def __init__(self, ell, endpoint):
        self.ell = ell
        self.endpoint = endpoint
        super().__init__(
            f"transition function {ell} vanishes too often at endpoint "
            f"{endpoint!r}: the derived space is not an ECP-space"
        )


class NearZeroWeight(ComputationError):
    def __init__(self, level, x):
        self.level = level
        self.x = x
        super().__init__(f"weight function w_{level} vanishes near x={x}")
