"""Exception hierarchy shared by every poisekit module."""


class PoisekitError(Exception):
    """Base class for all library errors."""


class InvalidParams(PoisekitError, ValueError):
    pass


class Inconsistent(PoisekitError):
    """A linear system has no solution."""


class NotSolvable(Inconsistent):
    """Interpolation data cannot be matched by any polynomial of the degree."""


class NoFundamental(Inconsistent):
    """A point has no fundamental polynomial with respect to its set."""

    def __init__(self, index, degree):
        super().__init__(f"point #{index} has no {degree}-fundamental polynomial")
        self.index = index
        self.degree = degree


class EmptySet(PoisekitError, ValueError):
    pass


class DuplicatePoints(PoisekitError, ValueError):
    def __init__(self, first, second, point):
        super().__init__(f"points #{first} and #{second} coincide at {point}")
        self.indices = (first, second)


class OutOfScope(PoisekitError, ValueError):
    pass


class TheoremViolation(PoisekitError, AssertionError):
    """A proven statement failed on concrete input; indicates a bug."""


class DegenerateConfiguration(PoisekitError):
    pass


class ParseError(PoisekitError, ValueError):
    def __init__(self, message, position=None):
        where = f" at {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
        self.position = position


class ZeroDenominator(ParseError):
    pass
