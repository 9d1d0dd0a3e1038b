"""Exception types shared across the package."""


class StarhessError(Exception):
    """Base class for all errors raised by starhess."""


class MissingAssignment(StarhessError, KeyError):
    def __init__(self, index: int):
        super().__init__(index)
        self.index = index

    def __str__(self):
        return f"no value assigned to a{self.index}"


class InsufficientAlpha(StarhessError, IndexError):
    """The alpha sequence does not reach an index that the computation needs."""

    def __init__(self, index: int, available: int):
        super().__init__(index, available)
        self.index = index
        self.available = available

    def __str__(self):
        return f"alpha index {self.index} requested but only {self.available} values are available"


class TruncationTooSmall(StarhessError, ValueError):
    pass


class NotMonic(StarhessError, ValueError):
    pass


class SymmetryViolation(StarhessError, ValueError):
    def __init__(self, n: int, m: int):
        super().__init__(n, m)
        self.n = n
        self.m = m

    def __str__(self):
        return f"P_{self.n} has a nonzero coefficient at x^{self.m}, breaking the fold symmetry"


class InsufficientMoments(StarhessError, ValueError):
    pass


class HeightOutOfRange(StarhessError, IndexError):
    """A weight table was queried past its declared height bound."""


class NotSquarefree(StarhessError, ValueError):
    pass


class RootsNotAllPositive(StarhessError, ValueError):
    def __init__(self, count: int, degree: int):
        super().__init__(count, degree)
        self.count = count
        self.degree = degree

    def __str__(self):
        return f"only {self.count} of {self.degree} roots lie in (0, oo)"


class CannotSeparate(StarhessError, RuntimeError):
    pass


class IndexOutOfRange(StarhessError, IndexError):
    pass
