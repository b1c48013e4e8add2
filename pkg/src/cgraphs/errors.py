"""Exception hierarchy shared by all modules."""


class CGraphError(Exception):
    """Base class for every error raised by this package."""


class EmptySequence(CGraphError, ValueError):
    def __init__(self):
        super().__init__("creation sequence must contain at least one part")


class NonPositivePart(CGraphError, ValueError):
    """A part is zero or negative. ``index`` is 1-based."""

    def __init__(self, index: int, value: int):
        self.index = index
        self.value = value
        super().__init__(f"part {index} is {value}; every part must be a positive integer")


class OddLengthUnsupported(CGraphError, ValueError):
    def __init__(self, k: int):
        self.k = k
        super().__init__(f"closed-form path needs an even number of parts, got k={k}")


class OrderTooSmall(CGraphError, ValueError):
    def __init__(self, n: int, minimum: int):
        self.n = n
        super().__init__(f"order n={n} is below the minimum {minimum}")


class ConsistencyFailure(CGraphError, RuntimeError):
    """An internal identity that must always hold was violated."""


class NoConvergence(CGraphError, RuntimeError):
    pass


class Disconnected(CGraphError, ValueError):
    def __init__(self):
        super().__init__("graph is not connected")


class TooLarge(CGraphError, ValueError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"n={n} exceeds the scan cap {cap}")


class SequenceParseError(CGraphError, ValueError):
    pass
