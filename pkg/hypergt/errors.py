from typing import Optional, Sequence, Tuple


class HyperGTError(Exception):
    pass


class InvariantViolation(HyperGTError):
    pass


class SingleEdgeError(HyperGTError):
    """Raised when an operation needs at least two edges."""
    pass


class TooLargeError(HyperGTError):
    pass


class NoMatchError(HyperGTError):
    """No edge is consistent with the outcome vector."""
    pass


class AmbiguousError(HyperGTError):
    """Several edges are consistent with the outcome vector."""

    def __init__(self, indices: Sequence[int]):
        self.indices = list(indices)
        super().__init__(f"Outcome vector is consistent with edges {self.indices}")


class ExhaustedAttemptsError(HyperGTError):
    def __init__(self, attempts: int, counterexample: Optional[Tuple[int, int]]):
        self.attempts = attempts
        self.counterexample = counterexample
        super().__init__(
            f"No valid family after {attempts} attempts "
            f"(last unseparated pair: {counterexample})"
        )


class OracleInconsistentError(HyperGTError):
    """The oracle answered in a way no edge of the instance can explain."""
    pass


class BadEdgeCountError(HyperGTError):
    pass


class NotProperError(HyperGTError):
    def __init__(self, edge: Tuple[int, int]):
        self.edge = edge
        super().__init__(f"Coloring is not proper on edge {edge}")


class NotThreeColorsError(HyperGTError):
    def __init__(self, colors: Sequence[int]):
        self.colors = sorted(set(colors))
        super().__init__(f"Expected exactly the colors 0, 1, 2; got {self.colors}")


class SupportTooLargeError(HyperGTError):
    def __init__(self, support: Sequence[int], delta: int, pair: Optional[Tuple[int, int]]):
        self.support = list(support)
        self.delta = delta
        self.pair = pair
        super().__init__(
            f"Node-vertex support {self.support} exceeds delta={delta}; "
            f"unseparated edge pair: {pair}"
        )


class NotValidFamilyError(HyperGTError):
    def __init__(self, counterexample: Optional[Tuple[int, int]]):
        self.counterexample = counterexample
        super().__init__(f"Test family does not separate edges {counterexample}")


class ParseError(HyperGTError):
    def __init__(self, line: int, reason: str, column: Optional[int] = None):
        self.line = line
        self.reason = reason
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {reason}")
