"""
Hypergraph Data Model

Value types for non-adaptive generalized group testing: the instance
hypergraph, a family of tests, an outcome vector and a separation report.
All of them are immutable once constructed.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

import numpy as np

from ..errors import InvariantViolation

VertexSet = FrozenSet[int]


def _as_vertex_set(vertices: Iterable[int]) -> VertexSet:
    return frozenset(int(v) for v in vertices)


@dataclass(frozen=True)
class Hypergraph:
    """
    Ground set {0..n-1} plus the ordered list of candidate contaminated sets.

    Args:
        n: number of ground-set vertices
        edges: ordered edges, each a non-empty subset of {0..n-1}; duplicates
            are rejected since they can never be separated
    """
    n: int
    edges: Tuple[VertexSet, ...]

    def __post_init__(self):
        edges = tuple(_as_vertex_set(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise InvariantViolation(f"vertex count must be non-negative, got {self.n}")
        if not edges:
            raise InvariantViolation("a hypergraph needs at least one edge")
        seen = {}
        for index, edge in enumerate(edges):
            if not edge:
                raise InvariantViolation(f"edge {index} is empty")
            out_of_range = [v for v in edge if v < 0 or v >= self.n]
            if out_of_range:
                raise InvariantViolation(
                    f"edge {index} has vertices {sorted(out_of_range)} outside 0..{self.n - 1}"
                )
            if edge in seen:
                raise InvariantViolation(f"edge {index} duplicates edge {seen[edge]}")
            seen[edge] = index

    @property
    def m(self) -> int:
        """Number of edges |E|."""
        return len(self.edges)

    @cached_property
    def incidence(self) -> np.ndarray:
        """|E| x n boolean incidence matrix."""
        matrix = np.zeros((self.m, self.n), dtype=bool)
        for row, edge in enumerate(self.edges):
            matrix[row, sorted(edge)] = True
        return matrix

    @cached_property
    def edge_index(self) -> dict:
        return {edge: index for index, edge in enumerate(self.edges)}

    def index_of(self, edge: Iterable[int]) -> int:
        """Index of an edge given as a vertex collection; KeyError if absent."""
        return self.edge_index[_as_vertex_set(edge)]

    def restrict(self, indices: Sequence[int]) -> "Hypergraph":
        """Sub-instance on the same ground set keeping the given edges in order."""
        return Hypergraph(self.n, tuple(self.edges[i] for i in indices))


@dataclass(frozen=True)
class TestFamily:
    """
    Ordered tests T_1..T_k over the ground set {0..n-1}. Empty tests are legal
    but never fire; `lint_family` reports them.
    """
    # Keep pytest from trying to collect this class.
    __test__ = False

    n: int
    tests: Tuple[VertexSet, ...] = ()

    def __post_init__(self):
        tests = tuple(_as_vertex_set(t) for t in self.tests)
        object.__setattr__(self, "tests", tests)
        for index, test in enumerate(tests):
            out_of_range = [v for v in test if v < 0 or v >= self.n]
            if out_of_range:
                raise InvariantViolation(
                    f"test {index} has vertices {sorted(out_of_range)} outside 0..{self.n - 1}"
                )

    def __len__(self) -> int:
        return len(self.tests)

    @property
    def k(self) -> int:
        return len(self.tests)

    @cached_property
    def matrix(self) -> np.ndarray:
        """k x n boolean test matrix, T[i, j] = (j in T_i)."""
        matrix = np.zeros((self.k, self.n), dtype=bool)
        for row, test in enumerate(self.tests):
            matrix[row, sorted(test)] = True
        return matrix

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "TestFamily":
        matrix = np.asarray(matrix, dtype=bool)
        if matrix.ndim != 2:
            raise ValueError(f"expected a 2-d matrix, got shape {matrix.shape}")
        tests = tuple(frozenset(np.flatnonzero(row).tolist()) for row in matrix)
        return cls(matrix.shape[1], tests)

    def extended(self, extra: Iterable[Iterable[int]]) -> "TestFamily":
        """New family with the extra tests appended."""
        return TestFamily(self.n, self.tests + tuple(_as_vertex_set(t) for t in extra))


@dataclass(frozen=True)
class OutcomeVector:
    """Bits y_1..y_k of a family against one contaminated set."""
    bits: Tuple[bool, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(bool(b) for b in self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    def as_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=bool)


@dataclass(frozen=True)
class SeparationReport:
    valid: bool
    counterexample: Optional[Tuple[int, int]] = field(default=None)

    def __post_init__(self):
        if self.valid != (self.counterexample is None):
            raise InvariantViolation("a report is valid exactly when it has no counterexample")
        if self.counterexample is not None and self.counterexample[0] == self.counterexample[1]:
            raise InvariantViolation("counterexample must name two distinct edges")
