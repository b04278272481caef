"""
3-Coloring Reduction

Builds a group-testing instance from a graph with 2^l - 1 edges, turns a
proper 3-coloring into an (l+2)-test separating family, and extracts a
coloring with at most 2^delta colors from any separating family of l+delta
tests.

Vertex layout of the instance: vertices 0..2^l-2 stand for the graph edges
e_1..e_{2^l-1} (edge m is vertex m-1), vertices 2^l-1..2^l-2+n stand for the
graph nodes. Edge layout: the 2^l-1 "big" edges {all nodes, e_m} first, then
for each e_m = (i, j) the pairs {i, e_m} and {j, e_m}.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..core import Hypergraph, TestFamily, outcome_matrix, verify
from ..errors import (
    BadEdgeCountError,
    NotProperError,
    NotThreeColorsError,
    NotValidFamilyError,
    SupportTooLargeError,
)
from .graph import Coloring, Graph, PaddingRecord, apply_padding, first_conflict, padding_plan

logger = logging.getLogger(__name__)

# Color index -> (row l+1, row l+2) code.
COLOR_CODES = {0: (0, 0), 1: (0, 1), 2: (1, 0)}


@dataclass(frozen=True)
class ReductionInstance:
    graph: Graph
    hypergraph: Hypergraph
    ell: int
    padding_record: Optional[PaddingRecord] = None

    @property
    def num_edge_vertices(self) -> int:
        """2^l - 1, also the offset of the first node-vertex."""
        return (1 << self.ell) - 1

    def edge_vertex(self, m: int) -> int:
        """Hypergraph vertex of graph edge e_m, m in 1..2^l-1."""
        return m - 1

    def node_vertex(self, i: int) -> int:
        return self.num_edge_vertices + i

    def big_edge_index(self, m: int) -> int:
        return m - 1

    def pair_edge_index(self, m: int, endpoint: int) -> int:
        """Index of {endpoint node of e_m, e_m}; endpoint 0 or 1 in the edge's input order."""
        return self.num_edge_vertices + 2 * (m - 1) + endpoint


@dataclass(frozen=True)
class ColoringExtraction:
    coloring: Coloring
    delta: int
    support: Tuple[int, ...]


def reduce_3col_to_gt(graph: Graph, padding_record: Optional[PaddingRecord] = None) -> ReductionInstance:
    """
    Raises:
        BadEdgeCountError: the edge count is not 2^l - 1 with l >= 2
    """
    count = graph.m
    if count < 3 or (count + 1) & count:
        raise BadEdgeCountError(f"edge count {count} is not of the form 2^l - 1 with l >= 2; pad the graph first")
    ell = (count + 1).bit_length() - 1
    nodes = frozenset(range(count, count + graph.n))

    big = [nodes | {m - 1} for m in range(1, count + 1)]
    pairs = []
    for m, (i, j) in enumerate(graph.edges, start=1):
        pairs.append(frozenset((count + i, m - 1)))
        pairs.append(frozenset((count + j, m - 1)))
    hypergraph = Hypergraph(count + graph.n, tuple(big + pairs))
    logger.debug(f"Reduction: l={ell}, |V_H|={hypergraph.n}, |E_H|={hypergraph.m}")
    return ReductionInstance(graph, hypergraph, ell, padding_record)


def pad_and_reduce(graph: Graph, force_3chromatic: bool = False) -> ReductionInstance:
    record = padding_plan(graph, force_3chromatic)
    return reduce_3col_to_gt(apply_padding(graph, record), record)


def coloring_to_tests(instance: ReductionInstance, coloring: Coloring) -> TestFamily:
    """
    The (l+2)-test family: edge-vertex column m is (binary m over l rows,
    most significant bit first, 0, 0); node-vertex column i is (0, ..., 0, code
    of its color) with codes 00, 01, 10 for colors 0, 1, 2.

    Raises:
        NotThreeColorsError: the coloring does not use exactly the colors 0, 1, 2
        NotProperError: some graph edge has equally colored endpoints
    """
    graph, ell = instance.graph, instance.ell
    conflict = first_conflict(graph, coloring)
    used = {coloring[v] for v in range(graph.n)}
    if used != set(COLOR_CODES):
        raise NotThreeColorsError(used)
    if conflict is not None:
        raise NotProperError(conflict)

    offset = instance.num_edge_vertices
    matrix = np.zeros((ell + 2, instance.hypergraph.n), dtype=bool)
    for m in range(1, offset + 1):
        for row in range(ell):
            matrix[row, instance.edge_vertex(m)] = (m >> (ell - 1 - row)) & 1
    for i in range(graph.n):
        high, low = COLOR_CODES[coloring[i]]
        matrix[ell, offset + i] = high
        matrix[ell + 1, offset + i] = low

    family = TestFamily.from_matrix(matrix)
    report = verify(instance.hypergraph, family)
    if not report.valid:
        raise NotValidFamilyError(report.counterexample)
    return family


def _unseparated_big_pair(instance: ReductionInstance, family: TestFamily) -> Optional[Tuple[int, int]]:
    rows = outcome_matrix(instance.hypergraph, family)[: instance.num_edge_vertices]
    first_seen = {}
    for index, row in enumerate(np.packbits(rows, axis=1)):
        first = first_seen.setdefault(row.tobytes(), index)
        if first != index:
            return (first, index)
    return None


def extract_coloring(instance: ReductionInstance, family: TestFamily) -> ColoringExtraction:
    """
    Color each node by its column restricted to sup(w), w the OR of all
    node-vertex columns, read as a binary number over the support rows in order.

    Raises:
        SupportTooLargeError: |sup(w)| > delta = |family| - l, which a
            separating family cannot produce; carries an unseparated big-edge pair
        NotValidFamilyError: the family does not separate the instance
    """
    if family.n != instance.hypergraph.n:
        raise ValueError(f"family is over {family.n} vertices, instance has {instance.hypergraph.n}")
    delta = family.k - instance.ell
    offset = instance.num_edge_vertices
    node_columns = family.matrix[:, offset:]
    support = tuple(np.flatnonzero(node_columns.any(axis=1)).tolist())

    if len(support) > max(delta, 0):
        pair = _unseparated_big_pair(instance, family)
        logger.error(f"Support {support} exceeds delta={delta}; unseparated pair {pair}")
        raise SupportTooLargeError(support, delta, pair)

    report = verify(instance.hypergraph, family)
    if not report.valid:
        raise NotValidFamilyError(report.counterexample)

    colors = {}
    for i in range(instance.graph.n):
        value = 0
        for row in support:
            value = (value << 1) | int(node_columns[row, i])
        colors[i] = value
    coloring = Coloring(colors)

    conflict = first_conflict(instance.graph, coloring)
    if conflict is not None:
        raise NotProperError(conflict)
    logger.info(f"Extracted {coloring.num_colors} colors from {family.k} tests (delta={delta})")
    return ColoringExtraction(coloring, delta, support)


def tests_to_coloring(instance: ReductionInstance, family: TestFamily) -> Coloring:
    return extract_coloring(instance, family).coloring
