"""
Graphs and Colorings

Simple undirected graphs for the coloring reduction, proper-coloring checks
and padding with 2-colorable components (plus an optional triangle) so the
edge count becomes 2^l - 1.
"""
import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..errors import InvariantViolation

logger = logging.getLogger(__name__)

GraphEdge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: Tuple[GraphEdge, ...] = ()

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        seen = set()
        for index, (u, v) in enumerate(edges):
            if u == v:
                raise InvariantViolation(f"edge {index} is a self-loop on vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvariantViolation(f"edge {index} ({u}, {v}) leaves 0..{self.n - 1}")
            key = frozenset((u, v))
            if key in seen:
                raise InvariantViolation(f"edge {index} ({u}, {v}) is a duplicate")
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.edges)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Relabel nodes to 0..n-1 in sorted node order, edges in networkx order."""
        label = {node: index for index, node in enumerate(sorted(graph.nodes()))}
        return cls(len(label), tuple((label[u], label[v]) for u, v in graph.edges()))


@dataclass(frozen=True)
class Coloring:
    """Vertex to color map; read-only, hashed by its sorted items."""
    colors: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        colors = {int(v): int(c) for v, c in dict(self.colors).items()}
        object.__setattr__(self, "colors", MappingProxyType(colors))
        negative = [v for v, c in self.colors.items() if c < 0]
        if negative:
            raise InvariantViolation(f"negative color on vertices {sorted(negative)}")

    def __getitem__(self, vertex: int) -> int:
        return self.colors[vertex]

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.colors.items())))

    @classmethod
    def from_sequence(cls, colors: Sequence[int]) -> "Coloring":
        return cls(dict(enumerate(colors)))

    @property
    def num_colors(self) -> int:
        return len(set(self.colors.values()))


def _check_total(graph: Graph, coloring: Coloring):
    missing = [v for v in range(graph.n) if v not in coloring.colors]
    if missing:
        raise ValueError(f"coloring misses vertices {missing[:10]}")


def first_conflict(graph: Graph, coloring: Coloring) -> Optional[GraphEdge]:
    """First edge whose endpoints share a color, or None."""
    _check_total(graph, coloring)
    for u, v in graph.edges:
        if coloring[u] == coloring[v]:
            return (u, v)
    return None


def verify_coloring(graph: Graph, coloring: Coloring) -> bool:
    return first_conflict(graph, coloring) is None


@dataclass(frozen=True)
class PaddingRecord:
    """Components appended by pad_graph; vertex ids refer to the padded graph."""
    original_n: int
    original_m: int
    triangle: Tuple[int, ...] = ()
    path: Tuple[int, ...] = ()

    @property
    def added_edges(self) -> int:
        return (3 if self.triangle else 0) + max(0, len(self.path) - 1)


def _next_target(edge_count: int) -> int:
    """Smallest 2^l - 1 >= edge_count with l >= 2."""
    ell = 2
    while (1 << ell) - 1 < edge_count:
        ell += 1
    return (1 << ell) - 1


def padding_plan(graph: Graph, force_3chromatic: bool = False) -> PaddingRecord:
    if graph.m < 1:
        raise ValueError("padding needs a graph with at least one edge")
    next_vertex = graph.n
    edge_count = graph.m
    triangle = ()
    if force_3chromatic:
        triangle = (next_vertex, next_vertex + 1, next_vertex + 2)
        next_vertex += 3
        edge_count += 3
    missing = _next_target(edge_count) - edge_count
    path = tuple(range(next_vertex, next_vertex + missing + 1)) if missing else ()
    return PaddingRecord(graph.n, graph.m, triangle, path)


def apply_padding(graph: Graph, record: PaddingRecord) -> Graph:
    edges = list(graph.edges)
    n = graph.n
    if record.triangle:
        a, b, c = record.triangle
        edges += [(a, b), (b, c), (a, c)]
        n = c + 1
    if record.path:
        edges += list(zip(record.path, record.path[1:]))
        n = record.path[-1] + 1
    return Graph(n, tuple(edges))


def pad_graph(graph: Graph, force_3chromatic: bool = False) -> Graph:
    """
    Pad to 2^l - 1 edges (l >= 2) with a disjoint path, after an optional
    disjoint triangle. Paths are 2-colorable, so the chromatic number is kept
    (or raised to exactly 3 by the triangle).
    """
    record = padding_plan(graph, force_3chromatic)
    if record.added_edges:
        logger.info(f"Padding graph from {graph.m} to {graph.m + record.added_edges} edges")
    return apply_padding(graph, record)


def extend_coloring(coloring: Coloring, record: PaddingRecord) -> Coloring:
    """Color the padding: triangle 0, 1, 2 and path alternating 0, 1."""
    colors: Dict[int, int] = dict(coloring.colors)
    for color, vertex in enumerate(record.triangle):
        colors[vertex] = color
    for step, vertex in enumerate(record.path):
        colors[vertex] = step % 2
    return Coloring(colors)
