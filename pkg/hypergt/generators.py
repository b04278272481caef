"""
Instance Generators

Named instance families (all d-subsets, d-subsets of a sub-ground-set with
isolated padding vertices, all d-subsets of d+1 vertices) and seeded random
d-uniform hypergraphs. Subsets are enumerated in lexicographic order of their
sorted vertex lists.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import GeneratorConfig
from .core import Hypergraph
from .errors import TooLargeError

logger = logging.getLogger(__name__)

GENERATOR_KINDS = ("traditional", "claim6", "adaptive_lb", "random")


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated instance. n_prime is used by claim6 only, m and seed by random only."""
    kind: str
    n: int = 0
    d: int = 1
    n_prime: Optional[int] = None
    m: Optional[int] = None
    seed: int = 0

    def describe(self) -> str:
        if self.kind == "traditional":
            return f"traditional(n={self.n},d={self.d})"
        if self.kind == "claim6":
            return f"claim6(n={self.n},n_prime={self.n_prime},d={self.d})"
        if self.kind == "adaptive_lb":
            return f"adaptive_lb(d={self.d})"
        return f"random(n={self.n},m={self.m},d={self.d},seed={self.seed})"


def _check_cap(count: int, max_edges: int):
    if count > max_edges:
        raise TooLargeError(f"{count} edges exceed the cap of {max_edges}")


def traditional(n: int, d: int, max_edges: int = GeneratorConfig.MAX_EDGES) -> Hypergraph:
    """All d-subsets of {0..n-1}."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    _check_cap(math.comb(n, d), max_edges)
    return Hypergraph(n, tuple(itertools.combinations(range(n), d)))


def claim6_instance(n: int, n_prime: int, d: int, max_edges: int = GeneratorConfig.MAX_EDGES) -> Hypergraph:
    """All d-subsets of the first n' vertices; vertices n'..n-1 stay isolated."""
    if not 1 <= d <= n_prime <= n:
        raise ValueError(f"need 1 <= d <= n' <= n, got d={d}, n'={n_prime}, n={n}")
    _check_cap(math.comb(n_prime, d), max_edges)
    return Hypergraph(n, tuple(itertools.combinations(range(n_prime), d)))


def adaptive_lb_instance(d: int) -> Hypergraph:
    """d+1 vertices; edge i is the complement of vertex i."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    vertices = frozenset(range(d + 1))
    return Hypergraph(d + 1, tuple(vertices - {i} for i in range(d + 1)))


def random_hypergraph(n: int, m: int, d: int, seed: int,
                      max_edges: int = GeneratorConfig.MAX_EDGES) -> Hypergraph:
    """
    m distinct d-subsets sampled uniformly with a seeded PCG64 generator.

    Sparse requests use rejection sampling; when m is more than half of
    C(n, d) the subsets are enumerated and a random permutation picks m.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    total = math.comb(n, d)
    if m > total:
        raise TooLargeError(f"cannot draw {m} distinct {d}-subsets out of {total}")
    _check_cap(m, max_edges)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed)))

    if 2 * m > total:
        _check_cap(total, max_edges)
        subsets = list(itertools.combinations(range(n), d))
        order = rng.permutation(total)[:m]
        return Hypergraph(n, tuple(subsets[i] for i in order))

    edges = []
    seen = set()
    while len(edges) < m:
        edge = frozenset(rng.choice(n, size=d, replace=False).tolist())
        if edge not in seen:
            seen.add(edge)
            edges.append(edge)
    return Hypergraph(n, tuple(edges))


def generate(spec: GenSpec, max_edges: int = GeneratorConfig.MAX_EDGES) -> Hypergraph:
    """Dispatch a GenSpec to its generator."""
    logger.debug(f"Generating {spec.describe()}")
    if spec.kind == "traditional":
        return traditional(spec.n, spec.d, max_edges)
    if spec.kind == "claim6":
        if spec.n_prime is None:
            raise ValueError("claim6 needs n_prime")
        return claim6_instance(spec.n, spec.n_prime, spec.d, max_edges)
    if spec.kind == "adaptive_lb":
        return adaptive_lb_instance(spec.d)
    if spec.kind == "random":
        if spec.m is None:
            raise ValueError("random needs m")
        return random_hypergraph(spec.n, spec.m, spec.d, spec.seed, max_edges)
    raise ValueError(f"unknown generator kind {spec.kind!r}, expected one of {GENERATOR_KINDS}")
