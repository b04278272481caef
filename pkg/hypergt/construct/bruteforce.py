"""
Exhaustive Optimal Solver

Iterative deepening over families of k tests, tests encoded as n-bit integers
(bit j = vertex j) and chosen in increasing encoded order. Only desk-scale
instances are accepted; the problem is NP-hard.

Pruning:
  - tests are reduced to their edge hit-masks; tests with equal or
    complementary masks separate the same pairs, so only the smallest encoded
    test of each class is tried
  - a test must split at least one class of still-unseparated edges
  - with r tests left, every class must have at most 2^r edges
"""
import logging
from typing import List, Optional, Tuple

import numpy as np

from ..config import BruteForceConfig
from ..core import Hypergraph, TestFamily, info_lower_bound
from ..errors import TooLargeError

logger = logging.getLogger(__name__)


def _edge_masks(hypergraph: Hypergraph) -> List[Tuple[int, int]]:
    """(encoded test, edge hit-mask) for one representative per separation class."""
    n, m = hypergraph.n, hypergraph.m
    edge_bits = np.array([sum(1 << v for v in edge) for edge in hypergraph.edges], dtype=np.int64)
    encoded = np.arange(1 << n, dtype=np.int64)
    hits = (encoded[:, None] & edge_bits[None, :]) != 0
    packed = np.packbits(hits, axis=1, bitorder="little")
    full = (1 << m) - 1

    candidates = []
    seen = set()
    for test, row in zip(encoded.tolist(), packed):
        mask = int.from_bytes(row.tobytes(), "little")
        if mask == 0 or mask == full:
            continue
        key = min(mask, full ^ mask)
        if key in seen:
            continue
        seen.add(key)
        candidates.append((test, mask))
    return candidates


def _split(classes: List[int], mask: int) -> Optional[List[int]]:
    """Refine the unseparated classes by one test; None if nothing is split."""
    refined = []
    progress = False
    for members in classes:
        inside = members & mask
        outside = members & ~mask
        if inside and outside:
            progress = True
            if inside.bit_count() > 1:
                refined.append(inside)
            if outside.bit_count() > 1:
                refined.append(outside)
        else:
            refined.append(members)
    return refined if progress else None


def _search(candidates, start: int, classes: List[int], tests_left: int, chosen: List[int]) -> Optional[List[int]]:
    if not classes:
        return chosen
    if tests_left == 0:
        return None
    if max(members.bit_count() for members in classes) > (1 << tests_left):
        return None
    for index in range(start, len(candidates)):
        test, mask = candidates[index]
        refined = _split(classes, mask)
        if refined is None:
            continue
        found = _search(candidates, index + 1, refined, tests_left - 1, chosen + [test])
        if found is not None:
            return found
    return None


def optimal_bruteforce(hypergraph: Hypergraph, k_max: int,
                       max_vertices: int = BruteForceConfig.MAX_VERTICES,
                       max_edges: int = BruteForceConfig.MAX_EDGES) -> Optional[TestFamily]:
    """
    Minimum-size separating family with at most k_max tests.

    Returns:
        TestFamily or None: the lexicographically least optimal family in
        encoded order, or None when no family of size <= k_max exists

    Raises:
        TooLargeError: instance exceeds the vertex or edge caps
    """
    n, m = hypergraph.n, hypergraph.m
    if n > max_vertices or m > max_edges:
        raise TooLargeError(
            f"exhaustive search is capped at n <= {max_vertices}, |E| <= {max_edges} (got n={n}, |E|={m})"
        )
    if m == 1:
        return TestFamily(n, ())

    candidates = _edge_masks(hypergraph)
    logger.debug(f"{len(candidates)} inequivalent candidate tests over {n} vertices")
    everything = [(1 << m) - 1]
    # Fewer than ceil(log2 |E|) tests can never separate every pair.
    for k in range(info_lower_bound(hypergraph), k_max + 1):
        found = _search(candidates, 0, everything, k, [])
        if found is not None:
            logger.info(f"Optimal family has {k} tests")
            tests = [frozenset(v for v in range(n) if (test >> v) & 1) for test in found]
            return TestFamily(n, tuple(tests))
        logger.debug(f"No separating family of {k} tests")
    return None
