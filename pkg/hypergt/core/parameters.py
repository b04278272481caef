"""
Instance Parameters

d (maximum edge size), beta (minimum over edge pairs of the larger one-sided
difference) and the information-theoretic reference ceil(log2 |E|).
"""
import logging

import numpy as np

from ..errors import SingleEdgeError
from .hypergraph import Hypergraph

logger = logging.getLogger(__name__)

# Budget of int32 cells held at once by the pairwise beta scan.
_BETA_BLOCK_CELLS = 1 << 22


def compute_d(hypergraph: Hypergraph) -> int:
    return max(len(edge) for edge in hypergraph.edges)


def info_lower_bound(hypergraph: Hypergraph) -> int:
    """ceil(log2 |E|), computed exactly on integers."""
    return (hypergraph.m - 1).bit_length()


def _pair_beta(incidence: np.ndarray, sizes: np.ndarray, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    inter = np.einsum("ij,ij->i", incidence[rows], incidence[cols])
    return np.maximum(sizes[rows] - inter, sizes[cols] - inter)


def compute_beta(hypergraph: Hypergraph) -> int:
    """
    Exact beta = min over unordered pairs e != e' of max(|e \\ e'|, |e' \\ e|).

    Raises:
        SingleEdgeError: beta is undefined for fewer than two edges
    """
    m = hypergraph.m
    if m < 2:
        raise SingleEdgeError("beta is undefined for a hypergraph with a single edge")
    incidence = hypergraph.incidence.astype(np.int32)
    sizes = incidence.sum(axis=1)
    block = max(1, _BETA_BLOCK_CELLS // m)
    best = None
    for start in range(0, m - 1, block):
        stop = min(m, start + block)
        inter = incidence[start:stop] @ incidence.T
        left = sizes[start:stop, None] - inter
        right = sizes[None, :] - inter
        larger = np.maximum(left, right)
        # Only pairs (i, j) with j > i.
        upper = np.arange(m)[None, :] > np.arange(start, stop)[:, None]
        if not upper.any():
            continue
        value = int(larger[upper].min())
        best = value if best is None else min(best, value)
    return best


def estimate_beta(hypergraph: Hypergraph, samples: int, seed: int) -> int:
    """
    beta over a seeded random sample of edge pairs.

    A minimum over a subset of pairs, so the estimate is never below the exact
    beta. Falls back to the exact scan when the sample would cover every pair.
    """
    m = hypergraph.m
    if m < 2:
        raise SingleEdgeError("beta is undefined for a hypergraph with a single edge")
    if samples >= m * (m - 1) // 2:
        return compute_beta(hypergraph)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed)))
    rows = rng.integers(0, m, size=samples)
    cols = rng.integers(0, m - 1, size=samples)
    cols = cols + (cols >= rows)
    incidence = hypergraph.incidence.astype(np.int32)
    sizes = incidence.sum(axis=1)
    estimate = int(_pair_beta(incidence, sizes, rows, cols).min())
    logger.warning(f"beta estimated from {samples} sampled pairs (upper estimate): {estimate}")
    return estimate
