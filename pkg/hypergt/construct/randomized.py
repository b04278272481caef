"""
Randomized Construction

Samples a k x n test matrix with i.i.d. Bernoulli(p) entries, p = 1/d, and
retries with fresh seed substreams until `verify` accepts it (Las Vegas).
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config import ConstructionConfig
from ..core import Hypergraph, TestFamily, compute_beta, compute_d, verify
from ..errors import ExhaustedAttemptsError, SingleEdgeError
from .bounds import entry_probability, required_k, tight_k

logger = logging.getLogger(__name__)

SIZE_RULES = ("closed", "tight")


@dataclass(frozen=True)
class ConstructionParams:
    """
    Args:
        alpha: confidence parameter, failure probability per attempt < e^-alpha
        seed: base seed, attempt i draws from substream i
        max_attempts: Las Vegas retry budget
        p_override: entry probability replacing the default 1/d
        size_rule: "closed" for the closed-form k, "tight" for the union-bound k
    """
    alpha: float = ConstructionConfig.ALPHA
    seed: int = 0
    max_attempts: int = ConstructionConfig.MAX_ATTEMPTS
    p_override: Optional[float] = None
    size_rule: str = "closed"

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.max_attempts < 1:
            raise ValueError(f"max_attempts must be at least 1, got {self.max_attempts}")
        if self.p_override is not None and not 0.0 < self.p_override < 1.0:
            raise ValueError(f"p_override must lie in (0, 1), got {self.p_override}")
        if self.size_rule not in SIZE_RULES:
            raise ValueError(f"size_rule must be one of {SIZE_RULES}, got {self.size_rule!r}")


@dataclass(frozen=True)
class ConstructionResult:
    family: TestFamily
    k: int
    attempts_used: int
    beta_used: int
    d_used: int
    p_used: float


def attempt_generator(seed: int, attempt: int) -> np.random.Generator:
    """PCG64 generator for one attempt: SeedSequence(seed) spawned at key (attempt,)."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(attempt,)))
    )


def family_size(m: int, d: int, beta: int, alpha: float, size_rule: str = "closed",
                p: Optional[float] = None) -> int:
    if size_rule == "tight":
        return tight_k(m, d, beta, alpha, p)
    return required_k(m, d, beta, alpha)


def sample_family(n: int, k: int, p: float, rng: np.random.Generator) -> TestFamily:
    return TestFamily.from_matrix(rng.random((k, n)) < p)


def randomized_construct(hypergraph: Hypergraph, params: ConstructionParams = ConstructionParams(),
                         beta: Optional[int] = None) -> ConstructionResult:
    """
    Build a verified separating family.

    Args:
        hypergraph: instance with at least two edges
        params: construction parameters
        beta: use this beta instead of the exact scan (e.g. a sampled estimate)

    Raises:
        SingleEdgeError: fewer than two edges, nothing to separate
        ExhaustedAttemptsError: no valid family within max_attempts
    """
    if hypergraph.m < 2:
        raise SingleEdgeError("nothing to separate: the hypergraph has a single edge")
    d = compute_d(hypergraph)
    beta = compute_beta(hypergraph) if beta is None else beta
    p = entry_probability(d, params.p_override)
    k = family_size(hypergraph.m, d, beta, params.alpha, params.size_rule, p)
    logger.debug(f"Constructing k={k} tests (m={hypergraph.m}, d={d}, beta={beta}, p={p:.4f})")

    counterexample = None
    for attempt in range(params.max_attempts):
        family = sample_family(hypergraph.n, k, p, attempt_generator(params.seed, attempt))
        report = verify(hypergraph, family)
        if report.valid:
            logger.info(f"Valid family of {k} tests after {attempt + 1} attempt(s)")
            return ConstructionResult(family, k, attempt + 1, beta, d, p)
        counterexample = report.counterexample
        logger.debug(f"Attempt {attempt + 1} failed on edge pair {counterexample}")

    raise ExhaustedAttemptsError(params.max_attempts, counterexample)
