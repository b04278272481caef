"""
Adaptive Identification

Round-based search for the contaminated edge. Each round fixes a balance
parameter epsilon (1/4, 1/8, ...). A sub-round picks the shortest prefix of
the vertices sorted by (degree in E', id) whose intersecting-edge count lies
in [eps|E'|, (1-eps)|E'|], tests it and keeps the consistent side of E'.
When no such prefix exists epsilon halves while it is above 1/d; after that
the remaining candidates are resolved with one verified non-adaptive family.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import AbstractSet, List, Optional, Tuple

import numpy as np

from ..config import AdaptiveConfig
from ..construct import ConstructionParams, randomized_construct
from ..core import Hypergraph, OutcomeVector, VertexSet, compute_d, decode, outcome
from ..errors import AmbiguousError, NoMatchError, OracleInconsistentError
from .oracle import ContaminationOracle

logger = logging.getLogger(__name__)

LOOP = "loop"
FALLBACK = "fallback"
INITIAL_EPSILON = Fraction(1, 4)


@dataclass(frozen=True)
class TranscriptStep:
    test: VertexSet
    outcome: bool
    phase: str
    epsilon: Fraction


@dataclass
class Round:
    epsilon: Fraction
    sub_rounds: int = 0


@dataclass
class Transcript:
    """Every test issued during one run, in order, plus the round schedule."""
    steps: List[TranscriptStep] = field(default_factory=list)
    rounds: List[Round] = field(default_factory=list)
    result: Optional[int] = None

    @property
    def num_tests(self) -> int:
        return len(self.steps)

    @property
    def loop_tests(self) -> int:
        return sum(1 for step in self.steps if step.phase == LOOP)

    @property
    def fallback_used(self) -> bool:
        return any(step.phase == FALLBACK for step in self.steps)

    def replays_against(self, contaminated: AbstractSet[int]) -> bool:
        """True if every recorded outcome matches the outcome against `contaminated`."""
        return all(outcome(step.test, contaminated) == step.outcome for step in self.steps)


def find_balanced_prefix(restricted: Hypergraph, epsilon: Fraction) -> Optional[VertexSet]:
    """
    Shortest degree-sorted prefix whose intersecting-edge count reaches
    eps|E'|, provided that count is also at most (1-eps)|E'|.

    The count is nondecreasing in the prefix length, so checking the first
    prefix that reaches the lower end decides whether any prefix qualifies.
    """
    m = restricted.m
    if m < 2:
        raise ValueError("a balanced prefix needs at least two candidate edges")
    epsilon = Fraction(epsilon)
    if not 0 < epsilon <= INITIAL_EPSILON:
        raise ValueError(f"epsilon must lie in (0, 1/4], got {epsilon}")

    incidence = restricted.incidence
    n = restricted.n
    degree = incidence.sum(axis=0)
    order = np.lexsort((np.arange(n), degree))
    position = np.empty(n, dtype=np.int64)
    position[order] = np.arange(n)
    # Prefix length at which each edge is first met, minus one.
    first_hit = np.sort(np.where(incidence, position[None, :], n).min(axis=1))

    needed = math.ceil(epsilon * m)
    length = int(first_hit[needed - 1]) + 1
    count = int(np.searchsorted(first_hit, length, side="left"))
    if count > (1 - epsilon) * m:
        return None
    return frozenset(order[:length].tolist())


def adaptive_identify(hypergraph: Hypergraph, oracle: ContaminationOracle, seed: int = 0,
                      alpha: float = AdaptiveConfig.FALLBACK_ALPHA,
                      max_attempts: int = AdaptiveConfig.FALLBACK_ATTEMPTS) -> Tuple[int, Transcript]:
    """
    Identify the contaminated edge by querying the oracle.

    Args:
        hypergraph: the instance
        oracle: answers tests against a hidden edge of the instance
        seed: seed of the non-adaptive fallback construction
        alpha: confidence parameter of the fallback construction
        max_attempts: retry budget of the fallback construction

    Returns:
        (edge index, transcript)

    Raises:
        OracleInconsistentError: the answers match no edge of the instance
    """
    transcript = Transcript()
    active = list(range(hypergraph.m))
    # d of the original instance drives the stop rule for the whole run.
    d = compute_d(hypergraph)
    epsilon = INITIAL_EPSILON
    transcript.rounds.append(Round(epsilon))

    while len(active) > 1:
        restricted = hypergraph.restrict(active)
        prefix = find_balanced_prefix(restricted, epsilon)

        if prefix is not None:
            answer = oracle.answer(prefix)
            transcript.steps.append(TranscriptStep(prefix, answer, LOOP, epsilon))
            transcript.rounds[-1].sub_rounds += 1
            before = len(active)
            active = [i for i in active if outcome(prefix, hypergraph.edges[i]) == answer]
            logger.debug(f"eps={epsilon}: test of {len(prefix)} vertices -> {int(answer)}, |E'| {before} -> {len(active)}")
            if not active:
                raise OracleInconsistentError("no candidate edge is consistent with the oracle's answers")
            continue

        if epsilon > Fraction(1, d):
            epsilon /= 2
            transcript.rounds.append(Round(epsilon))
            logger.debug(f"No balanced prefix, halving epsilon to {epsilon}")
            continue

        logger.info(f"Falling back to a non-adaptive family for the last {len(active)} candidates")
        construction = randomized_construct(
            restricted, ConstructionParams(alpha=alpha, seed=seed, max_attempts=max_attempts)
        )
        answers = []
        for test in construction.family.tests:
            answer = oracle.answer(test)
            answers.append(answer)
            transcript.steps.append(TranscriptStep(test, answer, FALLBACK, epsilon))
        try:
            local = decode(restricted, construction.family, OutcomeVector(tuple(answers)))
        except (NoMatchError, AmbiguousError) as exc:
            raise OracleInconsistentError(f"fallback decoding failed: {exc}") from exc
        active = [active[local]]

    transcript.result = active[0]
    logger.info(f"Identified edge {transcript.result} with {transcript.num_tests} tests")
    return transcript.result, transcript
