"""
Separation Semantics

OR-outcomes of tests, pairwise separation, verification of a family against
an instance and decoding of an outcome vector back to an edge.
"""
import logging
from typing import AbstractSet, List

import numpy as np

from ..errors import AmbiguousError, NoMatchError
from .hypergraph import Hypergraph, OutcomeVector, SeparationReport, TestFamily

logger = logging.getLogger(__name__)


def outcome(test: AbstractSet[int], contaminated: AbstractSet[int]) -> bool:
    """y = 1 iff the test meets the contaminated set."""
    return not test.isdisjoint(contaminated)


def separates(test: AbstractSet[int], a: AbstractSet[int], b: AbstractSet[int]) -> bool:
    return outcome(test, a) != outcome(test, b)


def outcomes(family: TestFamily, contaminated: AbstractSet[int]) -> OutcomeVector:
    return OutcomeVector(tuple(outcome(test, contaminated) for test in family.tests))


def _check_compatible(hypergraph: Hypergraph, family: TestFamily):
    if family.n != hypergraph.n:
        raise ValueError(
            f"family is over {family.n} vertices but the hypergraph has {hypergraph.n}"
        )


def outcome_matrix(hypergraph: Hypergraph, family: TestFamily) -> np.ndarray:
    """
    Outcome table of every edge against every test.

    Returns:
        np.ndarray: |E| x k boolean matrix, row e is outcomes(family, e)
    """
    _check_compatible(hypergraph, family)
    hits = hypergraph.incidence.astype(np.int32) @ family.matrix.T.astype(np.int32)
    return hits > 0


def verify(hypergraph: Hypergraph, family: TestFamily) -> SeparationReport:
    """
    Check that every pair of distinct edges is separated by some test.

    Two edges are unseparated exactly when their outcome rows coincide, so the
    rows are grouped by value. The reported counterexample is the
    lexicographically first failing pair (a, b), a < b.
    """
    rows = np.packbits(outcome_matrix(hypergraph, family), axis=1)
    first_seen = {}
    best = None
    for index, row in enumerate(rows):
        key = row.tobytes()
        first = first_seen.setdefault(key, index)
        if first != index:
            pair = (first, index)
            if best is None or pair < best:
                best = pair
    if best is None:
        return SeparationReport(True)
    logger.debug(f"Family of {family.k} tests leaves edges {best} unseparated")
    return SeparationReport(False, best)


def decode(hypergraph: Hypergraph, family: TestFamily, y: OutcomeVector) -> int:
    """
    Recover the contaminated edge from its outcome vector.

    Raises:
        NoMatchError: no edge produces y
        AmbiguousError: several edges produce y (invalid family or corrupted y)
    """
    if len(y) != family.k:
        raise ValueError(f"outcome vector has {len(y)} bits but the family has {family.k} tests")
    rows = outcome_matrix(hypergraph, family)
    matches = np.flatnonzero(np.all(rows == y.as_array()[None, :], axis=1))
    if len(matches) == 0:
        raise NoMatchError("no edge is consistent with the outcome vector")
    if len(matches) > 1:
        raise AmbiguousError(matches.tolist())
    return int(matches[0])


def lint_family(family: TestFamily) -> List[int]:
    """Indices of empty tests, which never fire and separate nothing."""
    return [index for index, test in enumerate(family.tests) if not test]
