import io
from fractions import Fraction

import pytest

from hypergt.adaptive import (
    FALLBACK,
    LOOP,
    HiddenEdgeOracle,
    Round,
    StreamOracle,
    Transcript,
    adaptive_identify,
    find_balanced_prefix,
)
from hypergt.core import Hypergraph, compute_d, outcome
from hypergt.errors import OracleInconsistentError, ParseError
from hypergt.generators import adaptive_lb_instance, traditional


class SilentOracle:
    """Answers 0 to every test."""

    def answer(self, test) -> bool:
        return False


def _check_run(hypergraph: Hypergraph, index: int, transcript: Transcript) -> None:
    assert transcript.result == index
    assert transcript.replays_against(hypergraph.edges[index])
    d = compute_d(hypergraph)
    active = list(range(hypergraph.m))
    for step in transcript.steps:
        if step.phase == LOOP:
            kept = [i for i in active if outcome(step.test, hypergraph.edges[i]) == step.outcome]
            assert 0 < len(kept) < len(active)
            active = kept
        else:
            assert step.epsilon <= Fraction(1, d)


@pytest.mark.parametrize(
    "hypergraph",
    [adaptive_lb_instance(2), adaptive_lb_instance(3), adaptive_lb_instance(4),
     traditional(8, 2), traditional(10, 2), traditional(12, 3)],
    ids=["lb2", "lb3", "lb4", "trad8_2", "trad10_2", "trad12_3"],
)
def test_identifies_every_hidden_edge(hypergraph: Hypergraph) -> None:
    for index, edge in enumerate(hypergraph.edges):
        oracle = HiddenEdgeOracle(edge)
        found, transcript = adaptive_identify(hypergraph, oracle)
        assert found == index
        assert oracle.queries == transcript.num_tests
        _check_run(hypergraph, index, transcript)


def test_single_edge_needs_no_tests() -> None:
    found, transcript = adaptive_identify(Hypergraph(3, ({0, 2},)), HiddenEdgeOracle({0, 2}))
    assert found == 0
    assert transcript.num_tests == 0
    assert transcript.rounds == [Round(Fraction(1, 4), 0)]


def test_fallback_when_no_prefix_balances() -> None:
    # Every vertex meets 4 of the 5 edges, more than (1 - 1/4) * 5.
    hypergraph = adaptive_lb_instance(4)
    assert find_balanced_prefix(hypergraph, Fraction(1, 4)) is None
    found, transcript = adaptive_identify(hypergraph, HiddenEdgeOracle(hypergraph.edges[2]))
    assert found == 2
    assert transcript.loop_tests == 0
    assert transcript.fallback_used
    assert transcript.rounds == [Round(Fraction(1, 4), 0)]


def test_epsilon_halves_before_fallback() -> None:
    hypergraph = adaptive_lb_instance(8)
    found, transcript = adaptive_identify(hypergraph, HiddenEdgeOracle(hypergraph.edges[5]))
    assert found == 5
    assert [r.epsilon for r in transcript.rounds] == [Fraction(1, 4), Fraction(1, 8)]
    assert all(step.phase == FALLBACK and step.epsilon == Fraction(1, 8) for step in transcript.steps)


def test_find_balanced_prefix_on_singletons() -> None:
    hypergraph = Hypergraph(4, ({0}, {1}, {2}, {3}))
    assert find_balanced_prefix(hypergraph, Fraction(1, 4)) == frozenset({0})


def test_find_balanced_prefix_preconditions() -> None:
    with pytest.raises(ValueError):
        find_balanced_prefix(Hypergraph(2, ({0},)), Fraction(1, 4))
    with pytest.raises(ValueError):
        find_balanced_prefix(Hypergraph(2, ({0}, {1})), Fraction(1, 2))


def test_inconsistent_oracle() -> None:
    with pytest.raises(OracleInconsistentError):
        adaptive_identify(adaptive_lb_instance(4), SilentOracle())


def test_stream_oracle_protocol() -> None:
    replies = io.StringIO("1\n0\nmaybe\n")
    sent = io.StringIO()
    oracle = StreamOracle(replies, sent)
    assert oracle.answer(frozenset({2, 0}))
    assert not oracle.answer(frozenset())
    assert sent.getvalue() == "TEST 0 2\nTEST\n"
    with pytest.raises(ParseError):
        oracle.answer(frozenset({1}))
    with pytest.raises(ParseError):
        oracle.answer(frozenset({1}))
