import networkx as nx
import pytest

from chromatic import find_coloring
from hypergt.core import Hypergraph
from hypergt.generators import traditional
from hypergt.reduction import Coloring, Graph


@pytest.fixture(scope="session")
def two_singletons() -> Hypergraph:
    return Hypergraph(2, ({0}, {1}))


@pytest.fixture(scope="session")
def three_singletons() -> Hypergraph:
    return Hypergraph(3, ({0}, {1}, {2}))


@pytest.fixture(scope="session")
def traditional_10_2() -> Hypergraph:
    return traditional(10, 2)


@pytest.fixture(scope="session")
def disjoint_blocks() -> Hypergraph:
    """16 pairwise-disjoint edges of size 4 over 64 vertices."""
    return Hypergraph(64, tuple(range(4 * i, 4 * i + 4) for i in range(16)))


@pytest.fixture(scope="session")
def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture(scope="session")
def petersen_coloring(petersen: Graph) -> Coloring:
    colors = find_coloring(petersen, 3)
    assert colors is not None
    return Coloring.from_sequence(colors)


@pytest.fixture(scope="session")
def triangle() -> Graph:
    return Graph(3, ((0, 1), (1, 2), (0, 2)))
