import pytest

from wellcov import Graph, generate


@pytest.fixture
def c4() -> Graph:
    return generate("cycle:n=4").graph


@pytest.fixture
def c5() -> Graph:
    return generate("cycle:n=5").graph


@pytest.fixture
def c7() -> Graph:
    return generate("cycle:n=7").graph


@pytest.fixture
def p4() -> Graph:
    return generate("path:n=4").graph


@pytest.fixture
def petersen() -> Graph:
    return generate("petersen").graph


@pytest.fixture
def petersen_complement() -> Graph:
    return generate("petersen_complement").graph


@pytest.fixture
def star() -> Graph:
    # K_{1,3}: center 0, leaves 1..3
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
