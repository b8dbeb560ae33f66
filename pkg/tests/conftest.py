import pytest

from wgrindex import build_index, parse_graph

from helpers import G1_TEXT


@pytest.fixture
def g1():
    """Path graph of the string "aba": vertices 0..3, edges
    (0,1,a), (1,3,b), (3,2,a)."""
    return parse_graph(G1_TEXT)


@pytest.fixture
def g1_index(g1):
    return build_index(g1)
