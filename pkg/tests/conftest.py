import pytest

from beilc.graphs import disjoint_union, empty_graph, graph, path_graph


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def example_8v():
    """Six-vertex path with a two-edge tail hanging off vertex 3."""
    return graph(8, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7), (7, 8)])


@pytest.fixture
def example_10v(example_8v):
    """The 8-vertex example plus a disjoint edge 9-10."""
    return graph(10, list(example_8v.edges) + [(9, 10)])


@pytest.fixture
def two_k2():
    return disjoint_union(path_graph(2), path_graph(2))


@pytest.fixture
def p3_plus_k1():
    return disjoint_union(path_graph(3), empty_graph(1))
