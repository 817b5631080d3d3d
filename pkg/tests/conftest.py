import pytest
from hypothesis import strategies as st

from models.graph import Graph
from models.instance import Instance


@st.composite
def graphs(draw, min_nodes=0, max_nodes=10):
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [pair for pair, keep in zip(pairs, chosen) if keep])


@st.composite
def instances(draw, min_nodes=0, max_nodes=8, max_k=4, allow_empty=False):
    graph = draw(graphs(min_nodes=min_nodes, max_nodes=max_nodes))
    k = draw(st.integers(min_value=1, max_value=max_k))
    colors = st.sets(st.integers(min_value=1, max_value=k), min_size=0 if allow_empty else 1)
    lists = draw(st.lists(colors, min_size=graph.n, max_size=graph.n))
    return Instance(graph, k, lists)


@pytest.fixture
def p3_instance():
    """Path 0-1-2 with every list {1}"""
    return Instance(Graph.path(3), 1, [[1], [1], [1]])


@pytest.fixture
def edge_conflict_instance():
    """Edge 0-1, both lists {1}: not admissible"""
    return Instance(Graph(2, [(0, 1)]), 1, [[1], [1]])


@pytest.fixture
def isolated_pair_instance():
    """Two isolated vertices, both lists {1}: admissible"""
    return Instance(Graph(2), 1, [[1], [1]])
